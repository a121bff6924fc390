#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "tsys/transfer_system.hpp"

namespace tsys {

/// One cell of the stratification of transfer systems on [1] x [n].
struct StrataCell {
  int stationary = 0;  // k
  int extendable = 0;  // ℓ
  GridElement minimal_fibrant;
  bool liftable = false;
  bool saturated = false;
  bool full_right_vertical = false;  // (0,n) R (1,n)

  friend auto operator<=>(const StrataCell&, const StrataCell&) = default;
};

using StrataMap = std::map<StrataCell, std::size_t>;

struct EnumerationResult {
  /// Every transfer system on the carrier, sorted by canonical form.
  std::vector<TransferSystem> systems;
  /// Filled for [1] x [n] carriers only.
  StrataMap strata;
  /// discoveries[i]: how many times the search produced systems[i] by
  /// closing a proper subsystem plus one pair.
  std::vector<std::size_t> discoveries;
};

struct EnumerationOptions {
  std::size_t budget = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t count)
      : std::runtime_error("enumeration budget exceeded after " + std::to_string(count) + " systems"),
        count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

/// Breadth-first search from the discrete system: each known system is
/// extended by every absent comparable pair and closed. Deterministic.
EnumerationResult enumerate_all(Carrier carrier, EnumerationOptions options = {});

StrataMap stratify(const std::vector<TransferSystem>& systems);

/// |Tr([n])| == Catalan(n+1), by brute force.
bool count_catalan_check(int n);

}  // namespace tsys
