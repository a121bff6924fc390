#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tsys/lattice.hpp"

namespace tsys {

using Carrier = std::shared_ptr<const MeetSemilattice>;
using ElementPair = std::pair<Element, Element>;

/// A transfer system on a finite meet-semilattice of at most 64 elements.
///
/// The relation is stored as one 64-bit row per element: bit y of row x is
/// set iff x R y with x != y. Reflexive pairs are implicit. The rows, read
/// in order, are the canonical form: equality, hashing and ordering all
/// compare rows.
class TransferSystem {
 public:
  using Rows = std::vector<std::uint64_t>;

  /// The discrete transfer system (only reflexive pairs).
  explicit TransferSystem(Carrier carrier);

  /// Wraps `rows` without checking the axioms.
  static TransferSystem from_rows(Carrier carrier, Rows rows);
  static TransferSystem discrete(Carrier carrier) { return TransferSystem(std::move(carrier)); }
  static TransferSystem complete(Carrier carrier);

  const MeetSemilattice& carrier() const { return *carrier_; }
  const Carrier& carrier_ptr() const { return carrier_; }
  const Rows& rows() const { return rows_; }

  /// x R y, including x == y.
  bool related(Element x, Element y) const {
    return x == y || ((rows_[x] >> y) & 1u) != 0;
  }

  /// Strict pairs in canonical (row-major) order.
  std::vector<ElementPair> pairs() const;
  std::size_t pair_count() const;

  friend bool operator==(const TransferSystem& a, const TransferSystem& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator<(const TransferSystem& a, const TransferSystem& b) {
    return a.rows_ < b.rows_;
  }

 private:
  TransferSystem(Carrier carrier, Rows rows) : carrier_(std::move(carrier)), rows_(std::move(rows)) {}

  Carrier carrier_;
  Rows rows_;
};

struct RowsHash {
  std::size_t operator()(const TransferSystem::Rows& rows) const noexcept;
};

struct TransferSystemHash {
  std::size_t operator()(const TransferSystem& t) const noexcept { return RowsHash{}(t.rows()); }
};

/// Result of checking the axioms. For a restriction failure the witness is
/// x R y, z <= y, and the missing pair is (x ∧ z, z).
struct Verdict {
  enum class Axiom { None, Refinement, Transitivity, Restriction };

  Axiom violated = Axiom::None;
  Element x = 0, y = 0, z = 0;

  bool ok() const { return violated == Axiom::None; }
  explicit operator bool() const { return ok(); }
  std::string describe() const;
};

Verdict is_transfer_system(const MeetSemilattice& carrier, std::span<const std::uint64_t> rows);
inline Verdict is_transfer_system(const TransferSystem& t) {
  return is_transfer_system(t.carrier(), t.rows());
}

/// Smallest transfer system containing `seed`. Every seed pair must be
/// comparable (x <= y); reflexive seeds are ignored.
TransferSystem closure(Carrier carrier, std::span<const ElementPair> seed);

/// closure(t ∪ {(x, y)}), computed incrementally from t.
TransferSystem extend(const TransferSystem& t, Element x, Element y);

/// Least x with x R top.
Element minimal_fibrant(const TransferSystem& t);

/// Thrown when an operation that needs a [1] x [n] carrier gets another one.
class WrongCarrier : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grid size n of the carrier; throws WrongCarrier if it is not [1] x [n].
int require_grid(const TransferSystem& t);

/// (1,i) R (1,j) with i < j implies (0,i) R (1,i).
bool is_liftable(const TransferSystem& t);

/// x R z and x <= y <= z imply y R z.
bool is_saturated(const TransferSystem& t);

/// (0,n) R (1,n); membership in Tam(n) for liftable systems.
bool has_full_right_vertical(const TransferSystem& t);

struct Stats {
  GridElement minimal_fibrant;
  int stationary = 0;  // k
  int extendable = 0;  // ℓ
  bool liftable = false;
  bool saturated = false;
};

Stats stats(const TransferSystem& t);

bool is_stationary(const TransferSystem& t, int b);
bool is_extendable(const TransferSystem& t, int b);

/// E(R) = {(z, y) : z <= x < y and x R y for some x}, as 64-bit rows.
struct DownwardClosure {
  TransferSystem::Rows rows;

  bool contains(Element z, Element y) const { return ((rows[z] >> y) & 1u) != 0; }
};

DownwardClosure downward_closure(const TransferSystem& t);

/// Raised when an internal construction yields something that fails the
/// axioms. Always a bug.
class InternalInvariant : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// R* = ((E(R)^op)^∇)^c: u R* v iff (v^∇, u^∇) is not in E(R).
TransferSystem dual(const TransferSystem& t, const DualityMap& d);

struct Split {
  Element pivot = 0;
  SubSemilattice lower_carrier;  // pivot↑^c (empty when pivot is the bottom)
  SubLattice upper_carrier;      // pivot↑
  TransferSystem lower;
  TransferSystem upper;
};

/// Splits t along its minimal fibrant element. The carrier must be a Lattice.
Split split(const TransferSystem& t);

class ComposeError : public std::invalid_argument {
 public:
  enum class Kind { NotRestrictionClosed, WrongMinimalFibrant, CarrierMismatch };

  ComposeError(Kind kind, Verdict witness, const std::string& what)
      : std::invalid_argument(what), kind_(kind), witness_(witness) {}

  Kind kind() const { return kind_; }
  const Verdict& witness() const { return witness_; }

 private:
  Kind kind_;
  Verdict witness_;
};

/// Re-embeds `lower` (on pivot↑^c) and `upper` (on pivot↑) into `lattice`.
/// Throws ComposeError unless `upper` has minimal fibrant element pivot and
/// the pair is restriction closed.
TransferSystem odot_compose(std::shared_ptr<const Lattice> lattice, Element pivot,
                            const TransferSystem& lower, const TransferSystem& upper);

/// {"n": n, "pairs": [[a,b,c,d], ...]} for grid carriers; other carriers
/// use {"size": s, "pairs": [[x,y], ...]}.
nlohmann::json to_json(const TransferSystem& t);

/// Inverse of to_json for grid systems. Throws std::invalid_argument on
/// malformed input or when the pairs do not form a transfer system.
TransferSystem grid_system_from_json(const nlohmann::json& j);

}  // namespace tsys
