#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace tsys {

enum class Provenance { Paper, Trivial, Derived };

const char* to_string(Provenance p);

struct Check {
  std::string id;        // e.g. "T(4)" or "oracle n=3 L(3,2,1,(0,1))"
  Provenance provenance;
  std::string source;    // where the expected value comes from
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string suite;
  int max_n = 0;
  std::vector<Check> checks;
  /// Extra verdict line, used by the conjecture suite.
  std::string status;
  double wall_time_ms = 0.0;

  bool passed() const;
  /// First failing check in canonical order (smallest n first).
  const Check* first_failure() const;
  /// Deterministic unless include_timing is set.
  nlohmann::json to_json(bool include_timing = false) const;
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite `" + name + "`") {}
};

class SuiteBudgetExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// tables, oracle, duality, schroder, antichain, conjecture, saturated,
/// asymptotics.
const std::vector<std::string>& suite_names();

/// Default and largest accepted max_n for a suite.
int default_max_n(const std::string& suite);
int budget_max_n(const std::string& suite);

/// Runs a suite. max_n defaults per suite when absent. Throws UnknownSuite
/// or SuiteBudgetExceeded.
Report run_suite(const std::string& name, std::optional<int> max_n = std::nullopt);

}  // namespace tsys
