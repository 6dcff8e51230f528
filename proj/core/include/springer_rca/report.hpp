#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace springer_rca {

/// Concrete counterexample attached to a failed check.
struct Witness {
  int degree = -1;
  std::string row_label;
  std::string col_label;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t comparisons = 0;
  std::optional<Witness> witness;

  static CheckResult pass(std::string name, std::size_t comparisons) {
    return CheckResult{std::move(name), true, comparisons, std::nullopt};
  }
  static CheckResult fail(std::string name, std::size_t comparisons, Witness w) {
    return CheckResult{std::move(name), false, comparisons, std::move(w)};
  }
};

/// Outcome of one verification suite on one parameter set.
struct VerificationReport {
  std::string claim;
  int n = 0;
  int k = 0;
  int max_degree = 0;
  std::vector<CheckResult> checks;
  /// Suite-specific data (counts, dimensions, kernel vectors), serialized verbatim.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
  /// First failing check, if any.
  const CheckResult* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
};

}  // namespace springer_rca
