#include "springer_rca/core_model.hpp"
#include "springer_rca/semigroup_oracle.hpp"

namespace springer_rca {

VerificationReport compare_with_fixed_points(const Params& p, int max_degree, const OracleBudget& budget) {
  p.require_coprime();
  VerificationReport report;
  report.claim = "semigroup ideals of colength d match admissible cocharacters of degree d";
  report.n = p.n();
  report.k = p.k();
  report.max_degree = max_degree;

  auto ideal_counts = nlohmann::ordered_json::array();
  auto fixed_counts = nlohmann::ordered_json::array();
  CheckResult check = CheckResult::pass("ideal-count", 0);
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t ideals = count_ideals(p.n(), p.k(), d, budget);
    const std::size_t fixed = enumerate_fixed_points(p, d).size();
    ideal_counts.push_back(ideals);
    fixed_counts.push_back(fixed);
    ++check.comparisons;
    if (check.passed && ideals != fixed) {
      check.passed = false;
      check.witness = Witness{d, "", "", std::to_string(ideals), std::to_string(fixed),
                              "ideal count differs from fixed-point count"};
    }
  }
  report.checks.push_back(std::move(check));
  report.details["ideal_counts"] = std::move(ideal_counts);
  report.details["fixed_point_counts"] = std::move(fixed_counts);
  return report;
}

}  // namespace springer_rca
