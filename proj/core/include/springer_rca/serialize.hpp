#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "springer_rca/core_model.hpp"
#include "springer_rca/graded_operator.hpp"
#include "springer_rca/qpolynomial.hpp"
#include "springer_rca/report.hpp"

namespace springer_rca {

using Json = nlohmann::ordered_json;

/// {"n", "k", "max_degree"}
Json params_json(const Params& p, int max_degree);

/// {params, command, results, version}
Json envelope(const Params& p, int max_degree, const std::string& command, Json results);

/// {"counts": [...], "strata": [{"degree", "points": ["(a,b)", ...]}, ...]}
Json basis_json(const GradedBasis& basis);

/// Blocks in coordinate format, entries [row, col, "p/q"] sorted by (degree, row, col).
Json operator_json(const GradedOperator& op);

/// Coefficients as decimal strings, constant term first.
Json qpolynomial_json(const QPolynomial& q);

Json report_json(const VerificationReport& report);

/// degree,index,point
std::string basis_csv(const GradedBasis& basis);
/// degree,row,col,source,target,value
std::string operator_csv(const GradedOperator& op);
/// claim,check,passed,comparisons,degree,row,col,expected,actual,detail
std::string reports_csv(const std::vector<VerificationReport>& reports);

}  // namespace springer_rca
