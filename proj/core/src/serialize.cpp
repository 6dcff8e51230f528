#include "springer_rca/serialize.hpp"

#include <sstream>

#include "springer_rca/version.hpp"

namespace springer_rca {

namespace {

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json params_json(const Params& p, int max_degree) {
  return Json{{"n", p.n()}, {"k", p.k()}, {"max_degree", max_degree}};
}

Json envelope(const Params& p, int max_degree, const std::string& command, Json results) {
  return Json{{"params", params_json(p, max_degree)},
              {"command", command},
              {"results", std::move(results)},
              {"version", kVersion}};
}

Json basis_json(const GradedBasis& basis) {
  auto counts = Json::array();
  auto strata = Json::array();
  for (int d = 0; d <= basis.max_degree(); ++d) {
    auto points = Json::array();
    for (const auto& a : basis.stratum(d)) points.push_back(a.to_string());
    counts.push_back(basis.stratum_size(d));
    strata.push_back(Json{{"degree", d}, {"points", std::move(points)}});
  }
  return Json{{"counts", std::move(counts)}, {"strata", std::move(strata)}};
}

Json operator_json(const GradedOperator& op) {
  auto blocks = Json::array();
  for (int d = 0; d <= op.max_source_degree(); ++d) {
    const auto& b = op.blocks()[static_cast<std::size_t>(d)];
    auto entries = Json::array();
    for (const auto& e : b.entries()) entries.push_back(Json::array({e.row, e.col, to_string(e.value)}));
    blocks.push_back(Json{{"degree", d}, {"rows", b.rows()}, {"cols", b.cols()}, {"entries", std::move(entries)}});
  }
  return Json{{"shift", op.shift()}, {"max_source_degree", op.max_source_degree()}, {"blocks", std::move(blocks)}};
}

Json qpolynomial_json(const QPolynomial& q) {
  auto out = Json::array();
  for (const auto& c : q.coefficients()) out.push_back(c.get_str());
  return out;
}

Json report_json(const VerificationReport& report) {
  auto checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}, {"comparisons", c.comparisons}};
    if (c.witness) {
      const auto& w = *c.witness;
      entry["witness"] = Json{{"degree", w.degree}, {"row", w.row_label},     {"col", w.col_label},
                              {"expected", w.expected}, {"actual", w.actual}, {"detail", w.detail}};
    }
    checks.push_back(std::move(entry));
  }
  return Json{{"claim", report.claim},
              {"n", report.n},
              {"k", report.k},
              {"max_degree", report.max_degree},
              {"passed", report.passed()},
              {"checks", std::move(checks)},
              {"details", report.details}};
}

std::string basis_csv(const GradedBasis& basis) {
  std::ostringstream out;
  out << "degree,index,point\n";
  for (int d = 0; d <= basis.max_degree(); ++d) {
    const auto s = basis.stratum(d);
    for (std::size_t i = 0; i < s.size(); ++i) out << d << ',' << i << ',' << csv_field(s[i].to_string()) << '\n';
  }
  return out.str();
}

std::string operator_csv(const GradedOperator& op) {
  std::ostringstream out;
  out << "degree,row,col,source,target,value\n";
  const auto& basis = op.basis();
  for (int d = 0; d <= op.max_source_degree(); ++d) {
    const auto src = basis.stratum(d);
    const auto dst = basis.stratum(d + op.shift());
    for (const auto& e : op.blocks()[static_cast<std::size_t>(d)].entries()) {
      out << d << ',' << e.row << ',' << e.col << ',' << csv_field(src[e.col].to_string()) << ','
          << csv_field(dst[e.row].to_string()) << ',' << to_string(e.value) << '\n';
    }
  }
  return out.str();
}

std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "claim,check,passed,comparisons,degree,row,col,expected,actual,detail\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out << csv_field(r.claim) << ',' << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ','
          << c.comparisons;
      if (c.witness) {
        const auto& w = *c.witness;
        out << ',' << w.degree << ',' << csv_field(w.row_label) << ',' << csv_field(w.col_label) << ','
            << csv_field(w.expected) << ',' << csv_field(w.actual) << ',' << csv_field(w.detail);
      } else {
        out << ",,,,,,";
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace springer_rca
