#include <gtest/gtest.h>

#include "springer_rca/rca_operators.hpp"
#include "springer_rca/serialize.hpp"
#include "springer_rca/verification.hpp"
#include "springer_rca/version.hpp"

using namespace springer_rca;

TEST(Serialize, EnvelopeShape) {
  const Params p(2, 3);
  const auto j = envelope(p, 3, "fixed-points", basis_json(build_graded_basis(p, 3)));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"params", "command", "results", "version"}));
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["results"]["counts"], (Json{1, 1, 2, 2}));
  EXPECT_EQ(j["results"]["strata"][2]["points"], (Json{"(0,2)", "(1,1)"}));
}

TEST(Serialize, OperatorEntriesAreSortedRationalStrings) {
  const auto b = make_basis(Params(2, 3), 3);
  const auto j = operator_json(operator_Y(b));
  EXPECT_EQ(j["shift"], -1);
  EXPECT_EQ(j["blocks"][0]["entries"], Json::array());
  EXPECT_EQ(j["blocks"][1]["entries"], (Json{Json{0, 0, "-1"}}));
  for (const auto& blk : j["blocks"]) {
    std::pair<std::size_t, std::size_t> last{0, 0};
    bool first = true;
    for (const auto& e : blk["entries"]) {
      const std::pair<std::size_t, std::size_t> rc{e[0].get<std::size_t>(), e[1].get<std::size_t>()};
      if (!first) EXPECT_LT(last, rc);
      last = rc;
      first = false;
      const auto value = parse_rational(e[2].get<std::string>());
      EXPECT_EQ(to_string(value), e[2].get<std::string>());
    }
  }
}

TEST(Serialize, ReportIncludesWitness) {
  const auto b = make_basis(Params(2, 3), 4);
  VerificationReport r;
  r.claim = "demo";
  r.checks.push_back(compare_operators("X", operator_X(b), operator_X(b).scaled(3), 3));
  const auto j = report_json(r);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"][0]["witness"]["expected"], "6");
  EXPECT_EQ(j["checks"][0]["witness"]["col"], "(0,0)");
}

TEST(Serialize, CsvQuotesCocharacters) {
  const auto b = make_basis(Params(2, 3), 1);
  EXPECT_EQ(basis_csv(*b), "degree,index,point\n0,0,\"(0,0)\"\n1,0,\"(0,1)\"\n");
  EXPECT_EQ(operator_csv(operator_X(b)), "degree,row,col,source,target,value\n0,0,0,\"(0,0)\",\"(0,1)\",2\n");
}

TEST(Serialize, QPolynomialCoefficients) { EXPECT_EQ(qpolynomial_json(QPolynomial{1, 0, 1}), (Json{"1", "0", "1"})); }
