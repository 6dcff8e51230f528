#include <gtest/gtest.h>

#include "oracles.hpp"
#include "springer_rca/combinatorics.hpp"
#include "springer_rca/errors.hpp"

using namespace springer_rca;

namespace {

const std::vector<std::pair<int, int>> kPairs = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}};

std::vector<Integer> first_coefficients(const QPolynomial& q, int count) {
  std::vector<Integer> out;
  for (int i = 0; i < count; ++i) out.push_back(q.coefficient(static_cast<std::size_t>(i)));
  return out;
}

}  // namespace

TEST(QPolynomial, ArithmeticAndPrinting) {
  const QPolynomial a{1, 1};
  EXPECT_EQ(a * a, (QPolynomial{1, 2, 1}));
  EXPECT_EQ(a - a, QPolynomial{});
  EXPECT_EQ((QPolynomial{1, 0, 1}).to_string(), "1 + q^2");
  EXPECT_EQ((QPolynomial{0, -2, 0, 3}).to_string(), "-2q + 3q^3");
  EXPECT_EQ(QPolynomial{}.degree(), -1);
  EXPECT_EQ((QPolynomial{1, 2, 3}).truncated(1), (QPolynomial{1, 2}));
}

TEST(QBinomial, SpecExamples) {
  EXPECT_EQ(qbinomial(2, 1), (QPolynomial{1, 1}));
  EXPECT_EQ(qbinomial(4, 1), (QPolynomial{1, 1, 1, 1}));
  EXPECT_EQ(qbinomial(5, 0), (QPolynomial{1}));
  EXPECT_THROW(qbinomial(2, 3), ArgumentError);
}

TEST(QBinomial, MatchesSubsetCountingAndIsPalindromic) {
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= a; ++b) {
      const auto q = qbinomial(a, b);
      EXPECT_EQ(q.coefficients(), oracle::qbinomial(a, b)) << a << " choose " << b;
      EXPECT_TRUE(q.is_palindromic());
      EXPECT_TRUE(q.has_nonnegative_coefficients());
    }
  }
}

TEST(EulerSeries, SpecExamples) {
  EXPECT_EQ(first_coefficients(euler_series(Params(2, 3), 5), 6), (std::vector<Integer>{1, 1, 2, 2, 2, 2}));
  EXPECT_EQ(euler_series(Params(2, 3), 0), (QPolynomial{1}));
  EXPECT_EQ(first_coefficients(euler_series(Params(3, 4), 4), 5), (std::vector<Integer>{1, 1, 2, 3, 4}));
  EXPECT_THROW(euler_series(Params(2, 4), 3), UnsupportedError);
}

TEST(EulerSeries, MatchesOracleAndFixedPointCounts) {
  for (const auto& [n, k] : kPairs) {
    const Params p(n, k);
    const auto series = euler_series(p, 14);
    EXPECT_EQ(first_coefficients(series, 15), oracle::euler_series(n, k, 14));
    for (int d = 0; d <= 10; ++d) {
      EXPECT_EQ(series.coefficient(static_cast<std::size_t>(d)),
                Integer(static_cast<unsigned long>(oracle::fixed_points(n, k, d).size())));
    }
  }
}

TEST(JacobianDim, Values) {
  const std::vector<int> expected = {2, 3, 4, 5, 7, 14};
  for (std::size_t i = 0; i < kPairs.size(); ++i) {
    EXPECT_EQ(compactified_jacobian_dim(Params(kPairs[i].first, kPairs[i].second)), expected[i]);
  }
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(compactified_jacobian_dim(Params(n, 1)), 1);
}

TEST(Betti2k, SpecExamples) {
  EXPECT_EQ(betti_2k(3, -2), (QPolynomial{1, 0, 1}));
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(betti_2k(k, 0), (QPolynomial{1}));
  EXPECT_EQ(betti_2k(4, -6), (QPolynomial{1, 0, 3, 0, 3}));
  EXPECT_THROW(betti_2k(3, 1), ArgumentError);
}

TEST(Betti2k, OddCaseMatchesFixedPointsAndCells) {
  for (int k = 1; k <= 9; k += 2) {
    const int ell = (k - 1) / 2;
    for (int m = 0; m >= -12; --m) {
      const auto b = betti_2k(k, m);
      EXPECT_EQ(b.sum(), std::min(-m / 2, ell) + 1);
      EXPECT_EQ(b.sum(), Integer(static_cast<unsigned long>(oracle::fixed_points(2, k, -m).size())));
      EXPECT_EQ(cell_poincare_polynomial(affine_cells_2k_odd(k, m)), b) << "k=" << k << " m=" << m;
    }
  }
}

TEST(Betti2k, EvenChainEulerCharacteristic) {
  for (int k = 2; k <= 8; k += 2) {
    const int ell = k / 2;
    for (int m = -k; m >= -12; --m) {
      const int c = -m - k + 1;
      const auto b = betti_2k(k, m);
      EXPECT_EQ(b.sum(), 1 + c * ell);
      EXPECT_EQ(chain_cell_count(c, ell), b.sum());
    }
  }
}

TEST(ChainCells, SmallCases) {
  EXPECT_EQ(chain_cell_count(1, 3), 4);
  EXPECT_EQ(chain_cell_count(3, 2), 7);
}
