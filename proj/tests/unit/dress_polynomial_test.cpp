#include <gtest/gtest.h>

#include "springer_rca/dress_polynomial.hpp"
#include "springer_rca/errors.hpp"

using namespace springer_rca;

TEST(DressPolynomial, ElementarySymmetricEvaluates) {
  const std::vector<Rational> phi = {1, 2, 3};
  EXPECT_EQ(DressPolynomial::elementary_symmetric(3, 0).evaluate(phi, 0, 1), 1);
  EXPECT_EQ(DressPolynomial::elementary_symmetric(3, 1).evaluate(phi, 0, 1), 6);
  EXPECT_EQ(DressPolynomial::elementary_symmetric(3, 2).evaluate(phi, 0, 1), 11);
  EXPECT_EQ(DressPolynomial::elementary_symmetric(3, 3).evaluate(phi, 0, 1), 6);
}

TEST(DressPolynomial, SymbolsEvaluate) {
  const std::vector<Rational> phi = {5, 7};
  const auto f = DressPolynomial::phi(2, 1) * DressPolynomial::m_symbol(2) + DressPolynomial::hbar_symbol(2);
  EXPECT_EQ(f.evaluate(phi, make_rational(-3, 2), 1), make_rational(-19, 2));
  EXPECT_EQ(f.phi_degree(), 1);
}

TEST(DressPolynomial, PermutedReordersVariables) {
  const auto f = DressPolynomial::phi(3, 0);
  const std::vector<std::size_t> sigma = {2, 0, 1};
  const std::vector<Rational> phi = {10, 20, 30};
  EXPECT_EQ(f.permuted(sigma).evaluate(phi, 0, 1), 30);
}

TEST(DressPolynomial, HbarShift) {
  const auto f = DressPolynomial::phi(2, 0) * DressPolynomial::phi(2, 1);
  const std::vector<Rational> phi = {3, 4};
  EXPECT_EQ(f.shifted_by_hbar(1).evaluate(phi, 0, 1), 6);
  EXPECT_EQ(f.shifted_by_hbar(make_rational(1, 2)).evaluate(phi, 0, 2), 6);
}

TEST(DressPolynomial, YoungInvariance) {
  EXPECT_TRUE(DressPolynomial::elementary_symmetric(4, 2).is_invariant_under_young(1));
  const auto split = DressPolynomial::phi(3, 0) + DressPolynomial::phi(3, 1);
  EXPECT_TRUE(split.is_invariant_under_young(2));
  EXPECT_FALSE(split.is_invariant_under_young(1));
}

TEST(DressPolynomial, ArityMismatchThrows) {
  EXPECT_THROW(DressPolynomial::one(2) + DressPolynomial::one(3), DimensionError);
}

TEST(DressPolynomial, ArithmeticCancels) {
  const auto f = DressPolynomial::phi(2, 0);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f * make_rational(0, 1)).is_zero(), true);
}
