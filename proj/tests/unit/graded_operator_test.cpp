#include <gtest/gtest.h>

#include "springer_rca/errors.hpp"
#include "springer_rca/rca_operators.hpp"
#include "springer_rca/verification.hpp"

using namespace springer_rca;

namespace {

std::shared_ptr<const GradedBasis> small_basis() { return make_basis(Params(2, 3), 6); }

}  // namespace

TEST(GradedOperator, CommutatorSpecExamples) {
  const auto b = small_basis();
  const auto x = operator_X(b);
  const auto y = operator_Y(b);
  const auto c = commutator(x, y);
  EXPECT_EQ(c.block(0), SparseMatrix::identity(1).scaled(2));
  const auto xx = commutator(x, x);
  for (const auto& blk : xx.blocks()) EXPECT_TRUE(blk.is_zero());
  const auto zero = scale(x, 0);
  for (const auto& blk : zero.blocks()) EXPECT_TRUE(blk.is_zero());
}

TEST(GradedOperator, ApplySpecExamples) {
  const auto b = small_basis();
  const auto x = operator_X(b);
  const auto y = operator_Y(b);
  const auto v = GradedVector::basis_vector(*b, {0, 0});
  EXPECT_EQ(GradedOperator::identity(b).apply(v), v);
  EXPECT_EQ(x.apply(v), GradedVector::basis_vector(*b, {0, 1}, 2));
  EXPECT_EQ(y.apply(GradedVector::basis_vector(*b, {0, 1}, 2)), GradedVector::basis_vector(*b, {0, 0}, -2));
  EXPECT_TRUE(y.apply(v).is_zero());
}

TEST(GradedOperator, DomainsFollowShift) {
  const auto b = small_basis();
  EXPECT_EQ(operator_X(b).max_source_degree(), 5);
  EXPECT_EQ(operator_Y(b).max_source_degree(), 6);
  EXPECT_EQ(compose(operator_X(b), operator_X(b)).max_source_degree(), 4);
  EXPECT_THROW(operator_X(b).block(6), TruncationError);
  EXPECT_THROW(operator_X(b).apply(GradedVector::basis_vector(*b, {3, 3})), TruncationError);
}

TEST(GradedOperator, BlockShapesValidated) {
  const auto b = small_basis();
  EXPECT_THROW(GradedOperator(b, 1, {SparseMatrix(2, 1)}), DimensionError);
  EXPECT_THROW(add(operator_X(b), operator_Y(b)), DimensionError);
}

TEST(GradedOperator, CompositionIsAssociative) {
  const auto b = make_basis(Params(3, 4), 8);
  const auto x = operator_X(b);
  const auto y = operator_Y(b);
  const auto e = operator_E(2, DressPolynomial::one(3), b);
  const auto lhs = compose(compose(x, y), e);
  const auto rhs = compose(x, compose(y, e));
  const int top = std::min(lhs.max_source_degree(), rhs.max_source_degree());
  EXPECT_EQ(lhs.restricted(top), rhs.restricted(top));
}

TEST(GradedVector, BasisVectorRejectsOutsiders) {
  const auto b = small_basis();
  EXPECT_THROW(GradedVector::basis_vector(*b, {0, 4}), ArgumentError);
}
