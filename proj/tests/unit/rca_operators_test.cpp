#include <gtest/gtest.h>

#include "oracles.hpp"
#include "springer_rca/errors.hpp"
#include "springer_rca/rca_operators.hpp"
#include "springer_rca/verification.hpp"

using namespace springer_rca;

namespace {

const std::vector<std::pair<int, int>> kPairs = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}};

std::shared_ptr<const GradedBasis> basis_for(int n, int k, int d) { return make_basis(Params(n, k), d); }

}  // namespace

TEST(BracketPow, SpecExamples) {
  EXPECT_EQ(bracket_pow(make_rational(3, 2), 0), 1);
  EXPECT_EQ(bracket_pow(make_rational(1, 2), 2), make_rational(3, 4));
  EXPECT_EQ(bracket_pow(make_rational(1, 2), -1), make_rational(-1, 2));
  EXPECT_EQ(bracket_pow(5, -3), 24);
}

TEST(AbelianCoefficient, SpecExamples) {
  const Params p(2, 3);
  const std::vector<int> zero = {0, 0};
  const std::vector<int> up = {1, 1};
  const std::vector<int> down = {-1, -1};
  EXPECT_EQ(abelian_monopole_coeff({1, 2}, zero, p), 1);
  for (const Cocharacter a : {Cocharacter{0, 0}, Cocharacter{1, 3}, Cocharacter{2, 2}}) {
    EXPECT_EQ(abelian_monopole_coeff(a, up, p), 1);
  }
  EXPECT_EQ(abelian_monopole_coeff({1, 2}, down, p), make_rational(1, 2));
}

TEST(ExcessFactor, SpecExamples) {
  const Params p(2, 3);
  const std::vector<int> zero = {0, 0};
  const std::vector<int> nu01 = {0, 1};
  const std::vector<int> nu10 = {1, 0};
  EXPECT_EQ(excess_factor({3, 3}, zero, p), 1);
  EXPECT_EQ(excess_factor({0, 0}, nu01, p), -3);
  EXPECT_EQ(excess_factor({0, 0}, nu10, p), 0);
}

TEST(MinusculeCoweight, OrbitsAreSortedPermutations) {
  const MinusculeCoweight lam(1, 2, 4);
  EXPECT_EQ(lam.expansion(), (std::vector<int>{1, 1, 0, 0}));
  const auto orbit = lam.weyl_orbit();
  EXPECT_EQ(orbit.size(), 6u);
  EXPECT_TRUE(std::is_sorted(orbit.begin(), orbit.end()));
  EXPECT_EQ(MinusculeCoweight(-1, 1, 3).weyl_orbit().size(), 3u);
  EXPECT_THROW(MinusculeCoweight(1, 0, 3), ArgumentError);
  EXPECT_THROW(MinusculeCoweight(2, 1, 3), ArgumentError);
}

TEST(OrbitPermutation, NonzeroSlotsFirst) {
  const std::vector<int> nu = {0, 1, 0, 1};
  EXPECT_EQ(orbit_permutation(nu), (std::vector<std::size_t>{1, 3, 0, 2}));
}

TEST(Operators, XAndYSpecExamples) {
  const auto b = basis_for(2, 3, 4);
  const auto x = operator_X(b);
  const auto y = operator_Y(b);
  EXPECT_EQ(x.coefficient({0, 1}, {0, 0}), 2);
  EXPECT_EQ(x.coefficient({0, 2}, {0, 1}), 4);
  EXPECT_EQ(x.coefficient({1, 1}, {0, 1}), -2);
  EXPECT_TRUE(y.block(0).is_zero());
  EXPECT_EQ(y.coefficient({0, 0}, {0, 1}), -1);
}

TEST(Operators, Sl2SpecExamples) {
  const auto b = basis_for(2, 3, 6);
  const auto [e, f, h] = sl2_triple(b);
  for (int d = 0; d <= 4; ++d) {
    for (const auto& a : b->stratum(d)) EXPECT_EQ(e.coefficient({a[0] + 1, a[1] + 1}, a), 1);
  }
  EXPECT_EQ(f.coefficient({0, 1}, {1, 2}), make_rational(-1, 2));
  EXPECT_EQ(h.coefficient({0, 0}, {0, 0}), make_rational(-1, 2));
}

TEST(Operators, LoweringSpecExamples) {
  const auto b = basis_for(3, 4, 4);
  const auto one = DressPolynomial::one(3);
  EXPECT_EQ(operator_F(3, one, b).coefficient({0, 0, 0}, {0, 1, 1}), 0);
  EXPECT_TRUE(operator_F(3, one, b).block(2).is_zero());
  EXPECT_EQ(operator_F(2, one, b).coefficient({0, 0, 0}, {0, 1, 1}), make_rational(-1, 3));
}

TEST(Operators, HRequiresRankTwo) { EXPECT_THROW(operator_H(basis_for(3, 4, 2)), UnsupportedError); }

TEST(Operators, NonInvariantDressingRejected) {
  const auto b = basis_for(3, 4, 3);
  EXPECT_THROW(operator_E(1, DressPolynomial::phi(3, 1), b), ArgumentError);
  EXPECT_NO_THROW(operator_E(1, DressPolynomial::phi(3, 0), b));
}

TEST(Operators, NonCoprimeRejected) {
  const auto b = std::make_shared<const GradedBasis>(Params(2, 4), 0, std::vector<std::vector<Cocharacter>>{{{0, 0}}});
  EXPECT_THROW(operator_X(b), UnsupportedError);
}

// Every matrix entry of every undressed minuscule monopole against the test-side formula.
TEST(Operators, MinusculeEntriesMatchOracle) {
  for (const auto& [n, k] : kPairs) {
    const int top = n == 4 ? 7 : 9;
    const auto b = basis_for(n, k, top);
    const Params& p = b->params();
    for (int sign : {1, -1}) {
      for (int r = 1; r <= n; ++r) {
        const MinusculeCoweight lam(sign, r, n);
        const auto op = minuscule_monopole(lam, DressPolynomial::one(n), b);
        for (int d = 0; d <= op.max_source_degree(); ++d) {
          for (const auto& a : b->stratum(d)) {
            for (const auto& nu : lam.weyl_orbit()) {
              const auto target = a.shifted(nu);
              if (!is_admissible(target, p)) continue;
              const std::vector<int> av(a.entries().begin(), a.entries().end());
              EXPECT_EQ(op.coefficient(target, a), oracle::monopole_coefficient(av, nu, n, k))
                  << "(n,k)=(" << n << "," << k << ") A=" << a.to_string() << " target=" << target.to_string();
            }
          }
        }
      }
    }
  }
}

// Dressing by a symmetric polynomial multiplies each entry by f evaluated at the target.
TEST(Operators, SymmetricDressingScalesByTargetValue) {
  const auto b = basis_for(3, 5, 8);
  const auto& p = b->params();
  const auto e2 = DressPolynomial::elementary_symmetric(3, 2);
  const auto plain = operator_E(2, DressPolynomial::one(3), b);
  const auto dressed = operator_E(2, e2, b);
  for (int d = 0; d <= plain.max_source_degree(); ++d) {
    for (const auto& entry : plain.block(d).entries()) {
      const auto target = b->stratum(d + 2)[entry.row];
      const auto f = e2.evaluate(phi_weights(target, p).phis, p.m(), p.hbar());
      EXPECT_EQ(dressed.block(d).at(entry.row, entry.col), f * entry.value);
    }
  }
}

TEST(Operators, IndependentOfThreadCount) {
  const auto b = basis_for(4, 5, 9);
  EXPECT_EQ(operator_E(2, DressPolynomial::elementary_symmetric(4, 1), b, 1),
            operator_E(2, DressPolynomial::elementary_symmetric(4, 1), b, 4));
  EXPECT_EQ(operator_Y(b, 1), operator_Y(b, 3));
}

TEST(Routes, NumeratorEqualsSourceExcessFactor) {
  for (const auto& [n, k] : kPairs) {
    const Params p(n, k);
    for (int d = 0; d <= 7; ++d) {
      for (const auto& a : enumerate_fixed_points(p, d)) {
        for (int sign : {1, -1}) {
          for (int r = 1; r <= n; ++r) {
            for (const auto& nu : MinusculeCoweight(sign, r, n).weyl_orbit()) {
              const auto term = monopole_term(a, nu, p);
              if (!is_admissible(term.target, p)) {
                EXPECT_EQ(term.numerator, 0);
                continue;
              }
              EXPECT_EQ(term.numerator, excess_factor(a, nu, p));
              EXPECT_EQ(term.denominator, tangent_euler(term.target, nu, p));
            }
          }
        }
      }
    }
  }
}

// The closed torus formula reproduces the coefficient only on single-element orbits.
TEST(Routes, AbelianFormulaOnSingleOrbits) {
  for (const auto& [n, k] : kPairs) {
    const Params p(n, k);
    for (int d = 0; d <= 6; ++d) {
      for (const auto& a : enumerate_fixed_points(p, d)) {
        for (int sign : {1, -1}) {
          const std::vector<int> nu(static_cast<std::size_t>(n), sign);
          const auto term = monopole_term(a, nu, p);
          if (!is_admissible(term.target, p)) continue;
          EXPECT_EQ(abelian_monopole_coeff(a, nu, p), term.numerator / term.denominator);
        }
      }
    }
  }
}
