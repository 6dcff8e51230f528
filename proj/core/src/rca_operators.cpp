#include "springer_rca/rca_operators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "springer_rca/errors.hpp"
#include "springer_rca/parallel.hpp"

namespace springer_rca {

namespace {

void require_length(std::span<const int> v, const Params& p, const char* what) {
  if (v.size() != static_cast<std::size_t>(p.n())) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected n = " +
                         std::to_string(p.n()));
  }
}

}  // namespace

Rational bracket_pow(const Rational& x, int r) {
  Rational out = 1;
  if (r > 0) {
    for (int j = 0; j < r; ++j) out *= x + j;
  } else {
    for (int j = 1; j <= -r; ++j) out *= x - j;
  }
  return out;
}

Rational abelian_monopole_coeff(const Cocharacter& a, std::span<const int> lambda, const Params& p) {
  require_length(lambda, p, "cocharacter shift");
  require_length(a.entries(), p, "cocharacter");
  const int n = p.n();
  const int k = p.k();
  Rational out = 1;
  for (int i = 0; i < n; ++i) {
    const int li = lambda[static_cast<std::size_t>(i)];
    if (li >= 0) continue;
    const Rational base = make_rational(static_cast<std::int64_t>(i) * k, n) - a[static_cast<std::size_t>(i)];
    for (int alpha = 0; alpha < -li; ++alpha) out *= base + alpha;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int gap = lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)];
      if (gap <= 0) continue;
      // (a - b + 1) k/n - A_a + A_b + beta with a = i+1, b = j+1
      const Rational base = make_rational(static_cast<std::int64_t>(i - j + 1) * k, n) -
                            a[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(j)];
      for (int beta = 0; beta < gap; ++beta) out *= base + beta;
    }
  }
  return out;
}

Rational excess_factor(const Cocharacter& a, std::span<const int> nu, const Params& p) {
  require_length(nu, p, "cocharacter shift");
  const auto phi = phi_weights(a, p).phis;
  const Rational m = p.m();
  const auto n = static_cast<std::size_t>(p.n());
  Rational out = 1;
  // Ad weights e_a - e_b (a != b) with flavor m
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int pairing = nu[i] - nu[j];
      if (pairing < 0) out *= bracket_pow(phi[i] - phi[j] + m, -pairing);
    }
  }
  // V weights e_a
  for (std::size_t i = 0; i < n; ++i) {
    if (nu[i] < 0) out *= bracket_pow(phi[i], -nu[i]);
  }
  return out;
}

Rational tangent_euler(const Cocharacter& point, std::span<const int> nu, const Params& p) {
  require_length(nu, p, "cocharacter shift");
  const auto phi = phi_weights(point, p).phis;
  const auto n = static_cast<std::size_t>(p.n());
  Rational out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int gap = nu[i] - nu[j];
      for (int g = 1; g <= gap; ++g) out *= phi[j] - phi[i] - g;
    }
  }
  return out;
}

MonopoleTerm monopole_term(const Cocharacter& a, std::span<const int> orbit_element, const Params& p) {
  require_length(orbit_element, p, "orbit element");
  MonopoleTerm term{a.shifted(orbit_element), Rational(1), Rational(1)};
  const auto phi = phi_weights(term.target, p).phis;
  const Rational m = p.m();
  const auto n = static_cast<std::size_t>(p.n());
  for (std::size_t i = 0; i < n; ++i) {
    for (int alpha = 1; alpha <= -orbit_element[i]; ++alpha) term.numerator *= phi[i] - alpha;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int gap = orbit_element[i] - orbit_element[j];
      for (int g = 1; g <= gap; ++g) {
        term.numerator *= phi[j] - phi[i] + m - g;
        term.denominator *= phi[j] - phi[i] - g;
      }
    }
  }
  return term;
}

MinusculeCoweight::MinusculeCoweight(int sign, int r, int n) : sign_(sign), r_(r), n_(n) {
  if (sign != 1 && sign != -1) throw ArgumentError("minuscule coweight sign must be +1 or -1");
  if (n < 1 || r < 1 || r > n) {
    throw ArgumentError("minuscule coweight needs 1 <= r <= n, got r = " + std::to_string(r) +
                        ", n = " + std::to_string(n));
  }
}

std::vector<int> MinusculeCoweight::expansion() const {
  std::vector<int> v(static_cast<std::size_t>(n_), 0);
  std::fill(v.begin(), v.begin() + r_, sign_);
  return v;
}

std::vector<std::vector<int>> MinusculeCoweight::weyl_orbit() const {
  auto v = expansion();
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> orbit;
  do {
    orbit.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return orbit;
}

std::vector<std::size_t> orbit_permutation(std::span<const int> orbit_element) {
  std::vector<std::size_t> sigma;
  sigma.reserve(orbit_element.size());
  for (std::size_t i = 0; i < orbit_element.size(); ++i) {
    if (orbit_element[i] != 0) sigma.push_back(i);
  }
  for (std::size_t i = 0; i < orbit_element.size(); ++i) {
    if (orbit_element[i] == 0) sigma.push_back(i);
  }
  return sigma;
}

GradedOperator minuscule_monopole(const MinusculeCoweight& lambda, const DressPolynomial& f,
                                  const std::shared_ptr<const GradedBasis>& basis, unsigned threads) {
  const Params& p = basis->params();
  p.require_coprime();
  if (lambda.n() != p.n()) throw DimensionError("coweight length does not match n");
  if (f.n() != p.n()) throw DimensionError("dress polynomial arity does not match n");
  if (!f.is_invariant_under_young(lambda.r())) {
    throw ArgumentError("dress polynomial " + f.to_string() + " is not invariant under S_" +
                        std::to_string(lambda.r()) + " x S_" + std::to_string(p.n() - lambda.r()));
  }
  const int shift = lambda.sign() * lambda.r();
  const int top = basis->max_degree() - std::max(0, shift);
  const auto orbit = lambda.weyl_orbit();
  std::vector<std::vector<std::size_t>> sigmas;
  for (const auto& w : orbit) sigmas.push_back(orbit_permutation(w));
  const Rational m = p.m();
  const Rational hbar = p.hbar();

  std::vector<SparseMatrix> blocks(static_cast<std::size_t>(std::max(top + 1, 0)));
  parallel_for(blocks.size(), threads, [&](std::size_t d) {
    const int src = static_cast<int>(d);
    const int dst = src + shift;
    const auto sources = basis->stratum(src);
    const std::size_t rows = dst < 0 ? 0 : basis->stratum_size(dst);
    std::vector<MatrixEntry> entries;
    for (std::size_t col = 0; col < sources.size(); ++col) {
      const Cocharacter& a = sources[col];
      for (std::size_t w = 0; w < orbit.size(); ++w) {
        MonopoleTerm term = monopole_term(a, orbit[w], p);
        if (!is_admissible(term.target, p)) {
          if (term.numerator != 0) {
            throw InvariantViolation("orbit term " + a.to_string() + " -> " + term.target.to_string() +
                                     " leaves the fixed-point set with nonzero numerator " +
                                     to_string(term.numerator));
          }
          continue;
        }
        if (term.denominator == 0) {
          throw InvariantViolation("vanishing tangent denominator at " + term.target.to_string());
        }
        if (term.numerator == 0) continue;
        const auto phi = phi_weights(term.target, p).phis;
        std::vector<Rational> moved(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) moved[i] = phi[sigmas[w][i]];
        Rational value = term.numerator * f.evaluate(moved, m, hbar) / term.denominator;
        if (value == 0) continue;
        const auto row = basis->index_of(term.target);
        if (!row) throw InvariantViolation("admissible target " + term.target.to_string() + " missing from basis");
        entries.push_back({*row, col, std::move(value)});
      }
    }
    blocks[d] = SparseMatrix::from_entries(rows, sources.size(), std::move(entries));
  });
  return GradedOperator(basis, shift, std::move(blocks));
}

GradedOperator operator_X(const std::shared_ptr<const GradedBasis>& basis, unsigned threads) {
  const int n = basis->params().n();
  return minuscule_monopole(MinusculeCoweight(1, 1, n), DressPolynomial::one(n), basis, threads);
}

GradedOperator operator_Y(const std::shared_ptr<const GradedBasis>& basis, unsigned threads) {
  const int n = basis->params().n();
  return minuscule_monopole(MinusculeCoweight(-1, 1, n), DressPolynomial::one(n), basis, threads);
}

GradedOperator operator_E(int r, const DressPolynomial& f, const std::shared_ptr<const GradedBasis>& basis,
                          unsigned threads) {
  return minuscule_monopole(MinusculeCoweight(1, r, basis->params().n()), f, basis, threads);
}

GradedOperator operator_F(int r, const DressPolynomial& f, const std::shared_ptr<const GradedBasis>& basis,
                          unsigned threads) {
  return minuscule_monopole(MinusculeCoweight(-1, r, basis->params().n()), f.shifted_by_hbar(Rational(1)), basis,
                            threads);
}

GradedOperator operator_H(const std::shared_ptr<const GradedBasis>& basis) {
  const Params& p = basis->params();
  if (p.n() != 2) throw UnsupportedError("H is only defined for n = 2, got n = " + std::to_string(p.n()));
  p.require_coprime();
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= basis->max_degree(); ++d) {
    const auto stratum = basis->stratum(d);
    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < stratum.size(); ++i) {
      const auto phi = phi_weights(stratum[i], p).phis;
      entries.push_back({i, i, p.hbar() - phi[0] - phi[1]});
    }
    blocks.push_back(SparseMatrix::from_entries(stratum.size(), stratum.size(), std::move(entries)));
  }
  return GradedOperator(basis, 0, std::move(blocks));
}

Sl2Triple sl2_triple(const std::shared_ptr<const GradedBasis>& basis, unsigned threads) {
  const Params& p = basis->params();
  if (p.n() != 2) throw UnsupportedError("the sl2 triple needs n = 2, got n = " + std::to_string(p.n()));
  const auto one = DressPolynomial::one(2);
  return Sl2Triple{operator_E(2, one, basis, threads), operator_F(2, one, basis, threads).scaled(Rational(-1)),
                   operator_H(basis)};
}

}  // namespace springer_rca
