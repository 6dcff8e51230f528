// Runs the twelve acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "springer_rca/combinatorics.hpp"
#include "springer_rca/errors.hpp"
#include "springer_rca/semigroup_oracle.hpp"
#include "springer_rca/verification.hpp"

using namespace springer_rca;

namespace {

const std::vector<std::pair<int, int>> kPairs = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}};

struct Outcome {
  bool passed = true;
  std::string note;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (ok || !o.passed) return;
  o.passed = false;
  o.note = what;
}

void require_report(Outcome& o, const VerificationReport& r) {
  if (r.passed() || !o.passed) return;
  std::ostringstream s;
  s << "(" << r.n << "," << r.k << ") " << r.claim;
  if (const auto* f = r.first_failure()) {
    s << ": " << f->name;
    if (f->witness) {
      s << " at degree " << f->witness->degree << " expected " << f->witness->expected << " got "
        << f->witness->actual;
    }
  }
  o.passed = false;
  o.note = s.str();
}

std::string pair_name(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

Outcome weyl() {
  Outcome o;
  for (const auto& [n, k] : kPairs) require_report(o, check_weyl_relation(Params(n, k), 12));
  return o;
}

Outcome kernel_dimension() {
  Outcome o;
  const std::vector<std::size_t> expected = {2, 3, 4, 5, 7, 14};
  for (std::size_t i = 0; i < kPairs.size(); ++i) {
    const Params p(kPairs[i].first, kPairs[i].second);
    const auto kernel = kernel_Y(p, stabilization_degree(p));
    require(o, kernel.total() == expected[i],
            pair_name(p.n(), p.k()) + " dim ker Y = " + std::to_string(kernel.total()));
    require(o, compactified_jacobian_dim(p) == Integer(static_cast<unsigned long>(expected[i])),
            pair_name(p.n(), p.k()) + " closed-form dimension disagrees");
  }
  return o;
}

Outcome singular() {
  Outcome o;
  for (const auto& [n, k] : kPairs) {
    const Params p(n, k);
    const int d = 12;
    const auto s = singular_vectors(p, d);
    require(o, s.dimension(0) == 1, pair_name(n, k) + " degree-0 singular space is not a line");
    for (int j = 1; j <= d - n; ++j) {
      require(o, s.dimension(j) == 0, pair_name(n, k) + " singular vector in degree " + std::to_string(j));
    }
  }
  return o;
}

Outcome character() {
  Outcome o;
  for (const auto& [n, k] : kPairs) {
    const Params p(n, k);
    const auto series = euler_series(p, 20);
    const auto basis = build_graded_basis(p, 20);
    for (int d = 0; d <= 20; ++d) {
      require(o, series.coefficient(static_cast<std::size_t>(d)) == Integer(static_cast<unsigned long>(basis.stratum_size(d))),
              pair_name(n, k) + " count mismatch in degree " + std::to_string(d));
    }
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (int ell = 1; ell <= 4; ++ell) {
    const auto r = check_rank_two_closed_forms(ell, 12);
    require_report(o, r);
    if (ell == 1) {
      const bool has_spots =
          std::any_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.name == "spot-values"; });
      require(o, has_spots, "spot values were not checked");
    }
  }
  return o;
}

Outcome sl2_casimir() {
  Outcome o;
  for (int ell = 1; ell <= 4; ++ell) require_report(o, check_sl2_and_casimir(Params(2, 2 * ell + 1), 12));
  return o;
}

Outcome kernel_family() {
  Outcome o;
  for (int ell = 1; ell <= 4; ++ell) {
    require_report(o, check_rank_two_kernel_family(ell));
    require(o, rank_two_kernel_family(ell).vectors.size() == static_cast<std::size_t>(ell + 1),
            "wrong number of vectors for l = " + std::to_string(ell));
  }
  return o;
}

Outcome lowest_weights() {
  Outcome o;
  for (int ell = 1; ell <= 4; ++ell) {
    const Params p(2, 2 * ell + 1);
    require_report(o, check_lowest_weights(p, 12));
    const auto lw = lowest_weight_decomposition(p, 12);
    require(o, lw.size() == static_cast<std::size_t>(2 * ell + 2), "wrong count for l = " + std::to_string(ell));
    for (const auto& v : lw) {
      require(o, v.weight == v.degree + 1 - make_rational(2 * ell + 1, 2),
              "weight mismatch at degree " + std::to_string(v.degree));
    }
  }
  return o;
}

Outcome oracle() {
  Outcome o;
  for (const auto& [n, k] : kPairs) require_report(o, compare_with_fixed_points(Params(n, k), 10));
  return o;
}

Outcome stabilizer() {
  Outcome o;
  for (const auto& [n, k] : kPairs) require_report(o, verify_stabilizer(Params(n, k)));
  return o;
}

Outcome boundary() {
  Outcome o;
  for (const auto& [n, k] : kPairs) require_report(o, check_boundary_vanishing(Params(n, k), 10));
  return o;
}

Outcome betti() {
  Outcome o;
  require(o, betti_2k(3, -2) == QPolynomial{1, 0, 1}, "betti_2k(3, -2) != 1 + q^2");
  for (int k = 1; k <= 9; ++k) {
    const int ell = k / 2;
    for (int m = 0; m >= -12; --m) {
      const auto b = betti_2k(k, m);
      const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      if (k % 2 == 1) {
        const int expected = std::min(-m / 2, ell) + 1;
        require(o, b.sum() == expected, tag + " coefficient sum");
        require(o, b.sum() == Integer(static_cast<unsigned long>(enumerate_fixed_points(Params(2, k), -m).size())),
                tag + " fixed-point count");
        require(o, cell_poincare_polynomial(affine_cells_2k_odd(k, m)) == b, tag + " cell polynomial");
      } else if (-m >= k) {
        const int c = -m - k + 1;
        require(o, b.sum() == 1 + c * ell, tag + " Euler characteristic");
        require(o, chain_cell_count(c, ell) == b.sum(), tag + " cell count");
      } else {
        require(o, b.sum() == -m / 2 + 1, tag + " projective space");
      }
    }
  }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double budget_seconds = 0;  // 0 = no time limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Weyl relation [X,Y] = n on six pairs, D = 12", weyl, 60},
      {2, "total dim ker Y = C(n+k-1, n-1)/n on six pairs", kernel_dimension},
      {3, "joint kernel of F_r[1] is span{|0>} on six pairs", singular},
      {4, "fixed-point counts match the Euler series through degree 20", character},
      {5, "generic n = 2 matrices match the closed forms, l = 1..4", closed_forms},
      {6, "sl2 relations, Casimir eigenvalue and presentation, l = 1..4", sl2_casimir},
      {7, "explicit ker Y vectors are annihilated and number l + 1", kernel_family},
      {8, "2l + 2 lowest weight vectors |0,A_2> with weights A_2 + 1 - k/2", lowest_weights},
      {9, "semigroup ideal counts equal fixed-point counts, d <= 10", oracle, 120},
      {10, "stabilizer cocharacter identity on six pairs", stabilizer},
      {11, "boundary numerators vanish on six pairs, D = 10", boundary},
      {12, "Betti polynomials for x^2 = t^k, k <= 9, |m| <= 12", betti},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.passed = false;
      o.note = "exceeded time budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << (c.id < 10 ? " " : "") << c.id << "] " << c.name << " ("
              << timing << ")";
    if (!o.passed) std::cout << ": " << o.note;
    std::cout << "\n";
    if (!o.passed) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
