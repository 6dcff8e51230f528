#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "springer_rca/core_model.hpp"
#include "springer_rca/graded_operator.hpp"
#include "springer_rca/qpolynomial.hpp"
#include "springer_rca/report.hpp"

namespace springer_rca {

/// Per-degree kernel data; vectors are coordinates in canonical stratum order.
struct GradedKernelSummary {
  std::map<int, std::vector<std::vector<Rational>>> vectors;

  std::size_t dimension(int degree) const;
  std::size_t total() const;
  /// degree -> dimension for every computed degree.
  std::map<int, std::size_t> dimensions() const;
};

/// Truncation needed before kernel and finite-character data stabilize: (n-1)(k-1) + n.
int stabilization_degree(const Params& p);

std::shared_ptr<const GradedBasis> make_basis(const Params& p, int max_degree, unsigned threads = 1);

/// Entry-by-entry comparison on source degrees [0, max_source]. Fails with a witness
/// naming the degree, source and target labels when the operators differ or either side
/// is undefined on a requested degree.
CheckResult compare_operators(const std::string& name, const GradedOperator& actual, const GradedOperator& expected,
                              int max_source);

/// [X, Y] = n * id on every degree <= D - 2.
VerificationReport check_weyl_relation(const Params& p, int max_degree, unsigned threads = 1);
/// Same check on caller-supplied operators (used for fault injection).
VerificationReport check_weyl_relation(const GradedOperator& x, const GradedOperator& y);

/// n = 2, k odd: the nine sl2 / Weyl-module commutators, the diagonal Casimir eigenvalue
/// (A_2 - A_1 - k/2)^2 - 1 and C_2 = 2(E W^- + F W^+) + H W^0 + m(m - 1).
VerificationReport check_sl2_and_casimir(const Params& p, int max_degree, unsigned threads = 1);

/// Intersection of ker F_r[1], r = 1..n, on degrees 0..D-n.
GradedKernelSummary singular_vectors(const Params& p, int max_degree, unsigned threads = 1);
/// Singular vectors are exactly span{|0>}; each ker F_r[1] also lies in ker F_r[f] for the
/// sampled dressings f in {e_1, e_2}.
VerificationReport check_singular_vectors(const Params& p, int max_degree, unsigned threads = 1);

/// ker Y per degree on 0..D. Throws UnderTruncationError when D < stabilization_degree(p).
GradedKernelSummary kernel_Y(const Params& p, int max_degree, unsigned threads = 1);
VerificationReport check_kernel_Y(const Params& p, int max_degree, unsigned threads = 1);

/// (1 - q) times the truncated Euler series; must stabilize to a polynomial of degree
/// (n-1)(k-1). Throws UnderTruncationError when D < stabilization_degree(p) and
/// InvariantViolation when it does not stabilize.
QPolynomial finite_part_character(const Params& p, int max_degree);
/// Fixed-point counts against the Euler series, plus the finite-part properties.
VerificationReport check_euler(const Params& p, int max_degree, unsigned threads = 1);

struct LowestWeightVector {
  int degree = 0;
  Rational weight;
  std::vector<Rational> coordinates;
};
/// n = 2: ker F per degree with H-weights. Throws UnderTruncationError when D < k.
std::vector<LowestWeightVector> lowest_weight_decomposition(const Params& p, int max_degree, unsigned threads = 1);
VerificationReport check_lowest_weights(const Params& p, int max_degree, unsigned threads = 1);

/// Closed-form X, Y, E, F for x^2 = t^{2l+1}, built directly from the explicit n = 2 formulas.
struct ClosedFormOperators {
  GradedOperator x;
  GradedOperator y;
  GradedOperator e;
  GradedOperator f;
};
ClosedFormOperators rank_two_closed_form_operators(const std::shared_ptr<const GradedBasis>& basis);
/// Generic monopole matrices against the closed forms on degrees <= D, with spot values.
VerificationReport check_rank_two_closed_forms(int ell, int max_degree, unsigned threads = 1);

/// The explicit ker Y vectors for N = 0..l on the basis of (2, 2l+1) truncated at 2l.
struct KernelYFamily {
  std::shared_ptr<const GradedBasis> basis;
  std::vector<GradedVector> vectors;
};
KernelYFamily rank_two_kernel_family(int ell);
VerificationReport check_rank_two_kernel_family(int ell, unsigned threads = 1);

/// nu^{-k} g gamma(nu^n t) g^{-1} = gamma(t) and g e_1 = e_1 over Laurent polynomials.
VerificationReport verify_stabilizer(const Params& p);

/// For every admissible source and every orbit element of +-lambda_r whose target is
/// inadmissible, the numerator vanishes exactly.
VerificationReport check_boundary_vanishing(const Params& p, int max_degree);

/// Target-evaluated coefficients against excess_factor / tangent Euler class, the abelian
/// torus formula for single-element orbits, pole-freeness and phi separation.
VerificationReport check_evaluation_routes(const Params& p, int max_degree, unsigned threads = 1);

}  // namespace springer_rca
