#include "springer_rca/verification.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "springer_rca/combinatorics.hpp"
#include "springer_rca/errors.hpp"
#include "springer_rca/laurent.hpp"
#include "springer_rca/linalg.hpp"
#include "springer_rca/parallel.hpp"
#include "springer_rca/rca_operators.hpp"

namespace springer_rca {

namespace {

VerificationReport new_report(std::string claim, const Params& p, int max_degree) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.n = p.n();
  r.k = p.k();
  r.max_degree = max_degree;
  return r;
}

void require_nonnegative_degree(int max_degree) {
  if (max_degree < 0) throw ArgumentError("max degree must be nonnegative, got " + std::to_string(max_degree));
}

std::string label_at(const GradedBasis& basis, int degree, std::size_t index) {
  const auto s = basis.stratum(degree);
  return index < s.size() ? s[index].to_string() : "?";
}

/// Diagonal degree-preserving operator with entries value(A) on [0, max_source].
template <class F>
GradedOperator diagonal_operator(const std::shared_ptr<const GradedBasis>& basis, int max_source, F value) {
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= max_source; ++d) {
    const auto s = basis->stratum(d);
    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < s.size(); ++i) entries.push_back({i, i, value(s[i])});
    blocks.push_back(SparseMatrix::from_entries(s.size(), s.size(), std::move(entries)));
  }
  return GradedOperator(basis, 0, std::move(blocks));
}

/// Operator assembled term by term from a closure returning (target, coefficient) pairs.
/// Targets outside the basis must carry a zero coefficient.
template <class F>
GradedOperator operator_from_terms(const std::shared_ptr<const GradedBasis>& basis, int shift, F terms) {
  const int top = basis->max_degree() - std::max(0, shift);
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= top; ++d) {
    const auto src = basis->stratum(d);
    const std::size_t rows = d + shift < 0 ? 0 : basis->stratum_size(d + shift);
    std::vector<MatrixEntry> entries;
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (const auto& [target, coeff] : terms(src[c])) {
        if (coeff == 0) continue;
        const auto row = is_admissible(target, basis->params()) ? basis->index_of(target) : std::nullopt;
        if (!row) {
          throw InvariantViolation("closed form sends " + src[c].to_string() + " to inadmissible " +
                                   target.to_string() + " with coefficient " + to_string(coeff));
        }
        entries.push_back({*row, c, coeff});
      }
    }
    blocks.push_back(SparseMatrix::from_entries(rows, src.size(), std::move(entries)));
  }
  return GradedOperator(basis, shift, std::move(blocks));
}

bool is_zero_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

nlohmann::ordered_json vector_json(const std::vector<Rational>& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::ordered_json kernel_json(const GradedKernelSummary& s) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& [d, vs] : s.vectors) {
    auto list = nlohmann::ordered_json::array();
    for (const auto& v : vs) list.push_back(vector_json(v));
    out[std::to_string(d)] = std::move(list);
  }
  return out;
}

/// Records the first mismatch into `check`.
void expect_equal(CheckResult& check, int degree, const std::string& label, const std::string& expected,
                  const std::string& actual, bool equal, const std::string& detail) {
  ++check.comparisons;
  if (equal || !check.passed) return;
  check.passed = false;
  check.witness = Witness{degree, label, "", expected, actual, detail};
}

}  // namespace

std::size_t GradedKernelSummary::dimension(int degree) const {
  const auto it = vectors.find(degree);
  return it == vectors.end() ? 0 : it->second.size();
}

std::size_t GradedKernelSummary::total() const {
  std::size_t t = 0;
  for (const auto& [d, vs] : vectors) t += vs.size();
  return t;
}

std::map<int, std::size_t> GradedKernelSummary::dimensions() const {
  std::map<int, std::size_t> out;
  for (const auto& [d, vs] : vectors) out[d] = vs.size();
  return out;
}

int stabilization_degree(const Params& p) { return (p.n() - 1) * (p.k() - 1) + p.n(); }

std::shared_ptr<const GradedBasis> make_basis(const Params& p, int max_degree, unsigned threads) {
  require_nonnegative_degree(max_degree);
  return std::make_shared<const GradedBasis>(build_graded_basis(p, max_degree, threads));
}

CheckResult compare_operators(const std::string& name, const GradedOperator& actual, const GradedOperator& expected,
                              int max_source) {
  if (actual.shift() != expected.shift()) {
    return CheckResult::fail(name, 0,
                             Witness{-1, "", "", "shift " + std::to_string(expected.shift()),
                                     "shift " + std::to_string(actual.shift()), "degree shifts differ"});
  }
  const GradedBasis& basis = actual.basis();
  std::size_t comparisons = 0;
  for (int d = 0; d <= max_source; ++d) {
    if (!actual.defined_at(d) || !expected.defined_at(d)) {
      return CheckResult::fail(name, comparisons,
                               Witness{d, "", "", expected.defined_at(d) ? "defined" : "undefined",
                                       actual.defined_at(d) ? "defined" : "undefined",
                                       "operator not defined on the requested degree"});
    }
    const SparseMatrix a = actual.block(d);
    const SparseMatrix e = expected.block(d);
    comparisons += a.rows() * a.cols();
    if (a == e) continue;
    const auto ae = a.entries();
    const auto ee = e.entries();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ae.size() || j < ee.size()) {
      const bool take_a = j == ee.size() || (i < ae.size() && std::pair(ae[i].row, ae[i].col) <= std::pair(ee[j].row, ee[j].col));
      const bool take_e = i == ae.size() || (j < ee.size() && std::pair(ee[j].row, ee[j].col) <= std::pair(ae[i].row, ae[i].col));
      const std::size_t row = take_a ? ae[i].row : ee[j].row;
      const std::size_t col = take_a ? ae[i].col : ee[j].col;
      const Rational av = take_a ? ae[i].value : Rational(0);
      const Rational ev = take_e ? ee[j].value : Rational(0);
      if (av != ev) {
        return CheckResult::fail(name, comparisons,
                                 Witness{d, label_at(basis, d + actual.shift(), row), label_at(basis, d, col),
                                         to_string(ev), to_string(av), "matrix entries differ"});
      }
      if (take_a) ++i;
      if (take_e) ++j;
    }
  }
  return CheckResult::pass(name, comparisons);
}

VerificationReport check_weyl_relation(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  const auto basis = make_basis(p, max_degree, threads);
  return check_weyl_relation(operator_X(basis, threads), operator_Y(basis, threads));
}

VerificationReport check_weyl_relation(const GradedOperator& x, const GradedOperator& y) {
  const auto& basis = x.basis_ptr();
  const Params& p = basis->params();
  const int top = basis->max_degree() - 2;
  auto report = new_report("[X, Y] = n on degrees <= D - 2", p, basis->max_degree());
  const auto expected = GradedOperator::identity(basis).scaled(p.n());
  report.checks.push_back(compare_operators("commutator-XY", commutator(x, y), expected, top));
  auto counts = nlohmann::ordered_json::array();
  for (auto c : basis->counts()) counts.push_back(c);
  report.details["stratum_sizes"] = std::move(counts);
  return report;
}

VerificationReport check_sl2_and_casimir(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  if (p.n() != 2) throw UnsupportedError("the sl2 presentation is only available for n = 2");
  const auto basis = make_basis(p, max_degree, threads);
  auto report = new_report("sl2 and Weyl-module relations with the quadratic Casimir", p, max_degree);
  const auto [e, f, h] = sl2_triple(basis, threads);
  const auto x = operator_X(basis, threads);
  const auto y = operator_Y(basis, threads);

  auto check = [&](const std::string& name, const GradedOperator& lhs, const GradedOperator& rhs) {
    const int top = std::min(lhs.max_source_degree(), rhs.max_source_degree());
    report.checks.push_back(compare_operators(name, lhs, rhs, top));
  };
  check("[E,F] = H", commutator(e, f), h);
  check("[H,E] = 2E", commutator(h, e), e.scaled(2));
  check("[H,F] = -2F", commutator(h, f), f.scaled(-2));
  check("[H,X] = X", commutator(h, x), x);
  check("[E,Y] = X", commutator(e, y), x);
  check("[H,Y] = -Y", commutator(h, y), y.scaled(-1));
  check("[F,X] = Y", commutator(f, x), y);
  check("[E,X] = 0", commutator(e, x), GradedOperator::zero(basis, 3));
  check("[F,Y] = 0", commutator(f, y), GradedOperator::zero(basis, -3));

  const auto c2 = add(add(compose(e, f), compose(f, e)).scaled(2), compose(h, h));
  const Rational half_k = make_rational(p.k(), 2);
  const auto diag = diagonal_operator(basis, c2.max_source_degree(), [&](const Cocharacter& a) {
    const Rational s = a[1] - a[0] - half_k;
    return Rational(s * s - 1);
  });
  check("casimir-diagonal", c2, diag);

  const auto w_plus = compose(x, x).scaled(make_rational(1, 2));
  const auto w_zero = add(compose(x, y), compose(y, x)).scaled(make_rational(-1, 2));
  const auto w_minus = compose(y, y).scaled(make_rational(-1, 2));
  const Rational m = p.m();
  const auto presentation =
      add(add(add(compose(e, w_minus), compose(f, w_plus)).scaled(2), compose(h, w_zero)),
          GradedOperator::identity(basis).scaled(m * (m - 1)));
  check("casimir-presentation", c2, presentation);

  auto eigen = nlohmann::ordered_json::array();
  for (int d = 0; d <= std::min(max_degree, 4); ++d) {
    for (const auto& a : basis->stratum(d)) {
      const Rational s = a[1] - a[0] - half_k;
      eigen.push_back({{"point", a.to_string()}, {"casimir", to_string(Rational(s * s - 1))}});
    }
  }
  report.details["casimir_eigenvalues"] = std::move(eigen);
  return report;
}

GradedKernelSummary singular_vectors(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  const auto basis = make_basis(p, max_degree, threads);
  std::vector<GradedOperator> fs;
  for (int r = 1; r <= p.n(); ++r) fs.push_back(operator_F(r, DressPolynomial::one(p.n()), basis, threads));
  GradedKernelSummary out;
  const int top = max_degree - p.n();
  std::vector<std::vector<std::vector<Rational>>> per_degree(static_cast<std::size_t>(std::max(0, top + 1)));
  parallel_for(per_degree.size(), threads, [&](std::size_t i) {
    const int d = static_cast<int>(i);
    SparseMatrix stacked = fs.front().block(d);
    for (std::size_t r = 1; r < fs.size(); ++r) stacked = SparseMatrix::vstack(stacked, fs[r].block(d));
    per_degree[i] = kernel_basis(stacked);
  });
  for (std::size_t i = 0; i < per_degree.size(); ++i) {
    if (!per_degree[i].empty()) out.vectors[static_cast<int>(i)] = std::move(per_degree[i]);
  }
  return out;
}

VerificationReport check_singular_vectors(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  auto report = new_report("the only singular vector is |0> up to scale", p, max_degree);
  const auto summary = singular_vectors(p, max_degree, threads);

  CheckResult unique = CheckResult::pass("unique-singular-vector", 0);
  for (int d = 0; d <= max_degree - p.n(); ++d) {
    const std::size_t dim = summary.dimension(d);
    expect_equal(unique, d, "", d == 0 ? "1" : "0", std::to_string(dim), dim == (d == 0 ? 1u : 0u),
                 "dimension of the joint kernel of F_1[1], ..., F_n[1]");
  }
  if (unique.passed && summary.dimension(0) == 1) {
    const auto& v = summary.vectors.at(0).front();
    expect_equal(unique, 0, "", "[1]", vector_json(v).dump(), v.size() == 1 && v[0] != 0,
                 "degree-0 singular vector is the vacuum");
  }
  report.checks.push_back(std::move(unique));

  // ker F_r[1] is contained in ker F_r[f] for the sampled symmetric dressings.
  const auto basis = make_basis(p, max_degree, threads);
  std::vector<DressPolynomial> dressings;
  for (int j = 1; j <= std::min(2, p.n()); ++j) dressings.push_back(DressPolynomial::elementary_symmetric(p.n(), j));
  CheckResult dressed = CheckResult::pass("dressed-F-annihilation", 0);
  for (int r = 1; r <= p.n() && dressed.passed; ++r) {
    const auto plain = operator_F(r, DressPolynomial::one(p.n()), basis, threads);
    std::vector<GradedOperator> dressed_ops;
    for (const auto& f : dressings) dressed_ops.push_back(operator_F(r, f, basis, threads));
    for (int d = 0; d <= max_degree && dressed.passed; ++d) {
      for (const auto& v : kernel_basis(plain.block(d))) {
        for (std::size_t fi = 0; fi < dressed_ops.size(); ++fi) {
          const auto image = dressed_ops[fi].block(d).apply(v);
          expect_equal(dressed, d, "F_" + std::to_string(r) + "[" + dressings[fi].to_string() + "]", "0",
                       vector_json(image).dump(), is_zero_vector(image),
                       "dressed lowering operator must vanish on ker F_r[1]");
        }
      }
    }
  }
  report.checks.push_back(std::move(dressed));
  report.details["kernel_dimensions"] = summary.dimensions();
  report.details["singular_vectors"] = kernel_json(summary);
  return report;
}

GradedKernelSummary kernel_Y(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  const int need = stabilization_degree(p);
  if (max_degree < need) throw UnderTruncationError(need, max_degree);
  const auto basis = make_basis(p, max_degree, threads);
  const auto y = operator_Y(basis, threads);
  std::vector<std::vector<std::vector<Rational>>> per_degree(static_cast<std::size_t>(max_degree + 1));
  parallel_for(per_degree.size(), threads,
               [&](std::size_t i) { per_degree[i] = kernel_basis(y.block(static_cast<int>(i))); });
  GradedKernelSummary out;
  for (std::size_t i = 0; i < per_degree.size(); ++i) {
    if (!per_degree[i].empty()) out.vectors[static_cast<int>(i)] = std::move(per_degree[i]);
  }
  return out;
}

VerificationReport check_kernel_Y(const Params& p, int max_degree, unsigned threads) {
  auto report = new_report("ker Y realizes the finite-dimensional quotient", p, max_degree);
  const auto summary = kernel_Y(p, max_degree, threads);
  const auto finite = finite_part_character(p, max_degree);
  const Integer expected_total = compactified_jacobian_dim(p);

  CheckResult total = CheckResult::pass("total-dimension", 1);
  if (Integer(static_cast<unsigned long>(summary.total())) != expected_total) {
    total = CheckResult::fail("total-dimension", 1,
                              Witness{-1, "", "", expected_total.get_str(), std::to_string(summary.total()),
                                      "sum of ker Y dimensions over all degrees"});
  }
  report.checks.push_back(std::move(total));

  CheckResult graded = CheckResult::pass("graded-dimension", 0);
  for (int d = 0; d <= max_degree; ++d) {
    const Integer want = finite.coefficient(static_cast<std::size_t>(d));
    expect_equal(graded, d, "", want.get_str(), std::to_string(summary.dimension(d)),
                 want == Integer(static_cast<unsigned long>(summary.dimension(d))),
                 "ker Y dimension against the finite part of the Euler series");
  }
  report.checks.push_back(std::move(graded));

  // Independent re-application through the graded operator.
  const auto basis = make_basis(p, max_degree, threads);
  const auto y = operator_Y(basis, threads);
  CheckResult annihilated = CheckResult::pass("annihilation", 0);
  for (const auto& [d, vs] : summary.vectors) {
    for (const auto& v : vs) {
      GradedVector g;
      g.parts[d] = v;
      const bool ok = y.apply(g).is_zero();
      expect_equal(annihilated, d, "", "0", ok ? "0" : "nonzero", ok, "Y applied to a kernel vector");
    }
  }
  report.checks.push_back(std::move(annihilated));

  report.details["kernel_dimensions"] = summary.dimensions();
  report.details["total"] = summary.total();
  report.details["finite_part"] = finite.to_string();
  report.details["kernel_vectors"] = kernel_json(summary);
  return report;
}

QPolynomial finite_part_character(const Params& p, int max_degree) {
  p.require_coprime();
  const int need = stabilization_degree(p);
  if (max_degree < need) throw UnderTruncationError(need, max_degree);
  const QPolynomial series = euler_series(p, max_degree);
  const QPolynomial finite = (series * QPolynomial{1, -1}).truncated(max_degree);
  const int bound = (p.n() - 1) * (p.k() - 1);
  if (finite.degree() > bound) {
    throw InvariantViolation("finite part did not stabilize: degree " + std::to_string(finite.degree()) +
                             " exceeds " + std::to_string(bound));
  }
  return finite;
}

VerificationReport check_euler(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  auto report = new_report("fixed-point counts match the Euler series; finite part stabilizes", p, max_degree);
  const auto basis = make_basis(p, max_degree, threads);
  const auto series = euler_series(p, max_degree);
  const auto finite = finite_part_character(p, max_degree);

  CheckResult identity = CheckResult::pass("character-identity", 0);
  for (int d = 0; d <= max_degree; ++d) {
    const Integer want = series.coefficient(static_cast<std::size_t>(d));
    const std::size_t have = basis->stratum_size(d);
    expect_equal(identity, d, "", want.get_str(), std::to_string(have),
                 want == Integer(static_cast<unsigned long>(have)), "stratum size against series coefficient");
  }
  report.checks.push_back(std::move(identity));

  const int bound = (p.n() - 1) * (p.k() - 1);
  CheckResult shape = CheckResult::pass("finite-part-shape", 3);
  if (finite.degree() != bound) {
    shape = CheckResult::fail("finite-part-shape", 1,
                              Witness{-1, "", "", std::to_string(bound), std::to_string(finite.degree()),
                                      "degree of the finite part"});
  } else if (!finite.has_nonnegative_coefficients()) {
    shape = CheckResult::fail("finite-part-shape", 2,
                              Witness{-1, "", "", "nonnegative", finite.to_string(), "coefficient signs"});
  } else if (!finite.is_palindromic()) {
    shape = CheckResult::fail("finite-part-shape", 3,
                              Witness{-1, "", "", "palindromic", finite.to_string(), "coefficient symmetry"});
  }
  report.checks.push_back(std::move(shape));

  const Integer jac = compactified_jacobian_dim(p);
  report.checks.push_back(finite.sum() == jac
                              ? CheckResult::pass("finite-part-total", 1)
                              : CheckResult::fail("finite-part-total", 1,
                                                  Witness{-1, "", "", jac.get_str(), finite.sum().get_str(),
                                                          "value of the finite part at q = 1"}));

  auto coeffs = nlohmann::ordered_json::array();
  for (int d = 0; d <= max_degree; ++d) coeffs.push_back(series.coefficient(static_cast<std::size_t>(d)).get_str());
  report.details["series"] = std::move(coeffs);
  report.details["finite_part"] = finite.to_string();
  report.details["compactified_jacobian_dim"] = jac.get_str();
  return report;
}

std::vector<LowestWeightVector> lowest_weight_decomposition(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  if (p.n() != 2) throw UnsupportedError("lowest weight decomposition is only available for n = 2");
  if (max_degree < p.k()) throw UnderTruncationError(p.k(), max_degree);
  const auto basis = make_basis(p, max_degree, threads);
  const auto [e, f, h] = sl2_triple(basis, threads);
  std::vector<LowestWeightVector> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (auto& v : kernel_basis(f.block(d))) {
      const auto hv = h.block(d).apply(v);
      const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
      const Rational w = hv[static_cast<std::size_t>(lead - v.begin())] / *lead;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (hv[i] != w * v[i]) throw InvariantViolation("ker F vector is not an H eigenvector");
      }
      out.push_back(LowestWeightVector{d, w, std::move(v)});
    }
  }
  return out;
}

VerificationReport check_lowest_weights(const Params& p, int max_degree, unsigned threads) {
  auto report = new_report("sl2 lowest weight vectors are |0, A_2> with weight A_2 + 1 - k/2", p, max_degree);
  const auto vectors = lowest_weight_decomposition(p, max_degree, threads);
  const auto basis = make_basis(p, max_degree, threads);

  CheckResult count = CheckResult::pass("lowest-weight-count", 1);
  if (vectors.size() != static_cast<std::size_t>(p.k() + 1)) {
    count = CheckResult::fail("lowest-weight-count", 1,
                              Witness{-1, "", "", std::to_string(p.k() + 1), std::to_string(vectors.size()),
                                      "number of lowest weight vectors"});
  }
  report.checks.push_back(std::move(count));

  CheckResult shape = CheckResult::pass("lowest-weight-vectors", 0);
  const Rational half_k = make_rational(p.k(), 2);
  for (const auto& lw : vectors) {
    const Cocharacter expected{0, lw.degree};
    const auto idx = basis->index_of(expected);
    bool is_basis_vector = idx.has_value();
    for (std::size_t i = 0; i < lw.coordinates.size() && is_basis_vector; ++i) {
      if ((lw.coordinates[i] != 0) != (i == *idx)) is_basis_vector = false;
    }
    expect_equal(shape, lw.degree, expected.to_string(), "basis vector", vector_json(lw.coordinates).dump(),
                 is_basis_vector, "lowest weight vector support");
    const Rational want = lw.degree + 1 - half_k;
    expect_equal(shape, lw.degree, expected.to_string(), to_string(want), to_string(lw.weight), want == lw.weight,
                 "H eigenvalue");
  }
  report.checks.push_back(std::move(shape));

  // Each lowest weight vector of degree j spans one basis vector in every degree j + 2i.
  CheckResult decomposition = CheckResult::pass("verma-decomposition", 0);
  for (int d = 0; d <= max_degree; ++d) {
    const auto generated = std::count_if(vectors.begin(), vectors.end(), [&](const LowestWeightVector& lw) {
      return lw.degree <= d && (d - lw.degree) % 2 == 0;
    });
    expect_equal(decomposition, d, "", std::to_string(generated), std::to_string(basis->stratum_size(d)),
                 static_cast<std::size_t>(generated) == basis->stratum_size(d),
                 "stratum size against the Verma module decomposition");
  }
  report.checks.push_back(std::move(decomposition));

  auto weights = nlohmann::ordered_json::array();
  for (const auto& lw : vectors) weights.push_back({{"degree", lw.degree}, {"weight", to_string(lw.weight)}});
  report.details["lowest_weights"] = std::move(weights);
  return report;
}

ClosedFormOperators rank_two_closed_form_operators(const std::shared_ptr<const GradedBasis>& basis) {
  const Params& p = basis->params();
  if (p.n() != 2 || p.k() % 2 == 0) throw UnsupportedError("closed forms exist only for n = 2 and odd k");
  const Rational k = p.k();
  const Rational half_k = make_rational(p.k(), 2);
  using Terms = std::vector<std::pair<Cocharacter, Rational>>;
  auto x = operator_from_terms(basis, 1, [&](const Cocharacter& a) {
    const Rational gap = a[1] - a[0];
    const Rational den = gap - half_k;
    return Terms{{{a[0], a[1] + 1}, (gap - k) / den}, {{a[0] + 1, a[1]}, gap / den}};
  });
  auto y = operator_from_terms(basis, -1, [&](const Cocharacter& a) {
    const Rational gap = a[1] - a[0];
    const Rational den = gap - half_k;
    return Terms{{{a[0], a[1] - 1}, gap * (half_k - a[1]) / den}, {{a[0] - 1, a[1]}, a[0] * (k - gap) / den}};
  });
  auto e = operator_from_terms(basis, 2, [&](const Cocharacter& a) {
    return Terms{{{a[0] + 1, a[1] + 1}, Rational(1)}};
  });
  auto f = operator_from_terms(basis, -2, [&](const Cocharacter& a) {
    return Terms{{{a[0] - 1, a[1] - 1}, Rational(a[0] * (half_k - a[1]))}};
  });
  return ClosedFormOperators{std::move(x), std::move(y), std::move(e), std::move(f)};
}

VerificationReport check_rank_two_closed_forms(int ell, int max_degree, unsigned threads) {
  if (ell < 0) throw ArgumentError("l must be nonnegative");
  const Params p(2, 2 * ell + 1);
  auto report = new_report("generic monopole matrices agree with the explicit n = 2 formulas", p, max_degree);
  const auto basis = make_basis(p, max_degree, threads);
  const auto closed = rank_two_closed_form_operators(basis);
  const auto [e, f, h] = sl2_triple(basis, threads);
  const auto x = operator_X(basis, threads);
  const auto y = operator_Y(basis, threads);
  report.checks.push_back(compare_operators("X", x, closed.x, x.max_source_degree()));
  report.checks.push_back(compare_operators("Y", y, closed.y, y.max_source_degree()));
  report.checks.push_back(compare_operators("E", e, closed.e, e.max_source_degree()));
  report.checks.push_back(compare_operators("F", f, closed.f, f.max_source_degree()));
  const Rational half_k = make_rational(p.k(), 2);
  const auto closed_h = diagonal_operator(basis, max_degree,
                                          [&](const Cocharacter& a) { return Rational(a[0] + a[1] + 1 - half_k); });
  report.checks.push_back(compare_operators("H", h, closed_h, max_degree));
  if (ell == 1 && max_degree >= 3) {
    CheckResult spot = CheckResult::pass("spot-values", 0);
    auto expect = [&](const std::string& what, const Rational& have, const Rational& want) {
      expect_equal(spot, -1, what, to_string(want), to_string(have), have == want, "frozen matrix entry");
    };
    expect("X|0,0> -> |0,1>", x.coefficient({0, 1}, {0, 0}), 2);
    expect("Y|0,1> -> |0,0>", y.coefficient({0, 0}, {0, 1}), -1);
    expect("F|1,2> -> |0,1>", f.coefficient({0, 1}, {1, 2}), make_rational(-1, 2));
    report.checks.push_back(std::move(spot));
  }
  return report;
}

KernelYFamily rank_two_kernel_family(int ell) {
  if (ell < 0) throw ArgumentError("l must be nonnegative");
  const Params p(2, 2 * ell + 1);
  KernelYFamily family{make_basis(p, 2 * ell), {}};
  const Integer k = p.k();
  for (int big_n = 0; big_n <= ell; ++big_n) {
    GradedVector v;
    Rational product = 1;
    Integer binom = 1;
    for (int j = 0; j <= big_n; ++j) {
      if (j > 0) {
        const int i = j - 1;
        product *= Rational(Integer((k - 2 * i) * (k - 4 * (i + 1)))) /
                   Rational(Integer((k - 2 * (big_n + i + 1)) * (k - 4 * i)));
        binom = binom * (big_n - j + 1) / j;
      }
      const Rational coeff = (j % 2 == 0 ? 1 : -1) * Rational(binom) * product;
      v += GradedVector::basis_vector(*family.basis, Cocharacter{big_n - j, big_n + j}, coeff);
    }
    family.vectors.push_back(v.normalized());
  }
  return family;
}

VerificationReport check_rank_two_kernel_family(int ell, unsigned threads) {
  const Params p(2, 2 * ell + 1);
  auto report = new_report("the explicit vectors span ker Y", p, 2 * ell);
  const auto family = rank_two_kernel_family(ell);
  const auto& basis = family.basis;
  const auto y = operator_Y(basis, threads);

  CheckResult annihilated = CheckResult::pass("annihilated-by-Y", 0);
  for (std::size_t big_n = 0; big_n < family.vectors.size(); ++big_n) {
    const bool ok = y.apply(family.vectors[big_n]).is_zero();
    expect_equal(annihilated, static_cast<int>(2 * big_n), "N = " + std::to_string(big_n), "0",
                 ok ? "0" : "nonzero", ok, "Y applied to the explicit vector");
  }
  report.checks.push_back(std::move(annihilated));

  // One vector per even degree 2N, so independence and spanning reduce to per-degree dimensions.
  const auto kernel = kernel_Y(p, std::max(2 * ell, stabilization_degree(p)), threads);
  CheckResult spans = CheckResult::pass("spans-kernel", 0);
  expect_equal(spans, -1, "", std::to_string(kernel.total()), std::to_string(family.vectors.size()),
               kernel.total() == family.vectors.size(), "number of explicit vectors against dim ker Y");
  for (std::size_t big_n = 0; big_n < family.vectors.size(); ++big_n) {
    const int d = static_cast<int>(2 * big_n);
    const auto& parts = family.vectors[big_n].parts;
    const bool ok = parts.size() == 1 && parts.begin()->first == d && kernel.dimension(d) == 1;
    expect_equal(spans, d, "N = " + std::to_string(big_n), "1", std::to_string(kernel.dimension(d)), ok,
                 "explicit vector is the unique kernel direction in its degree");
  }
  report.checks.push_back(std::move(spans));

  // The vectors agree up to scale with powers of E - X^2/4 applied to |0, 0>.
  const auto [e, f, h] = sl2_triple(basis, threads);
  const auto x = operator_X(basis, threads);
  const auto e_twisted = subtract(e, compose(x, x).scaled(make_rational(1, 4)));
  CheckResult twisted = CheckResult::pass("twisted-E-powers", 0);
  GradedVector power = GradedVector::basis_vector(*basis, Cocharacter{0, 0});
  for (std::size_t big_n = 0; big_n < family.vectors.size(); ++big_n) {
    if (big_n > 0) power = e_twisted.apply(power);
    const auto& want = family.vectors[big_n].parts.begin()->second;
    const auto normalized = power.normalized();
    const auto it = normalized.parts.find(static_cast<int>(2 * big_n));
    bool proportional = it != normalized.parts.end() && normalized.parts.size() == 1;
    if (proportional) {
      const auto& have = it->second;
      const auto pivot = static_cast<std::size_t>(
          std::find_if(want.begin(), want.end(), [](const Rational& x) { return x != 0; }) - want.begin());
      const Rational ratio = have[pivot] / want[pivot];
      for (std::size_t i = 0; i < want.size(); ++i) proportional = proportional && have[i] == ratio * want[i];
    }
    expect_equal(twisted, static_cast<int>(2 * big_n), "N = " + std::to_string(big_n), "proportional",
                 proportional ? "proportional" : "not proportional", proportional,
                 "twisted E power against the explicit vector");
  }
  report.checks.push_back(std::move(twisted));

  auto vectors = nlohmann::ordered_json::array();
  for (const auto& v : family.vectors) vectors.push_back(vector_json(v.parts.begin()->second));
  report.details["vectors"] = std::move(vectors);
  return report;
}

VerificationReport verify_stabilizer(const Params& p) {
  p.require_coprime();
  auto report = new_report("the cocharacter fixes (gamma, e_1) up to flavor and rotation", p, 0);
  const auto s = stabilizer_cocharacter(p);
  const auto n = static_cast<std::size_t>(p.n());

  LaurentMatrix gamma = laurent_zero(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) gamma[i + 1][i] = LaurentPoly::monomial(0, 0);
  gamma[0][n - 1] += LaurentPoly::monomial(0, p.k());
  LaurentMatrix g = laurent_zero(n, n);
  LaurentMatrix g_inv = laurent_zero(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    g[a][a] = LaurentPoly::monomial(s.diag_exponents[a], 0);
    g_inv[a][a] = LaurentPoly::monomial(-s.diag_exponents[a], 0);
  }
  const auto conjugated = scale(multiply(multiply(g, rescale_t(gamma, s.rot_exponent)), g_inv),
                                LaurentPoly::monomial(s.flavor_exponent, 0));

  auto matrix_string = [](const LaurentMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
      out += i ? "; " : "";
      for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + m[i][j].to_string();
    }
    return out + "]";
  };
  report.checks.push_back(conjugated == gamma ? CheckResult::pass("fixes-gamma", n * n)
                                              : CheckResult::fail("fixes-gamma", n * n,
                                                                  Witness{-1, "", "", matrix_string(gamma),
                                                                          matrix_string(conjugated),
                                                                          "twisted conjugate of gamma"}));

  LaurentMatrix e1 = laurent_zero(n, 1);
  e1[0][0] = LaurentPoly::monomial(0, 0);
  const auto ge1 = multiply(g, e1);
  report.checks.push_back(ge1 == e1 ? CheckResult::pass("fixes-e1", n)
                                    : CheckResult::fail("fixes-e1", n,
                                                        Witness{-1, "", "", matrix_string(e1), matrix_string(ge1),
                                                                "g applied to e_1"}));

  LaurentMatrix identity = laurent_zero(n, n);
  for (std::size_t a = 0; a < n; ++a) identity[a][a] = LaurentPoly::monomial(0, 0);
  const bool trivial_at_one = at_nu_one(g) == identity && at_nu_one(conjugated) == gamma;
  report.checks.push_back(trivial_at_one ? CheckResult::pass("nu-equals-one", n * n)
                                         : CheckResult::fail("nu-equals-one", n * n,
                                                             Witness{-1, "", "", "identity",
                                                                     matrix_string(at_nu_one(g)),
                                                                     "specialization at nu = 1"}));

  // (flavor, rotation) = (-k, n) is primitive exactly when gcd(n, k) = 1.
  const int g_fr = std::gcd(s.flavor_exponent, s.rot_exponent);
  report.checks.push_back(g_fr == 1 ? CheckResult::pass("primitive-embedding", 1)
                                    : CheckResult::fail("primitive-embedding", 1,
                                                        Witness{-1, "", "", "1", std::to_string(g_fr),
                                                                "gcd of flavor and rotation exponents"}));

  report.details["diag_exponents"] = s.diag_exponents;
  report.details["flavor_exponent"] = s.flavor_exponent;
  report.details["rot_exponent"] = s.rot_exponent;
  return report;
}

VerificationReport check_boundary_vanishing(const Params& p, int max_degree) {
  p.require_coprime();
  require_nonnegative_degree(max_degree);
  auto report = new_report("orbit terms leaving the admissible set have vanishing numerator", p, max_degree);
  CheckResult check = CheckResult::pass("boundary-vanishing", 0);
  std::size_t boundary_terms = 0;
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& a : enumerate_fixed_points(p, d)) {
      for (int sign : {1, -1}) {
        for (int r = 1; r <= p.n(); ++r) {
          for (const auto& nu : MinusculeCoweight(sign, r, p.n()).weyl_orbit()) {
            const auto term = monopole_term(a, nu, p);
            if (is_admissible(term.target, p)) continue;
            ++boundary_terms;
            expect_equal(check, d, term.target.to_string(), "0", to_string(term.numerator), term.numerator == 0,
                         "numerator for source " + a.to_string());
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(check));
  report.details["boundary_terms"] = boundary_terms;
  return report;
}

VerificationReport check_evaluation_routes(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  auto report = new_report("target-evaluated coefficients agree with the excess intersection route", p, max_degree);
  const auto basis = make_basis(p, max_degree, threads);

  CheckResult separation = CheckResult::pass("phi-separation", 0);
  CheckResult excess = CheckResult::pass("numerator-equals-excess", 0);
  CheckResult poles = CheckResult::pass("pole-free", 0);
  CheckResult abelian = CheckResult::pass("abelian-single-orbit", 0);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& a : basis->stratum(d)) {
      const auto phi = phi_weights(a, p).phis;
      for (std::size_t i = 0; i < phi.size(); ++i) {
        for (std::size_t j = i + 1; j < phi.size(); ++j) {
          const Rational diff = phi[i] - phi[j];
          expect_equal(separation, d, a.to_string(), "non-integer", to_string(diff), !is_integer(diff),
                       "weight difference phi_" + std::to_string(i + 1) + " - phi_" + std::to_string(j + 1));
        }
      }
      for (int sign : {1, -1}) {
        for (int r = 1; r <= p.n(); ++r) {
          const auto orbit = MinusculeCoweight(sign, r, p.n()).weyl_orbit();
          for (const auto& nu : orbit) {
            const auto term = monopole_term(a, nu, p);
            if (!is_admissible(term.target, p)) continue;
            const Rational route = excess_factor(a, nu, p);
            expect_equal(excess, d, term.target.to_string(), to_string(route), to_string(term.numerator),
                         route == term.numerator, "source " + a.to_string());
            expect_equal(poles, d, term.target.to_string(), "nonzero", to_string(term.denominator),
                         term.denominator != 0, "tangent Euler class for source " + a.to_string());
            if (orbit.size() == 1) {
              const Rational direct = abelian_monopole_coeff(a, nu, p);
              const Rational coeff = term.numerator / term.denominator;
              expect_equal(abelian, d, term.target.to_string(), to_string(direct), to_string(coeff), direct == coeff,
                           "single-orbit coefficient for source " + a.to_string());
            }
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(separation));
  report.checks.push_back(std::move(excess));
  report.checks.push_back(std::move(poles));
  report.checks.push_back(std::move(abelian));

  // Whole operators rebuilt from excess / e(T) at the target.
  for (int sign : {1, -1}) {
    for (int r = 1; r <= p.n(); ++r) {
      const MinusculeCoweight lambda(sign, r, p.n());
      const auto orbit = lambda.weyl_orbit();
      const auto rebuilt = operator_from_terms(basis, sign * r, [&](const Cocharacter& a) {
        std::vector<std::pair<Cocharacter, Rational>> terms;
        for (const auto& nu : orbit) {
          const auto target = a.shifted(nu);
          if (!is_admissible(target, p)) continue;
          terms.emplace_back(target, excess_factor(a, nu, p) / tangent_euler(target, nu, p));
        }
        return terms;
      });
      const auto generic = minuscule_monopole(lambda, DressPolynomial::one(p.n()), basis, threads);
      report.checks.push_back(compare_operators(std::string(sign > 0 ? "plus" : "minus") + "-lambda_" + std::to_string(r) + "-route",
                                                generic, rebuilt, generic.max_source_degree()));
    }
  }
  return report;
}

}  // namespace springer_rca
