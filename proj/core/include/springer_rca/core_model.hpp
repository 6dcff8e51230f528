#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "springer_rca/rational.hpp"

namespace springer_rca {

/// Singularity datum for x^n = t^k. The Cherednik coupling is specialized to m = -k/n and
/// the loop-rotation parameter is normalized to 1, so n*m + k*hbar = 0 holds exactly.
class Params {
 public:
  /// Throws ArgumentError unless n >= 1 and k >= 1. Coprimality is checked separately.
  Params(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  Rational m() const { return make_rational(-k_, n_); }
  Rational hbar() const { return Rational(1); }

  bool coprime() const noexcept;
  /// Throws UnsupportedError when gcd(n, k) != 1 (fixed points are not isolated there).
  void require_coprime() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int n_;
  int k_;
};

/// Integer vector labelling a torus fixed point t^A of the affine Grassmannian.
class Cocharacter {
 public:
  Cocharacter() = default;
  explicit Cocharacter(std::vector<int> entries) : entries_(std::move(entries)) {}
  Cocharacter(std::initializer_list<int> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t a) const { return entries_[a]; }
  std::span<const int> entries() const noexcept { return entries_; }

  /// d(A) = sum of entries; the Hilbert scheme degree of the fixed point.
  int degree() const noexcept;

  /// Componentwise sum; throws DimensionError on length mismatch.
  Cocharacter shifted(std::span<const int> delta) const;

  std::string to_string() const;

  friend auto operator<=>(const Cocharacter&, const Cocharacter&) = default;
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;

 private:
  std::vector<int> entries_;
};

/// Equivariant weights (phi_1(A), ..., phi_n(A)).
struct WeightVector {
  std::vector<Rational> phis;
};

/// Exponent data of the cocharacter nu -> (diag(1, nu^k, ..., nu^{(n-1)k}), nu^{-k}, nu^n)
/// whose image is the stabilizer of v = (gamma, e_1).
struct StabilizerCocharacter {
  std::vector<int> diag_exponents;
  int flavor_exponent = 0;
  int rot_exponent = 0;

  friend bool operator==(const StabilizerCocharacter&, const StabilizerCocharacter&) = default;
};

/// True iff A_1 >= 0, A is nondecreasing and A_n - A_1 <= k. Throws DimensionError when
/// the length of A differs from n.
bool is_admissible(const Cocharacter& a, const Params& p);

/// Admissible cocharacters of degree d in lexicographic order. Requires gcd(n, k) = 1.
std::vector<Cocharacter> enumerate_fixed_points(const Params& p, int degree);

/// phi_a(A) = (a-1) k/n - A_a.
WeightVector phi_weights(const Cocharacter& a, const Params& p);

StabilizerCocharacter stabilizer_cocharacter(const Params& p);

/// Fixed-point basis truncated at max_degree, one lexicographically ordered stratum per degree.
class GradedBasis {
 public:
  GradedBasis(Params params, int max_degree, std::vector<std::vector<Cocharacter>> strata);

  const Params& params() const noexcept { return params_; }
  int max_degree() const noexcept { return max_degree_; }

  /// Stratum of degree d. Degrees outside [0, max_degree] yield an empty stratum; negative
  /// degrees are genuinely empty, degrees above the truncation throw TruncationError.
  std::span<const Cocharacter> stratum(int degree) const;
  std::size_t stratum_size(int degree) const { return stratum(degree).size(); }
  std::vector<std::size_t> counts() const;

  /// Position of A inside its stratum, if A is a basis element.
  std::optional<std::size_t> index_of(const Cocharacter& a) const;

  friend bool operator==(const GradedBasis& x, const GradedBasis& y) {
    return x.params_ == y.params_ && x.max_degree_ == y.max_degree_ && x.strata_ == y.strata_;
  }

 private:
  Params params_;
  int max_degree_;
  std::vector<std::vector<Cocharacter>> strata_;
  std::map<Cocharacter, std::size_t> index_;
};

/// Builds strata for every degree in [0, max_degree]. Degrees are enumerated on up to
/// `threads` worker threads and merged in canonical order.
GradedBasis build_graded_basis(const Params& p, int max_degree, unsigned threads = 1);

}  // namespace springer_rca
