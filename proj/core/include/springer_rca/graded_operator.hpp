#pragma once

#include <map>
#include <memory>
#include <vector>

#include "springer_rca/core_model.hpp"
#include "springer_rca/sparse_matrix.hpp"

namespace springer_rca {

/// Vector in the truncated fixed-point basis: degree -> coordinates in stratum order.
struct GradedVector {
  std::map<int, std::vector<Rational>> parts;

  /// coeff * |A>, sized against `basis`. Throws ArgumentError if A is not a basis element.
  static GradedVector basis_vector(const GradedBasis& basis, const Cocharacter& a, Rational coeff = 1);

  /// Drops degrees whose coordinates are all zero.
  GradedVector normalized() const;
  bool is_zero() const;

  GradedVector& operator+=(const GradedVector& other);
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  GradedVector scaled(const Rational& s) const;

  friend bool operator==(const GradedVector& a, const GradedVector& b);
};

/// Degree-shifting operator on the truncated basis: one exact sparse block per source
/// degree d in [0, max_source_degree], mapping stratum(d) to stratum(d + shift).
/// Blocks at negative source degrees are implicitly empty (stratum(d) = {} there), so a
/// lowering operator is total on degree 0 with a zero-row block.
class GradedOperator {
 public:
  GradedOperator(std::shared_ptr<const GradedBasis> basis, int shift, std::vector<SparseMatrix> blocks);

  /// Zero operator of the given shift on its natural domain [0, D - max(0, shift)].
  static GradedOperator zero(std::shared_ptr<const GradedBasis> basis, int shift);
  static GradedOperator identity(std::shared_ptr<const GradedBasis> basis);

  const GradedBasis& basis() const noexcept { return *basis_; }
  const std::shared_ptr<const GradedBasis>& basis_ptr() const noexcept { return basis_; }
  int shift() const noexcept { return shift_; }
  /// Largest source degree with a block; -1 when the domain is empty.
  int max_source_degree() const noexcept { return static_cast<int>(blocks_.size()) - 1; }
  bool defined_at(int degree) const noexcept { return degree <= max_source_degree(); }

  /// Block at source degree d. Negative d yields an empty-column block; d above the domain
  /// throws TruncationError.
  SparseMatrix block(int degree) const;
  const std::vector<SparseMatrix>& blocks() const noexcept { return blocks_; }

  /// Coefficient of |target> in op|source>; 0 when either is not a basis element.
  Rational coefficient(const Cocharacter& target, const Cocharacter& source) const;

  /// Same operator with the domain cut down to [0, max_source].
  GradedOperator restricted(int max_source) const;

  GradedOperator scaled(const Rational& s) const;
  /// Throws TruncationError when v has support outside the domain.
  GradedVector apply(const GradedVector& v) const;

  friend bool operator==(const GradedOperator& a, const GradedOperator& b);

 private:
  std::shared_ptr<const GradedBasis> basis_;
  int shift_;
  std::vector<SparseMatrix> blocks_;
};

/// g o h on the degrees where both factors are defined.
GradedOperator compose(const GradedOperator& g, const GradedOperator& h);
/// g + h on the common domain; shifts must agree.
GradedOperator add(const GradedOperator& g, const GradedOperator& h);
GradedOperator subtract(const GradedOperator& g, const GradedOperator& h);
inline GradedOperator scale(const GradedOperator& g, const Rational& s) { return g.scaled(s); }
/// g h - h g on the common domain.
GradedOperator commutator(const GradedOperator& g, const GradedOperator& h);

}  // namespace springer_rca
