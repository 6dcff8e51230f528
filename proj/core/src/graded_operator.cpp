#include "springer_rca/graded_operator.hpp"

#include <algorithm>
#include <string>

#include "springer_rca/errors.hpp"

namespace springer_rca {

namespace {

std::size_t stratum_size_or_empty(const GradedBasis& basis, int degree) {
  if (degree < 0 || degree > basis.max_degree()) return 0;
  return basis.stratum_size(degree);
}

void require_same_basis(const GradedOperator& g, const GradedOperator& h) {
  if (g.basis_ptr() != h.basis_ptr() && !(g.basis() == h.basis())) {
    throw DimensionError("operators act on different graded bases");
  }
}

}  // namespace

GradedVector GradedVector::basis_vector(const GradedBasis& basis, const Cocharacter& a, Rational coeff) {
  const auto idx = basis.index_of(a);
  if (!idx) throw ArgumentError(a.to_string() + " is not an element of the truncated basis");
  GradedVector v;
  auto& part = v.parts[a.degree()];
  part.assign(basis.stratum_size(a.degree()), Rational(0));
  part[*idx] = std::move(coeff);
  return v;
}

GradedVector GradedVector::normalized() const {
  GradedVector out;
  for (const auto& [d, coords] : parts) {
    if (std::any_of(coords.begin(), coords.end(), [](const Rational& x) { return x != 0; })) out.parts[d] = coords;
  }
  return out;
}

bool GradedVector::is_zero() const { return normalized().parts.empty(); }

GradedVector& GradedVector::operator+=(const GradedVector& other) {
  for (const auto& [d, coords] : other.parts) {
    auto& mine = parts[d];
    if (mine.empty()) {
      mine = coords;
      continue;
    }
    if (mine.size() != coords.size()) throw DimensionError("graded vectors disagree on stratum size");
    for (std::size_t i = 0; i < coords.size(); ++i) mine[i] += coords[i];
  }
  return *this;
}

GradedVector GradedVector::scaled(const Rational& s) const {
  GradedVector out = *this;
  for (auto& [d, coords] : out.parts) {
    for (auto& x : coords) x *= s;
  }
  return out;
}

bool operator==(const GradedVector& a, const GradedVector& b) { return a.normalized().parts == b.normalized().parts; }

GradedOperator::GradedOperator(std::shared_ptr<const GradedBasis> basis, int shift, std::vector<SparseMatrix> blocks)
    : basis_(std::move(basis)), shift_(shift), blocks_(std::move(blocks)) {
  if (!basis_) throw ArgumentError("graded operator needs a basis");
  for (std::size_t d = 0; d < blocks_.size(); ++d) {
    const int src = static_cast<int>(d);
    const int dst = src + shift_;
    if (src > basis_->max_degree() || dst > basis_->max_degree()) {
      throw TruncationError("block at source degree " + std::to_string(src) + " leaves the truncation");
    }
    if (blocks_[d].cols() != stratum_size_or_empty(*basis_, src) ||
        blocks_[d].rows() != stratum_size_or_empty(*basis_, dst)) {
      throw DimensionError("block at source degree " + std::to_string(src) + " has the wrong shape");
    }
  }
}

GradedOperator GradedOperator::zero(std::shared_ptr<const GradedBasis> basis, int shift) {
  const int top = basis->max_degree() - std::max(0, shift);
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= top; ++d) {
    blocks.emplace_back(stratum_size_or_empty(*basis, d + shift), stratum_size_or_empty(*basis, d));
  }
  return GradedOperator(std::move(basis), shift, std::move(blocks));
}

GradedOperator GradedOperator::identity(std::shared_ptr<const GradedBasis> basis) {
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= basis->max_degree(); ++d) blocks.push_back(SparseMatrix::identity(basis->stratum_size(d)));
  return GradedOperator(std::move(basis), 0, std::move(blocks));
}

SparseMatrix GradedOperator::block(int degree) const {
  if (degree < 0) return SparseMatrix(stratum_size_or_empty(*basis_, degree + shift_), 0);
  if (degree > max_source_degree()) {
    throw TruncationError("operator is not defined on source degree " + std::to_string(degree) +
                          " (domain ends at " + std::to_string(max_source_degree()) + ")");
  }
  return blocks_[static_cast<std::size_t>(degree)];
}

Rational GradedOperator::coefficient(const Cocharacter& target, const Cocharacter& source) const {
  const int d = source.degree();
  if (d < 0 || d > max_source_degree() || target.degree() != d + shift_) return Rational(0);
  const auto col = basis_->index_of(source);
  const auto row = basis_->index_of(target);
  if (!col || !row) return Rational(0);
  return blocks_[static_cast<std::size_t>(d)].at(*row, *col);
}

GradedOperator GradedOperator::restricted(int max_source) const {
  const auto keep = static_cast<std::size_t>(std::clamp(max_source + 1, 0, static_cast<int>(blocks_.size())));
  return GradedOperator(basis_, shift_, std::vector<SparseMatrix>(blocks_.begin(), blocks_.begin() + static_cast<long>(keep)));
}

GradedOperator GradedOperator::scaled(const Rational& s) const {
  std::vector<SparseMatrix> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
  return GradedOperator(basis_, shift_, std::move(blocks));
}

GradedVector GradedOperator::apply(const GradedVector& v) const {
  GradedVector out;
  for (const auto& [d, coords] : v.normalized().parts) {
    if (d < 0) continue;
    if (!defined_at(d)) {
      throw TruncationError("vector has support in degree " + std::to_string(d) +
                            ", outside the operator domain [0, " + std::to_string(max_source_degree()) + "]");
    }
    const int target = d + shift_;
    if (target < 0) continue;
    auto image = blocks_[static_cast<std::size_t>(d)].apply(coords);
    GradedVector piece;
    piece.parts[target] = std::move(image);
    out += piece;
  }
  return out.normalized();
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
  return a.shift_ == b.shift_ && a.blocks_ == b.blocks_ &&
         (a.basis_ == b.basis_ || *a.basis_ == *b.basis_);
}

GradedOperator compose(const GradedOperator& g, const GradedOperator& h) {
  require_same_basis(g, h);
  const int top = std::min(h.max_source_degree(), g.max_source_degree() - h.shift());
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= top; ++d) blocks.push_back(g.block(d + h.shift()) * h.block(d));
  return GradedOperator(h.basis_ptr(), g.shift() + h.shift(), std::move(blocks));
}

namespace {

GradedOperator combine(const GradedOperator& g, const GradedOperator& h, bool subtract) {
  require_same_basis(g, h);
  if (g.shift() != h.shift()) {
    throw DimensionError("cannot add operators of shift " + std::to_string(g.shift()) + " and " +
                         std::to_string(h.shift()));
  }
  const int top = std::min(g.max_source_degree(), h.max_source_degree());
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= top; ++d) blocks.push_back(subtract ? g.block(d) - h.block(d) : g.block(d) + h.block(d));
  return GradedOperator(g.basis_ptr(), g.shift(), std::move(blocks));
}

}  // namespace

GradedOperator add(const GradedOperator& g, const GradedOperator& h) { return combine(g, h, false); }
GradedOperator subtract(const GradedOperator& g, const GradedOperator& h) { return combine(g, h, true); }

GradedOperator commutator(const GradedOperator& g, const GradedOperator& h) {
  return subtract(compose(g, h), compose(h, g));
}

}  // namespace springer_rca
