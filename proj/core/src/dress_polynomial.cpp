#include "springer_rca/dress_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "springer_rca/errors.hpp"

namespace springer_rca {

namespace {

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

DressPolynomial::DressPolynomial(int n) : n_(n) {
  if (n < 1) throw ArgumentError("dress polynomial needs n >= 1");
}

DressPolynomial DressPolynomial::constant(int n, const Rational& c) {
  DressPolynomial f(n);
  f.add_term(Exponents(static_cast<std::size_t>(n) + 2, 0), c);
  return f;
}

DressPolynomial DressPolynomial::phi(int n, int a) {
  if (a < 0 || a >= n) throw ArgumentError("phi index " + std::to_string(a) + " out of range");
  DressPolynomial f(n);
  Exponents e(static_cast<std::size_t>(n) + 2, 0);
  e[static_cast<std::size_t>(a)] = 1;
  f.add_term(e, Rational(1));
  return f;
}

DressPolynomial DressPolynomial::m_symbol(int n) {
  DressPolynomial f(n);
  Exponents e(static_cast<std::size_t>(n) + 2, 0);
  e[static_cast<std::size_t>(n)] = 1;
  f.add_term(e, Rational(1));
  return f;
}

DressPolynomial DressPolynomial::hbar_symbol(int n) {
  DressPolynomial f(n);
  Exponents e(static_cast<std::size_t>(n) + 2, 0);
  e[static_cast<std::size_t>(n) + 1] = 1;
  f.add_term(e, Rational(1));
  return f;
}

DressPolynomial DressPolynomial::elementary_symmetric(int n, int j) {
  if (j < 0 || j > n) throw ArgumentError("elementary symmetric e_" + std::to_string(j) + " needs 0 <= j <= n");
  DressPolynomial f(n);
  // one monomial per j-subset of the phi variables
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.end() - j, mask.end(), 1);
  do {
    Exponents e(static_cast<std::size_t>(n) + 2, 0);
    std::copy(mask.begin(), mask.end(), e.begin());
    f.add_term(e, Rational(1));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return f;
}

int DressPolynomial::phi_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.begin() + n_, 0));
  return deg;
}

Rational DressPolynomial::evaluate(std::span<const Rational> phis, const Rational& m, const Rational& hbar) const {
  if (phis.size() != static_cast<std::size_t>(n_)) {
    throw DimensionError("dress polynomial in " + std::to_string(n_) + " variables evaluated at " +
                         std::to_string(phis.size()) + " weights");
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int a = 0; a < n_; ++a) t *= power(phis[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(a)]);
    t *= power(m, e[static_cast<std::size_t>(n_)]);
    t *= power(hbar, e[static_cast<std::size_t>(n_) + 1]);
    total += t;
  }
  return total;
}

DressPolynomial DressPolynomial::permuted(std::span<const std::size_t> sigma) const {
  if (sigma.size() != static_cast<std::size_t>(n_)) throw DimensionError("permutation has the wrong length");
  DressPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents moved(e.size(), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) moved[sigma[i]] = e[i];
    moved[static_cast<std::size_t>(n_)] = e[static_cast<std::size_t>(n_)];
    moved[static_cast<std::size_t>(n_) + 1] = e[static_cast<std::size_t>(n_) + 1];
    out.add_term(moved, c);
  }
  return out;
}

DressPolynomial DressPolynomial::shifted_by_hbar(const Rational& c) const {
  DressPolynomial out = constant(n_, Rational(0));
  for (const auto& [e, coeff] : terms_) {
    Exponents rest(e.size(), 0);
    rest[static_cast<std::size_t>(n_)] = e[static_cast<std::size_t>(n_)];
    rest[static_cast<std::size_t>(n_) + 1] = e[static_cast<std::size_t>(n_) + 1];
    DressPolynomial term(n_);
    term.add_term(rest, coeff);
    for (int a = 0; a < n_; ++a) {
      const DressPolynomial linear = phi(n_, a) - hbar_symbol(n_) * c;
      for (int i = 0; i < e[static_cast<std::size_t>(a)]; ++i) term = term * linear;
    }
    out += term;
  }
  return out;
}

bool DressPolynomial::is_invariant_under_young(int r) const {
  if (r < 0 || r > n_) throw ArgumentError("block size r out of range");
  std::vector<std::size_t> sigma(static_cast<std::size_t>(n_));
  for (int i = 0; i + 1 < n_; ++i) {
    if (i + 1 == r) continue;  // transpositions never cross the block boundary
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i) + 1]);
    if (permuted(sigma) != *this) return false;
  }
  return true;
}

DressPolynomial& DressPolynomial::operator+=(const DressPolynomial& other) {
  require_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

DressPolynomial& DressPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

DressPolynomial operator-(DressPolynomial a, const DressPolynomial& b) {
  a.require_same_arity(b);
  for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
  return a;
}

DressPolynomial operator*(const DressPolynomial& a, const DressPolynomial& b) {
  a.require_same_arity(b);
  DressPolynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      DressPolynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string DressPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << springer_rca::to_string(c);
    for (int a = 0; a < n_; ++a) {
      const int p = e[static_cast<std::size_t>(a)];
      if (p) os << "*phi" << (a + 1) << (p > 1 ? "^" + std::to_string(p) : "");
    }
    if (int p = e[static_cast<std::size_t>(n_)]) os << "*m" << (p > 1 ? "^" + std::to_string(p) : "");
    if (int p = e[static_cast<std::size_t>(n_) + 1]) os << "*hbar" << (p > 1 ? "^" + std::to_string(p) : "");
  }
  return os.str();
}

void DressPolynomial::require_same_arity(const DressPolynomial& other) const {
  if (other.n_ != n_) throw DimensionError("dress polynomials in different numbers of variables");
}

void DressPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

}  // namespace springer_rca
