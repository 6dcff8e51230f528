#include "springer_rca/laurent.hpp"

#include <sstream>

#include "springer_rca/errors.hpp"

namespace springer_rca {

LaurentPoly LaurentPoly::monomial(int nu_power, int t_power, Integer coefficient) {
  LaurentPoly p;
  p.add_term({nu_power, t_power}, coefficient);
  return p;
}

LaurentPoly LaurentPoly::rescale_t(int nu_per_t) const {
  LaurentPoly out;
  for (const auto& [key, c] : terms_) out.add_term({key.first + nu_per_t * key.second, key.second}, c);
  return out;
}

LaurentPoly LaurentPoly::at_nu_one() const {
  LaurentPoly out;
  for (const auto& [key, c] : terms_) out.add_term({0, key.second}, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (key.first) os << "*nu^" << key.first;
    if (key.second) os << "*t^" << key.second;
  }
  return os.str();
}

void LaurentPoly::add_term(std::pair<int, int> key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentMatrix laurent_zero(std::size_t rows, std::size_t cols) {
  return LaurentMatrix(rows, std::vector<LaurentPoly>(cols));
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t inner = a.empty() ? 0 : a.front().size();
  if (inner != b.size()) throw DimensionError("Laurent matrix shapes do not compose");
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  LaurentMatrix out = laurent_zero(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

LaurentMatrix scale(const LaurentMatrix& a, const LaurentPoly& s) {
  LaurentMatrix out = a;
  for (auto& row : out) {
    for (auto& x : row) x = s * x;
  }
  return out;
}

LaurentMatrix rescale_t(const LaurentMatrix& a, int nu_per_t) {
  LaurentMatrix out = a;
  for (auto& row : out) {
    for (auto& x : row) x = x.rescale_t(nu_per_t);
  }
  return out;
}

LaurentMatrix at_nu_one(const LaurentMatrix& a) {
  LaurentMatrix out = a;
  for (auto& row : out) {
    for (auto& x : row) x = x.at_nu_one();
  }
  return out;
}

}  // namespace springer_rca
