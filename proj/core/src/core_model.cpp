#include "springer_rca/core_model.hpp"

#include <numeric>
#include <sstream>

#include "springer_rca/errors.hpp"
#include "springer_rca/parallel.hpp"

namespace springer_rca {

Params::Params(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) {
    throw ArgumentError("need n >= 1 and k >= 1, got (n, k) = (" + std::to_string(n) + ", " +
                        std::to_string(k) + ")");
  }
}

bool Params::coprime() const noexcept { return std::gcd(n_, k_) == 1; }

void Params::require_coprime() const {
  if (!coprime()) {
    throw UnsupportedError("gcd(n, k) = " + std::to_string(std::gcd(n_, k_)) + " for (n, k) = (" +
                           std::to_string(n_) + ", " + std::to_string(k_) +
                           "): torus fixed points are not isolated");
  }
}

int Cocharacter::degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Cocharacter Cocharacter::shifted(std::span<const int> delta) const {
  if (delta.size() != entries_.size()) {
    throw DimensionError("cocharacter of length " + std::to_string(entries_.size()) +
                         " shifted by vector of length " + std::to_string(delta.size()));
  }
  std::vector<int> out(entries_);
  for (std::size_t a = 0; a < out.size(); ++a) out[a] += delta[a];
  return Cocharacter(std::move(out));
}

std::string Cocharacter::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    if (a) os << ',';
    os << entries_[a];
  }
  os << ')';
  return os.str();
}

bool is_admissible(const Cocharacter& a, const Params& p) {
  if (a.size() != static_cast<std::size_t>(p.n())) {
    throw DimensionError("cocharacter " + a.to_string() + " has length " + std::to_string(a.size()) +
                         ", expected n = " + std::to_string(p.n()));
  }
  if (a[0] < 0) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] > a[i + 1]) return false;
  }
  return a[a.size() - 1] - a[0] <= p.k();
}

namespace {

// Depth-first fill of nondecreasing entries; emitting children in increasing value order
// yields lexicographic order directly.
void fill(const Params& p, std::vector<int>& prefix, int remaining, std::vector<Cocharacter>& out) {
  const auto n = static_cast<std::size_t>(p.n());
  const std::size_t pos = prefix.size();
  if (pos == n) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  const std::size_t slots = n - pos;
  const int lo = pos == 0 ? 0 : prefix.back();
  if (pos > 0 && static_cast<long>(prefix.front() + p.k()) * static_cast<long>(slots) < remaining) return;
  const int hi = pos == 0 ? remaining : std::min(remaining, prefix.front() + p.k());
  // every remaining slot is at least v
  for (int v = lo; v <= hi && static_cast<long>(v) * static_cast<long>(slots) <= remaining; ++v) {
    prefix.push_back(v);
    fill(p, prefix, remaining - v, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Cocharacter> enumerate_fixed_points(const Params& p, int degree) {
  p.require_coprime();
  if (degree < 0) throw ArgumentError("degree must be nonnegative, got " + std::to_string(degree));
  std::vector<Cocharacter> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(p.n()));
  fill(p, prefix, degree, out);
  return out;
}

WeightVector phi_weights(const Cocharacter& a, const Params& p) {
  if (a.size() != static_cast<std::size_t>(p.n())) {
    throw DimensionError("cocharacter " + a.to_string() + " does not have length n = " +
                         std::to_string(p.n()));
  }
  WeightVector w;
  w.phis.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    w.phis.push_back(make_rational(static_cast<std::int64_t>(i) * p.k(), p.n()) - a[i]);
  }
  return w;
}

StabilizerCocharacter stabilizer_cocharacter(const Params& p) {
  p.require_coprime();
  StabilizerCocharacter s;
  for (int a = 0; a < p.n(); ++a) s.diag_exponents.push_back(a * p.k());
  s.flavor_exponent = -p.k();
  s.rot_exponent = p.n();
  return s;
}

GradedBasis::GradedBasis(Params params, int max_degree, std::vector<std::vector<Cocharacter>> strata)
    : params_(params), max_degree_(max_degree), strata_(std::move(strata)) {
  if (max_degree_ < 0) throw ArgumentError("max degree must be nonnegative");
  if (strata_.size() != static_cast<std::size_t>(max_degree_) + 1) {
    throw DimensionError("graded basis needs one stratum per degree 0.." + std::to_string(max_degree_));
  }
  for (const auto& stratum : strata_) {
    for (std::size_t i = 0; i < stratum.size(); ++i) index_.emplace(stratum[i], i);
  }
}

std::span<const Cocharacter> GradedBasis::stratum(int degree) const {
  if (degree < 0) return {};
  if (degree > max_degree_) {
    throw TruncationError("degree " + std::to_string(degree) + " exceeds truncation " +
                          std::to_string(max_degree_));
  }
  return strata_[static_cast<std::size_t>(degree)];
}

std::vector<std::size_t> GradedBasis::counts() const {
  std::vector<std::size_t> out;
  out.reserve(strata_.size());
  for (const auto& s : strata_) out.push_back(s.size());
  return out;
}

std::optional<std::size_t> GradedBasis::index_of(const Cocharacter& a) const {
  const auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GradedBasis build_graded_basis(const Params& p, int max_degree, unsigned threads) {
  p.require_coprime();
  if (max_degree < 0) throw ArgumentError("max degree must be nonnegative");
  std::vector<std::vector<Cocharacter>> strata(static_cast<std::size_t>(max_degree) + 1);
  parallel_for(strata.size(), threads,
               [&](std::size_t d) { strata[d] = enumerate_fixed_points(p, static_cast<int>(d)); });
  return GradedBasis(p, max_degree, std::move(strata));
}

}  // namespace springer_rca
