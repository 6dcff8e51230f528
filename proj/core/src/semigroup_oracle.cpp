#include "springer_rca/semigroup_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "springer_rca/errors.hpp"

namespace springer_rca {

NumericalSemigroup::NumericalSemigroup(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw ArgumentError("semigroup generators must be positive");
  if (std::gcd(n, k) != 1) {
    throw UnsupportedError("<" + std::to_string(n) + ", " + std::to_string(k) + "> has gcd != 1");
  }
  const int top = std::max(frobenius() + 1, 0);
  table_.assign(static_cast<std::size_t>(top) + 1, false);
  for (int a = 0; a * n_ <= top; ++a) {
    for (int b = 0; a * n_ + b * k_ <= top; ++b) table_[static_cast<std::size_t>(a * n_ + b * k_)] = true;
  }
}

bool NumericalSemigroup::contains(long s) const noexcept {
  if (s < 0) return false;
  if (s > frobenius()) return true;
  return table_[static_cast<std::size_t>(s)];
}

SemigroupIdeal::SemigroupIdeal(const NumericalSemigroup& gamma, std::vector<int> gaps)
    : gamma_(&gamma), gaps_(std::move(gaps)) {
  std::sort(gaps_.begin(), gaps_.end());
  for (int g : gaps_) {
    if (!gamma.contains(g)) throw ArgumentError("gap " + std::to_string(g) + " is not a semigroup element");
  }
  if (std::adjacent_find(gaps_.begin(), gaps_.end()) != gaps_.end()) throw ArgumentError("repeated gap");
}

bool SemigroupIdeal::contains(long s) const {
  return gamma_->contains(s) && !std::binary_search(gaps_.begin(), gaps_.end(), static_cast<int>(s));
}

bool SemigroupIdeal::is_stable() const {
  const long top = std::max<long>(gaps_.empty() ? 0 : gaps_.back(), gamma_->frobenius() + 1);
  for (long s = 0; s <= top; ++s) {
    if (!contains(s)) continue;
    if (!contains(s + gamma_->n()) || !contains(s + gamma_->k())) return false;
  }
  return true;
}

namespace {

// Gap sets are order ideals of Gamma under s <= t iff t - s in Gamma. Adding elements in
// increasing order, each admissible next element has both predecessors s - n, s - k either
// outside Gamma or already removed, so every gap set is produced exactly once.
class IdealSearch {
 public:
  IdealSearch(const NumericalSemigroup& gamma, int colength, const OracleBudget& budget)
      : gamma_(gamma), colength_(colength), budget_(budget) {
    const long window = static_cast<long>(gamma.frobenius()) + static_cast<long>(colength) * gamma.n();
    for (long s = 0; s <= window; ++s) {
      if (gamma.contains(s)) candidates_.push_back(static_cast<int>(s));
    }
    removed_.assign(static_cast<std::size_t>(std::max(window, 0L)) + 1, false);
  }

  template <typename Sink>
  void run(Sink&& sink) {
    std::vector<int> gaps;
    descend(gaps, 0, sink);
  }

 private:
  bool predecessor_ok(int s, int g) const {
    const int pred = s - g;
    return !gamma_.contains(pred) || removed_[static_cast<std::size_t>(pred)];
  }

  template <typename Sink>
  void descend(std::vector<int>& gaps, std::size_t from, Sink& sink) {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetError("semigroup ideal search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }
    if (gaps.size() == static_cast<std::size_t>(colength_)) {
      sink(gaps);
      return;
    }
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const int s = candidates_[i];
      if (!predecessor_ok(s, gamma_.n()) || !predecessor_ok(s, gamma_.k())) continue;
      removed_[static_cast<std::size_t>(s)] = true;
      gaps.push_back(s);
      descend(gaps, i + 1, sink);
      gaps.pop_back();
      removed_[static_cast<std::size_t>(s)] = false;
    }
  }

  const NumericalSemigroup& gamma_;
  int colength_;
  OracleBudget budget_;
  std::vector<int> candidates_;
  std::vector<bool> removed_;
  std::size_t nodes_ = 0;
};

void check_colength(int colength, const OracleBudget& budget) {
  if (colength < 0) throw ArgumentError("colength must be nonnegative");
  if (colength > budget.max_colength) {
    throw BudgetError("colength " + std::to_string(colength) + " exceeds the oracle budget of " +
                      std::to_string(budget.max_colength));
  }
}

}  // namespace

std::vector<SemigroupIdeal> enumerate_ideals(const NumericalSemigroup& gamma, int colength,
                                             const OracleBudget& budget) {
  check_colength(colength, budget);
  std::vector<SemigroupIdeal> out;
  IdealSearch search(gamma, colength, budget);
  search.run([&](const std::vector<int>& gaps) { out.emplace_back(gamma, gaps); });
  return out;
}

std::size_t count_ideals(int n, int k, int colength, const OracleBudget& budget) {
  check_colength(colength, budget);
  const NumericalSemigroup gamma(n, k);
  std::size_t count = 0;
  IdealSearch search(gamma, colength, budget);
  search.run([&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace springer_rca
