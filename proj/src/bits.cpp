#include "hgalg/bits.hpp"

#include <stdexcept>

namespace hgalg {

std::vector<Mask> maximal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Larger sets first so each candidate only needs checking against kept ones.
  std::stable_sort(sets.begin(), sets.end(),
                   [](Mask a, Mask b) { return popcount(a) > popcount(b); });
  std::vector<Mask> kept;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask k : kept) {
      if (is_subset(s, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  std::vector<Mask> kept;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask k : kept) {
      if (is_subset(k, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i after the multiplication.
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<Mask> minimal_transversals(const std::vector<Mask>& family) {
  std::vector<Mask> current{0};
  for (Mask e : family) {
    std::vector<Mask> next;
    next.reserve(current.size() * 2);
    for (Mask t : current) {
      if (t & e) {
        next.push_back(t);
      } else {
        for_each_vertex(e, [&](int v) { next.push_back(t | bit(v)); });
      }
    }
    current = minimal_sets(std::move(next));
    if (current.empty()) break;
  }
  return current;
}

}  // namespace hgalg
