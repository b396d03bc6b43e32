// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the bitmask helpers.
#ifndef HGALG_TESTS_ORACLE_HPP
#define HGALG_TESTS_ORACLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "hgalg/bits.hpp"

namespace oracle {

using hgalg::Mask;

// p == 0 means the rationals.
inline int dense_rank(std::vector<std::vector<int>> m, std::uint32_t p) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  int rank = 0;
  if (p == 0) {
    std::vector<std::vector<mpq_class>> a(m.size(), std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
      std::size_t piv = row;
      while (piv < a.size() && a[piv][c] == 0) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[piv], a[row]);
      for (std::size_t i = row + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        const mpq_class f = a[i][c] / a[row][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[row][j];
      }
      ++row;
      ++rank;
    }
    return rank;
  }
  const long long q = p;
  for (auto& r : m)
    for (auto& x : r) x = static_cast<int>(((x % q) + q) % q);
  auto inv = [q](long long a) {
    long long r = 1, e = q - 2;
    a %= q;
    while (e) {
      if (e & 1) r = r * a % q;
      a = a * a % q;
      e >>= 1;
    }
    return r;
  };
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const long long iv = inv(m[row][c]);
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const long long f = m[i][c] * iv % q;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = static_cast<int>(((m[i][j] - f * m[row][j]) % q + q) % q);
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Reduced homology (indexed by degree + 1) of the subsets of `ground`
// accepted by is_face; empty when is_face(0) is false.
inline std::vector<long long> reduced_homology(Mask ground, const std::function<bool(Mask)>& is_face,
                                               std::uint32_t p) {
  if (!is_face(0)) return {};
  std::vector<std::vector<Mask>> by_size(hgalg::popcount(ground) + 1);
  hgalg::for_each_subset(ground, [&](Mask s) {
    if (is_face(s)) by_size[hgalg::popcount(s)].push_back(s);
  });
  while (by_size.size() > 1 && by_size.back().empty()) by_size.pop_back();
  const int top = static_cast<int>(by_size.size());
  std::vector<long long> rank(top + 1, 0);
  for (int k = 1; k < top; ++k) {
    std::map<Mask, int> col;
    for (std::size_t i = 0; i < by_size[k - 1].size(); ++i) col[by_size[k - 1][i]] = static_cast<int>(i);
    std::vector<std::vector<int>> m;
    for (Mask f : by_size[k]) {
      std::vector<int> r(by_size[k - 1].size(), 0);
      int sign = 1;
      for (int v = 0; v < 64; ++v) {
        if (!(f >> v & 1)) continue;
        r[col.at(f & ~(Mask{1} << v))] = sign;
        sign = -sign;
      }
      m.push_back(std::move(r));
    }
    rank[k] = dense_rank(std::move(m), p);
  }
  std::vector<long long> h(top);
  for (int k = 0; k < top; ++k) h[k] = static_cast<long long>(by_size[k].size()) - rank[k] - rank[k + 1];
  return h;
}

using Table = std::map<std::pair<int, int>, long long>;

// Hochster's formula summed over every V ⊆ [n] with no pruning.
inline Table hochster(int n, const std::function<bool(Mask)>& is_face, std::uint32_t p) {
  Table t;
  hgalg::for_each_subset(hgalg::full_mask(n), [&](Mask v) {
    const auto h = reduced_homology(v, [&](Mask f) { return is_face(f); }, p);
    const int size = hgalg::popcount(v);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k]) t[{size - static_cast<int>(k), size}] += h[k];
    }
  });
  return t;
}

// F is a face iff it lies in X and contains no edge.
inline std::function<bool(Mask)> independence_faces(Mask x, std::vector<Mask> edges) {
  return [x, edges](Mask f) {
    if (!hgalg::is_subset(f, x)) return false;
    for (Mask e : edges)
      if (hgalg::is_subset(e, f)) return false;
    return true;
  };
}

// F is a face iff it lies in X and every d-subset is an edge.
inline std::function<bool(Mask)> clique_faces(Mask x, std::vector<Mask> edges, int d) {
  return [x, edges, d](Mask f) {
    if (!hgalg::is_subset(f, x)) return false;
    bool ok = true;
    hgalg::for_each_subset(f, [&](Mask s) {
      if (ok && hgalg::popcount(s) == d && std::find(edges.begin(), edges.end(), s) == edges.end()) ok = false;
    });
    return ok;
  };
}

// F is a face iff it lies inside some facet.
inline std::function<bool(Mask)> facet_faces(std::vector<Mask> facets) {
  return [facets](Mask f) {
    for (Mask g : facets)
      if (hgalg::is_subset(f, g)) return true;
    return false;
  };
}

inline std::vector<Mask> random_family(std::mt19937_64& rng, int n, int count, int min_size, int max_size) {
  std::vector<Mask> out;
  std::uniform_int_distribution<int> size_dist(min_size, max_size);
  for (int k = 0; k < count; ++k) {
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    std::shuffle(vs.begin(), vs.end(), rng);
    Mask m = 0;
    const int s = std::min(n, size_dist(rng));
    for (int i = 0; i < s; ++i) m |= Mask{1} << vs[i];
    out.push_back(m);
  }
  return out;
}

}  // namespace oracle

#endif
