#ifndef HGALG_BITS_HPP
#define HGALG_BITS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hgalg {

// A vertex subset of {0..63} stored as a bitmask.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 63;

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int lowest_vertex(Mask m) { return std::countr_zero(m); }

inline Mask mask_of(std::initializer_list<int> vs) {
  Mask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

inline std::vector<int> vertices_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(lowest_vertex(m));
    m &= m - 1;
  }
  return out;
}

// Calls f(v) for every vertex in m, ascending.
template <class F>
void for_each_vertex(Mask m, F&& f) {
  while (m) {
    f(lowest_vertex(m));
    m &= m - 1;
  }
}

// Calls f(s) for every subset s of m (including 0 and m), in increasing
// numeric order.
template <class F>
void for_each_subset(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

// Calls f(s) for every k-subset of the first n vertices (Gosper's hack).
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask s = full_mask(k);
  const Mask limit = Mask{1} << n;
  while (s < limit) {
    f(s);
    Mask c = s & (~s + 1);
    Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

// Calls f(s) for every k-subset of the vertices in m.
template <class F>
void for_each_k_subset_of(Mask m, int k, F&& f) {
  const std::vector<int> vs = vertices_of(m);
  const int n = static_cast<int>(vs.size());
  for_each_k_subset(n, k, [&](Mask idx) {
    Mask s = 0;
    for_each_vertex(idx, [&](int i) { s |= bit(vs[i]); });
    f(s);
  });
}

// Lexicographic comparison of two subsets viewed as ascending vertex lists.
inline bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int va = lowest_vertex(a), vb = lowest_vertex(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline void sort_lex(std::vector<Mask>& v) { std::sort(v.begin(), v.end(), lex_less); }

// Keeps only the inclusion-maximal sets; result is sorted and deduplicated.
std::vector<Mask> maximal_sets(std::vector<Mask> sets);

// Keeps only the inclusion-minimal sets; result is sorted and deduplicated.
std::vector<Mask> minimal_sets(std::vector<Mask> sets);

// Exact binomial coefficient; 0 whenever k < 0, n < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Minimal transversals (hitting sets) of a family of sets, by Berge's
// incremental algorithm. The family {} has the single transversal {}; a
// family containing the empty set has none.
std::vector<Mask> minimal_transversals(const std::vector<Mask>& family);

}  // namespace hgalg

#endif  // HGALG_BITS_HPP
