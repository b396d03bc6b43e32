#include "hgalg/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "hgalg/errors.hpp"

namespace hgalg {

SimplicialComplex::SimplicialComplex(int n, std::vector<Mask> facets)
    : n_(n), facets_(maximal_sets(std::move(facets))) {
  if (n_ < 0 || n_ > kMaxVertices) {
    throw InvalidArgument("complex vertex count must lie in 0.." + std::to_string(kMaxVertices));
  }
  for (Mask f : facets_) {
    if (!is_subset(f, full_mask(n_))) throw InvalidArgument("facet uses a vertex outside the ground set");
  }
}

SimplicialComplex SimplicialComplex::void_complex(int n_vertices) { return SimplicialComplex(n_vertices, {}); }

SimplicialComplex SimplicialComplex::empty_complex(int n_vertices) { return SimplicialComplex(n_vertices, {Mask{0}}); }

SimplicialComplex SimplicialComplex::simplex(int n_vertices, Mask vertices) {
  return SimplicialComplex(n_vertices, {vertices});
}

SimplicialComplex SimplicialComplex::from_facets(int n_vertices, std::vector<Mask> facets) {
  return SimplicialComplex(n_vertices, std::move(facets));
}

SimplicialComplex SimplicialComplex::from_minimal_nonfaces(int n_vertices, std::vector<Mask> nonfaces) {
  if (n_vertices < 0 || n_vertices > kMaxVertices) throw InvalidArgument("vertex count out of range");
  const Mask ground = full_mask(n_vertices);
  nonfaces = minimal_sets(std::move(nonfaces));
  for (Mask s : nonfaces) {
    if (!is_subset(s, ground)) throw InvalidArgument("nonface uses a vertex outside the ground set");
  }
  std::vector<Mask> facets;
  for (Mask t : minimal_transversals(nonfaces)) facets.push_back(ground & ~t);
  return with_nonfaces(n_vertices, std::move(facets), std::move(nonfaces));
}

SimplicialComplex SimplicialComplex::with_nonfaces(int n, std::vector<Mask> facets, std::vector<Mask> nonfaces) {
  SimplicialComplex c(n, std::move(facets));
  std::sort(nonfaces.begin(), nonfaces.end());
  std::call_once(c.cache_->once, [&] { c.cache_->nonfaces = std::move(nonfaces); });
  return c;
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return kVoidDimension;
  int best = 0;
  for (Mask f : facets_) best = std::max(best, popcount(f));
  return best - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](Mask f) { return popcount(f) == popcount(facets_.front()); });
}

bool SimplicialComplex::contains(Mask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](Mask f) { return is_subset(face, f); });
}

Mask SimplicialComplex::vertex_set() const {
  return std::accumulate(facets_.begin(), facets_.end(), Mask{0}, std::bit_or<>{});
}

const std::vector<Mask>& SimplicialComplex::minimal_nonfaces() const {
  std::call_once(cache_->once, [this] {
    // S is a nonface iff it meets the complement of every facet.
    std::vector<Mask> complements;
    complements.reserve(facets_.size());
    for (Mask f : facets_) complements.push_back(full_mask(n_) & ~f);
    cache_->nonfaces = minimal_transversals(complements);
  });
  return cache_->nonfaces;
}

std::vector<Mask> SimplicialComplex::faces_of_size(int k) const {
  std::vector<Mask> out;
  for (Mask f : facets_) for_each_k_subset_of(f, k, [&](Mask s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex independence_complex(const Hypergraph& h) {
  std::vector<Mask> nonfaces = h.edges();
  for_each_vertex(full_mask(h.n_vertices()) & ~h.vertex_set(), [&](int v) { nonfaces.push_back(bit(v)); });
  return SimplicialComplex::from_minimal_nonfaces(h.n_vertices(), std::move(nonfaces));
}

namespace {

// Maximal cliques of a d-uniform hypergraph by backtracking over vertices in
// increasing order. A set is a clique when all its d-subsets are edges.
std::vector<Mask> maximal_cliques(const Hypergraph& h, int d) {
  const std::unordered_set<Mask> edges(h.edges().begin(), h.edges().end());
  const std::vector<int> vs = vertices_of(h.vertex_set());
  auto extends = [&](Mask clique, int v) {
    if (popcount(clique) < d - 1) return true;
    bool ok = true;
    for_each_k_subset_of(clique, d - 1, [&](Mask t) {
      if (ok && !edges.count(t | bit(v))) ok = false;
    });
    return ok;
  };
  std::vector<Mask> out;
  std::function<void(Mask, std::size_t)> grow = [&](Mask clique, std::size_t next) {
    bool maximal = true;
    for (std::size_t idx = 0; idx < vs.size(); ++idx) {
      const int v = vs[idx];
      if ((clique & bit(v)) || !extends(clique, v)) continue;
      if (idx >= next) {
        grow(clique | bit(v), idx + 1);
      }
      maximal = false;
    }
    if (maximal) out.push_back(clique);
  };
  grow(0, 0);
  return out;
}

}  // namespace

SimplicialComplex clique_complex(const Hypergraph& h, int d) {
  if (d < 2) throw InvalidArgument("clique_complex: d must be at least 2");
  if (!h.is_uniform(d)) throw InvalidArgument("clique_complex: hypergraph is not " + std::to_string(d) + "-uniform");
  std::vector<Mask> facets = maximal_cliques(h, d);
  if (binomial(h.vertex_count(), d) > (std::int64_t{1} << 20)) {
    return SimplicialComplex::from_facets(h.n_vertices(), std::move(facets));
  }
  // Minimal nonfaces: the non-edge d-subsets of X and the vertices outside X.
  std::vector<Mask> nonfaces;
  for_each_k_subset_of(h.vertex_set(), d, [&](Mask s) {
    if (!h.has_edge(s)) nonfaces.push_back(s);
  });
  for_each_vertex(full_mask(h.n_vertices()) & ~h.vertex_set(), [&](int v) { nonfaces.push_back(bit(v)); });
  return SimplicialComplex::with_nonfaces(h.n_vertices(), std::move(facets), std::move(nonfaces));
}

SimplicialComplex edge_complex(const Hypergraph& h) {
  return SimplicialComplex::from_facets(h.n_vertices(), h.edges());
}

SimplicialComplex restrict(const SimplicialComplex& c, Mask vertices) {
  if (c.is_void()) return c;
  std::vector<Mask> facets;
  facets.reserve(c.facet_count());
  for (Mask f : c.facets()) facets.push_back(f & vertices);
  return SimplicialComplex::from_facets(c.n_vertices(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& c, Mask face) {
  if (!c.contains(face)) throw InvalidArgument("link: the given set is not a face");
  std::vector<Mask> facets;
  for (Mask f : c.facets()) {
    if (is_subset(face, f)) facets.push_back(f & ~face);
  }
  return SimplicialComplex::from_facets(c.n_vertices(), std::move(facets));
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  const Mask ground = full_mask(c.n_vertices());
  std::vector<Mask> dual_nonfaces;
  for (Mask f : c.facets()) dual_nonfaces.push_back(ground & ~f);
  // Facets of the dual are the complements of the minimal nonfaces.
  std::vector<Mask> facets;
  for (Mask s : c.minimal_nonfaces()) facets.push_back(ground & ~s);
  return SimplicialComplex::with_nonfaces(c.n_vertices(), std::move(facets), std::move(dual_nonfaces));
}

SimplicialComplex strip_small_facets(const SimplicialComplex& c, int d) {
  if (c.is_void()) return c;
  std::vector<Mask> facets;
  for (Mask f : c.facets()) {
    const int dim = popcount(f) - 1;
    if (dim >= 1 && dim <= d - 2) {
      for_each_vertex(f, [&](int v) { facets.push_back(bit(v)); });
    } else {
      facets.push_back(f);
    }
  }
  return SimplicialComplex::from_facets(c.n_vertices(), std::move(facets));
}

SimplicialComplex pad_facets(const SimplicialComplex& c, int d) {
  if (d < 1) throw InvalidArgument("pad_facets: d must be positive");
  std::vector<Mask> facets = c.facets();
  for_each_k_subset_of(c.vertex_set(), d - 1, [&](Mask s) {
    if (!c.contains(s)) facets.push_back(s);
  });
  return SimplicialComplex::from_facets(c.n_vertices(), std::move(facets));
}

bool is_leaf(Mask facet, const std::vector<Mask>& facets) {
  bool alone = true;
  for (Mask g : facets) {
    if (g != facet) alone = false;
  }
  if (alone) return true;
  for (Mask g : facets) {
    if (g == facet) continue;
    const Mask shared = facet & g;
    const bool covers = std::all_of(facets.begin(), facets.end(), [&](Mask h) {
      return h == facet || is_subset(facet & h, shared);
    });
    if (covers) return true;
  }
  return false;
}

namespace {

// Groups facets into connected components by shared vertices.
std::vector<std::vector<Mask>> facet_components(const std::vector<Mask>& facets) {
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (facets[i] & facets[j]) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<Mask>> groups;
  std::vector<long> slot(facets.size(), -1);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(facets[i]);
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    const Mask ua = std::accumulate(a.begin(), a.end(), Mask{0}, std::bit_or<>{});
    const Mask ub = std::accumulate(b.begin(), b.end(), Mask{0}, std::bit_or<>{});
    return lex_less(ua, ub);
  });
  return groups;
}

// Peels leaves off the full component; the reversed peel sequence is a leaf
// order. Failed remainders are memoized.
std::optional<std::vector<Mask>> component_leaf_order(const std::vector<Mask>& facets) {
  if (facets.size() > 64) throw SizeLimitExceeded("leaf order search supports at most 64 facets per component");
  std::unordered_set<std::uint64_t> dead;
  std::vector<Mask> peeled;
  std::function<bool(std::uint64_t)> peel = [&](std::uint64_t remaining) {
    if (std::popcount(remaining) <= 1) {
      if (remaining) peeled.push_back(facets[std::countr_zero(remaining)]);
      return true;
    }
    if (dead.count(remaining)) return false;
    std::vector<Mask> current;
    for (std::uint64_t r = remaining; r; r &= r - 1) current.push_back(facets[std::countr_zero(r)]);
    for (std::uint64_t r = remaining; r; r &= r - 1) {
      const int idx = std::countr_zero(r);
      if (!is_leaf(facets[idx], current)) continue;
      peeled.push_back(facets[idx]);
      if (peel(remaining & ~(std::uint64_t{1} << idx))) return true;
      peeled.pop_back();
    }
    dead.insert(remaining);
    return false;
  };
  const std::uint64_t all = facets.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << facets.size()) - 1;
  if (!peel(all)) return std::nullopt;
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

}  // namespace

std::optional<std::vector<Mask>> quasi_forest_leaf_order(const SimplicialComplex& c) {
  std::vector<Mask> order;
  for (const auto& component : facet_components(c.facets())) {
    auto part = component_leaf_order(component);
    if (!part) return std::nullopt;
    order.insert(order.end(), part->begin(), part->end());
  }
  return order;
}

}  // namespace hgalg
