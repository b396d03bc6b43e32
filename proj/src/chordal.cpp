#include "hgalg/chordal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>

#include "hgalg/complex.hpp"
#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

bool is_clique(const std::set<Mask>& edges, Mask s, int d) {
  bool ok = true;
  for_each_k_subset_of(s, d, [&](Mask e) {
    if (ok && !edges.count(e)) ok = false;
  });
  return ok;
}

// Lexicographically least j-subset of {0..n-1} all of whose d-subsets are edges.
std::optional<Mask> least_clique(const std::set<Mask>& edges, int n, int j, int d) {
  std::optional<Mask> found;
  std::function<void(Mask, int, int)> rec = [&](Mask chosen, int size, int from) {
    if (found) return;
    if (size == j) {
      found = chosen;
      return;
    }
    for (int v = from; v + (j - size) <= n && !found; ++v) {
      const Mask next = chosen | bit(v);
      bool ok = true;
      if (size + 1 >= d) {
        // only the d-subsets through v are new
        for_each_k_subset_of(chosen, d - 1, [&](Mask rest) {
          if (ok && !edges.count(rest | bit(v))) ok = false;
        });
      }
      if (ok) rec(next, size + 1, v + 1);
    }
  };
  rec(0, 0, 0);
  return found;
}

std::vector<Mask> neighbour_masks(const Hypergraph& g) {
  std::vector<Mask> nb(g.n_vertices(), 0);
  for (Mask e : g.edges()) {
    if (popcount(e) != 2) throw InvalidArgument("graph operations need edges of size 2");
    const int a = lowest_vertex(e), b = lowest_vertex(e & (e - 1));
    nb[a] |= bit(b);
    nb[b] |= bit(a);
  }
  return nb;
}

// Shortest path from a to b using only vertices in `allowed`.
std::vector<int> shortest_path(const std::vector<Mask>& nb, int a, int b, Mask allowed) {
  std::vector<int> parent(nb.size(), -1);
  std::deque<int> queue{a};
  Mask seen = bit(a);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for_each_vertex(nb[u] & allowed & ~seen, [&](int w) {
      seen |= bit(w);
      parent[w] = u;
      queue.push_back(w);
    });
  }
  if (!(seen & bit(b))) return {};
  std::vector<int> path;
  for (int u = b; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> find_chordless_cycle(const Hypergraph& g) {
  const auto nb = neighbour_masks(g);
  const Mask x = g.vertex_set();
  for (int v : vertices_of(x)) {
    const auto ns = vertices_of(nb[v]);
    for (std::size_t p = 0; p < ns.size(); ++p) {
      for (std::size_t q = p + 1; q < ns.size(); ++q) {
        const int a = ns[p], b = ns[q];
        if (nb[a] & bit(b)) continue;
        const Mask blocked = (nb[v] | bit(v)) & ~(bit(a) | bit(b));
        auto path = shortest_path(nb, a, b, x & ~blocked);
        if (path.empty()) continue;
        path.insert(path.begin(), v);
        return path;
      }
    }
  }
  return {};
}

std::uint64_t adjacency_code(const std::vector<Mask>& nb, const std::vector<int>& order) {
  std::uint64_t code = 0;
  int k = 0;
  const int n = static_cast<int>(order.size());
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q, ++k)
      if (nb[order[p]] & bit(order[q])) code |= std::uint64_t{1} << k;
  return code;
}

// Stable colour refinement starting from degrees; colours are ranks of
// isomorphism-invariant signatures.
std::vector<int> refine_colours(const std::vector<Mask>& nb) {
  const int n = static_cast<int>(nb.size());
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = popcount(nb[v]);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for_each_vertex(nb[v], [&](int w) { sig[v].second.push_back(colour[w]); });
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (static_cast<int>(sorted.size()) == classes) return colour;
    classes = static_cast<int>(sorted.size());
  }
}

}  // namespace

ChordalBuild build_chordal(const AttachmentSequence& seq) {
  const int d = seq.d;
  if (d < 2) throw InvalidArgument("build_chordal: d must be at least 2");
  if (seq.steps.empty()) throw InvalidArgument("build_chordal: empty sequence");
  if (seq.steps.front().j != 0) throw InvalidArgument("build_chordal: the first step must have j = 0");

  ChordalBuild out;
  out.resolved.d = d;
  std::set<Mask> edges;
  int n = 0;
  for (std::size_t s = 0; s < seq.steps.size(); ++s) {
    const auto& step = seq.steps[s];
    if (step.j < 0 || step.i < 1 || step.j >= step.i) {
      throw InvalidArgument("build_chordal: step " + std::to_string(s) + " needs 0 <= j < i");
    }
    if (n + step.i - step.j > kMaxVertices) throw SizeLimitExceeded("build_chordal: more than 63 vertices");
    Mask glue = 0;
    if (step.glue) {
      if (static_cast<int>(step.glue->size()) != step.j) {
        throw InvalidArgument("build_chordal: step " + std::to_string(s) + " glue must list j vertices");
      }
      for (int v : *step.glue) {
        if (v < 0 || v >= n || (glue & bit(v))) {
          throw InvalidArgument("build_chordal: step " + std::to_string(s) + " glue vertex " + std::to_string(v) +
                                " is invalid");
        }
        glue |= bit(v);
      }
      if (!is_clique(edges, glue, d)) {
        throw InvalidArgument("build_chordal: step " + std::to_string(s) + " glue does not span K_j^d");
      }
    } else {
      const auto found = least_clique(edges, n, step.j, d);
      if (!found) throw InvalidArgument("build_chordal: step " + std::to_string(s) + " has no K_j^d to glue on");
      glue = *found;
    }
    const Mask fresh = full_mask(n + step.i - step.j) & ~full_mask(n);
    const Mask block = glue | fresh;
    for_each_k_subset_of(block, d, [&](Mask e) {
      if (!is_subset(e, glue)) edges.insert(e);
    });
    n += step.i - step.j;
    out.blocks.push_back(block);
    out.resolved.steps.push_back({step.i, step.j, vertices_of(glue)});
  }
  out.hypergraph = Hypergraph(n, std::vector<Mask>(edges.begin(), edges.end()));
  return out;
}

AttachmentSequence line_sequence(int n, int d, int alpha) {
  if (n < 1 || alpha < 1 || 2 * alpha > d) throw InvalidArgument("line_sequence: need n >= 1 and 1 <= 2 alpha <= d");
  AttachmentSequence seq{d, {{d, 0, std::vector<int>{}}}};
  for (int k = 1; k < n; ++k) {
    std::vector<int> glue;
    const int start = k * (d - alpha);
    for (int v = start; v < start + alpha; ++v) glue.push_back(v);
    seq.steps.push_back({d, alpha, std::move(glue)});
  }
  return seq;
}

std::optional<AttachmentSequence> graph_sequence(const AttachmentSequence& seq) {
  AttachmentSequence graph = build_chordal(seq).resolved;
  graph.d = 2;
  try {
    build_chordal(graph);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  return graph;
}

ChordalGraphResult chordal_graph_recognize(const Hypergraph& g) {
  const auto nb = neighbour_masks(g);
  const Mask x = g.vertex_set();
  const int n = g.n_vertices();

  // Maximum cardinality search; the reverse visiting order is a perfect
  // elimination ordering exactly when g is chordal.
  std::vector<int> weight(n, 0);
  std::vector<int> visit;
  Mask left = x;
  while (left) {
    int best = -1;
    for_each_vertex(left, [&](int v) {
      if (best < 0 || weight[v] > weight[best]) best = v;
    });
    visit.push_back(best);
    left &= ~bit(best);
    for_each_vertex(nb[best] & left, [&](int w) { ++weight[w]; });
  }
  std::vector<int> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n, -1);
  for (std::size_t k = 0; k < peo.size(); ++k) pos[peo[k]] = static_cast<int>(k);

  bool ok = true;
  for (int v : peo) {
    Mask later = 0;
    for_each_vertex(nb[v], [&](int w) {
      if (pos[w] > pos[v]) later |= bit(w);
    });
    if (!later) continue;
    int first = -1;
    for_each_vertex(later, [&](int w) {
      if (first < 0 || pos[w] < pos[first]) first = w;
    });
    if (!is_subset(later & ~bit(first), nb[first])) {
      ok = false;
      break;
    }
  }
  ChordalGraphResult out;
  out.chordal = ok;
  if (ok) {
    out.elimination_order = std::move(peo);
  } else {
    out.chordless_cycle = find_chordless_cycle(g);
    if (out.chordless_cycle.size() < 4) throw std::logic_error("chordal_graph_recognize: no chordless cycle found");
  }
  return out;
}

CorollaryGraphReport corollary_graph_check(const Hypergraph& g, const SearchOptions& options) {
  CorollaryGraphReport out;
  out.chordal = chordal_graph_recognize(g).chordal;
  // Ground vertices outside X(g) only contribute variables; they are left out.
  const Mask x = g.vertex_set();
  const SimplicialComplex delta = clique_complex(g, 2);
  std::vector<Mask> gens;
  for (Mask m : delta.minimal_nonfaces()) {
    if (is_subset(m, x)) gens.push_back(m);
  }
  sort_lex(gens);
  const MonomialIdeal ideal(g.n_vertices(), std::move(gens));
  out.linear_quotients = ideal.is_zero() || search_d_quotients(ideal, 1, options).has_value();
  return out;
}

bool two_gluing_classification(int m, int i, int j, int d) {
  if (m < d || j < 0 || j >= i || j > m) throw InvalidArgument("two_gluing_classification: need m >= d, 0 <= j < i, j <= m");
  if (i < d && j < d) return true;
  return i >= d && (j == m - 1 || j == i - 1);
}

Hypergraph two_gluing(int m, int i, int j, int d) {
  if (m < d || j < 0 || j >= i || j > m) throw InvalidArgument("two_gluing: need m >= d, 0 <= j < i, j <= m");
  std::vector<int> glue(j);
  for (int v = 0; v < j; ++v) glue[v] = v;
  const AttachmentSequence seq{d, {{m, 0, std::vector<int>{}}, {i, j, glue}}};
  return build_chordal(seq).hypergraph;
}

TwoGluingReport two_gluing_check(int m, int i, int j, int d, const SearchOptions& options) {
  TwoGluingReport out;
  out.predicted = two_gluing_classification(m, i, j, d);
  const MonomialIdeal ideal = edge_ideal(two_gluing(m, i, j, d));
  out.empirical = search_d_quotients(ideal, 1, options).has_value();
  return out;
}

std::uint64_t canonical_graph_code(const Hypergraph& g) {
  const int n = g.n_vertices();
  if (n > 11) throw SizeLimitExceeded("canonical_graph_code: at most 11 vertices");
  const auto nb = neighbour_masks(g);
  const auto colour = refine_colours(nb);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in order
  for (int p = 0; p < n;) {
    int q = p;
    while (q < n && colour[order[q]] == colour[order[p]]) ++q;
    cells.emplace_back(p, q);
    p = q;
  }
  // Minimum code over all orders that respect the colour classes.
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      best = std::min(best, adjacency_code(nb, order));
      return;
    }
    auto first = order.begin() + cells[c].first, last = order.begin() + cells[c].second;
    std::sort(first, last);
    do {
      rec(c + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

std::vector<AttachmentSequence> connected_chordal_graph_sequences(int max_vertices) {
  if (max_vertices > 11) throw SizeLimitExceeded("connected_chordal_graph_sequences: at most 11 vertices");
  std::vector<AttachmentSequence> out;
  if (max_vertices < 1) return out;
  struct Entry {
    AttachmentSequence seq;
    std::vector<Mask> nb;
  };
  std::vector<Entry> layer{{AttachmentSequence{2, {{1, 0, std::vector<int>{}}}}, {0}}};
  out.push_back(layer.front().seq);
  for (int k = 1; k < max_vertices; ++k) {
    std::vector<Entry> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& e : layer) {
      // every nonempty clique of the current graph is a possible neighbourhood
      std::function<void(Mask, Mask)> cliques = [&](Mask clique, Mask candidates) {
        if (clique) {
          std::vector<Mask> nb = e.nb;
          nb.push_back(clique);
          for_each_vertex(clique, [&](int v) { nb[v] |= bit(k); });
          std::vector<Mask> edges;
          for (int v = 0; v <= k; ++v)
            for_each_vertex(nb[v] & ~full_mask(v + 1), [&](int w) { edges.push_back(bit(v) | bit(w)); });
          if (seen.insert(canonical_graph_code(Hypergraph(k + 1, edges))).second) {
            Entry child{e.seq, std::move(nb)};
            const int size = popcount(clique);
            child.seq.steps.push_back({size + 1, size, vertices_of(clique)});
            next.push_back(std::move(child));
          }
        }
        for_each_vertex(candidates, [&](int v) { cliques(clique | bit(v), candidates & e.nb[v] & ~full_mask(v + 1)); });
      };
      cliques(0, full_mask(k));
    }
    for (const auto& e : next) out.push_back(e.seq);
    layer = std::move(next);
  }
  return out;
}

std::optional<int> complement_diameter(const Hypergraph& g) {
  const auto nb = neighbour_masks(g);
  const Mask x = g.vertex_set();
  int diameter = 0;
  for (int s : vertices_of(x)) {
    Mask seen = bit(s), frontier = bit(s);
    int dist = 0;
    while (true) {
      Mask next = 0;
      for_each_vertex(frontier, [&](int u) { next |= x & ~nb[u] & ~bit(u); });
      next &= ~seen;
      if (!next) break;
      seen |= next;
      frontier = next;
      ++dist;
    }
    if (seen != x) return std::nullopt;
    diameter = std::max(diameter, dist);
  }
  return diameter;
}

HypergraphChordality chordal_hypergraph_test(const Hypergraph& h, std::size_t state_budget) {
  const auto u = h.uniformity();
  if (h.edge_count() > 0 && !u) throw InvalidArgument("chordal_hypergraph_test: hypergraph is not uniform");
  const int d = u.value_or(2);
  const std::set<Mask> edges(h.edges().begin(), h.edges().end());

  HypergraphChordality out;
  std::unordered_set<Mask> dead;
  std::vector<int> order;
  bool exhausted = false;

  auto simplicial = [&](int w, Mask alive) {
    Mask closed = bit(w);
    for (Mask e : h.edges()) {
      if ((e & bit(w)) && is_subset(e, alive)) closed |= e;
    }
    return is_clique(edges, closed, d);
  };

  std::function<bool(Mask)> rec = [&](Mask alive) {
    if (popcount(alive) <= 1) {
      if (alive) order.push_back(lowest_vertex(alive));
      return true;
    }
    if (dead.count(alive)) return false;
    if (++out.states_explored > state_budget) {
      exhausted = true;
      return false;
    }
    for (int w : vertices_of(alive)) {
      if (!simplicial(w, alive)) continue;
      order.push_back(w);
      if (rec(alive & ~bit(w))) return true;
      order.pop_back();
      if (exhausted) return false;
    }
    dead.insert(alive);
    return false;
  };

  if (rec(h.vertex_set())) {
    out.status = ChordalStatus::chordal;
    out.elimination_order = std::move(order);
  } else {
    out.status = exhausted ? ChordalStatus::inconclusive : ChordalStatus::not_chordal;
  }
  return out;
}

HypercycleReport hypercycle_not_chordal_check(int n, int d, int alpha, std::size_t state_budget) {
  const Hypergraph h = make_cycle(n, d, alpha);
  HypercycleReport out;
  out.result = chordal_hypergraph_test(h, state_budget);
  if (d == 2) out.graph_recognizer_chordal = chordal_graph_recognize(h).chordal;
  return out;
}

}  // namespace hgalg
