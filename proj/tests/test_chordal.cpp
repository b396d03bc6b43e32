#include <chrono>
#include <numeric>
#include <map>
#include <set>
#include <random>

#include "doctest.h"
#include "hgalg/betti.hpp"
#include "hgalg/chordal.hpp"
#include "hgalg/complex.hpp"
#include "hgalg/errors.hpp"
#include "oracle.hpp"

using namespace hgalg;

namespace {

Hypergraph graph_from_bits(int n, unsigned code) {
  std::vector<Mask> edges;
  int k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++k)
      if (code >> k & 1) edges.push_back(bit(a) | bit(b));
  return Hypergraph(n, edges);
}

// Chordal iff no vertex subset of size >= 4 induces a cycle.
bool chordal_brute(const Hypergraph& g) {
  bool chordal = true;
  for_each_subset(g.vertex_set(), [&](Mask s) {
    if (!chordal || popcount(s) < 4) return;
    std::vector<Mask> nb(g.n_vertices(), 0);
    for (Mask e : g.edges()) {
      if (!is_subset(e, s)) continue;
      nb[lowest_vertex(e)] |= e;
      nb[63 - std::countl_zero(e)] |= e;
    }
    bool all_two = true;
    for_each_vertex(s, [&](int v) { all_two = all_two && popcount(nb[v] & ~bit(v)) == 2; });
    if (!all_two) return;
    Mask seen = bit(lowest_vertex(s)), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for_each_vertex(frontier, [&](int v) { next |= nb[v]; });
      frontier = next & s & ~seen;
      seen |= frontier;
    }
    if (seen == s) chordal = false;
  });
  return chordal;
}

// Random attachment sequence: block sizes in [min_i, max_i], random glue among
// the d-cliques of the current hypergraph.
AttachmentSequence random_sequence(std::mt19937_64& rng, int d, int steps, int min_i, int max_i, int max_vertices) {
  std::uniform_int_distribution<int> isz(min_i, max_i);
  AttachmentSequence seq{d, {{isz(rng), 0, std::vector<int>{}}}};
  for (int s = 1; s < steps; ++s) {
    const auto built = build_chordal(seq);
    const int n = built.hypergraph.n_vertices();
    const int i = isz(rng);
    std::uniform_int_distribution<int> jsz(0, std::min(i - 1, n));
    const int j = jsz(rng);
    if (n + i - j > max_vertices) break;
    std::vector<Mask> cliques;
    for_each_k_subset(n, j, [&](Mask g) {
      bool ok = true;
      for_each_k_subset_of(g, d, [&](Mask e) { ok = ok && built.hypergraph.has_edge(e); });
      if (ok) cliques.push_back(g);
    });
    if (cliques.empty()) continue;
    const Mask glue = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
    seq.steps.push_back({i, j, vertices_of(glue)});
  }
  return seq;
}

// K_{k+1}^d followed by K_{k+1}^d glued along random K_k^d.
AttachmentSequence random_tree_sequence(std::mt19937_64& rng, int d, int k, int steps) {
  AttachmentSequence seq{d, {{k + 1, 0, std::vector<int>{}}}};
  for (int s = 1; s < steps; ++s) {
    const auto built = build_chordal(seq);
    std::vector<Mask> cliques;
    for (Mask b : built.blocks) for_each_k_subset_of(b, k, [&](Mask g) { cliques.push_back(g); });
    const Mask glue = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
    seq.steps.push_back({k + 1, k, vertices_of(glue)});
  }
  return seq;
}

}  // namespace

TEST_CASE("build_chordal basic sequences") {
  CHECK(build_chordal({3, {{5, 0, std::nullopt}}}).hypergraph == make_complete(5, 3));
  for (int d = 2; d <= 4; ++d)
    for (int alpha = 1; 2 * alpha <= d; ++alpha)
      for (int n = 1; n <= 4; ++n) CHECK(build_chordal(line_sequence(n, d, alpha)).hypergraph == make_line(n, d, alpha));

  // i < d only adds isolated vertices
  const auto iso = build_chordal({3, {{3, 0, std::nullopt}, {2, 1, std::nullopt}}});
  CHECK(iso.hypergraph.n_vertices() == 4);
  CHECK(iso.hypergraph.edge_count() == 1);

  // auto glue takes the lex-least clique
  const auto two = build_chordal({2, {{3, 0, std::nullopt}, {3, 2, std::nullopt}}});
  CHECK(two.resolved.steps[1].glue == std::vector<int>{0, 1});
  CHECK(two.blocks[1] == mask_of({0, 1, 3}));

  CHECK_THROWS_AS(build_chordal({2, {{3, 1, std::nullopt}}}), InvalidArgument);
  CHECK_THROWS_AS(build_chordal({2, {{3, 0, std::nullopt}, {3, 3, std::nullopt}}}), InvalidArgument);
  // {0,3} is not an edge of the path built so far
  const AttachmentSequence bad{2, {{2, 0, std::vector<int>{}}, {2, 1, std::vector<int>{1}}, {3, 2, std::vector<int>{0, 2}}}};
  CHECK_THROWS_AS(build_chordal(bad), InvalidArgument);
  CHECK_THROWS_AS(build_chordal({2, {{3, 0, std::nullopt}, {3, 1, std::vector<int>{7}}}}), InvalidArgument);
}

TEST_CASE("graph recognizer matches the induced-cycle oracle on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    const unsigned pairs = n * (n - 1) / 2;
    for (unsigned code = 0; code < (1u << pairs); ++code) {
      const Hypergraph g = graph_from_bits(n, code);
      const auto r = chordal_graph_recognize(g);
      REQUIRE(r.chordal == chordal_brute(g));
      if (!r.chordal) {
        // the witness is an induced cycle
        const Mask s = [&] {
          Mask m = 0;
          for (int v : r.chordless_cycle) m |= bit(v);
          return m;
        }();
        REQUIRE(popcount(s) == static_cast<int>(r.chordless_cycle.size()));
        REQUIRE(r.chordless_cycle.size() >= 4);
        int induced_edges = 0;
        for (Mask e : g.edges()) induced_edges += is_subset(e, s);
        REQUIRE(induced_edges == static_cast<int>(r.chordless_cycle.size()));
      }
    }
  }
  const auto c4 = chordal_graph_recognize(make_cycle(4, 2, 1));
  CHECK_FALSE(c4.chordal);
  CHECK(c4.chordless_cycle.size() == 4);
}

TEST_CASE("builder outputs with d = 2 are chordal graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto seq = random_sequence(rng, 2, 6, 1, 4, 12);
    const auto g = build_chordal(seq).hypergraph;
    CHECK(chordal_graph_recognize(g).chordal);
    CHECK(chordal_hypergraph_test(g).status == ChordalStatus::chordal);
  }
  // a 2-tree
  std::mt19937_64 rng2(5);
  CHECK(chordal_graph_recognize(build_chordal(random_tree_sequence(rng2, 2, 2, 6)).hypergraph).chordal);
}

TEST_CASE("clique ideal has linear quotients exactly for chordal graphs") {
  for (int n = 1; n <= 5; ++n) {
    const unsigned pairs = n * (n - 1) / 2;
    for (unsigned code = 0; code < (1u << pairs); ++code) {
      const auto r = corollary_graph_check(graph_from_bits(n, code));
      REQUIRE(r.agree());
    }
  }
  const auto c4 = corollary_graph_check(make_cycle(4, 2, 1));
  CHECK_FALSE(c4.chordal);
  CHECK_FALSE(c4.linear_quotients);
  const Hypergraph diamond(4, {mask_of({0, 1}), mask_of({0, 2}), mask_of({0, 3}), mask_of({1, 2}), mask_of({1, 3})});
  const auto k4e = corollary_graph_check(diamond);
  CHECK(k4e.chordal);
  CHECK(k4e.linear_quotients);
}

TEST_CASE("two-gluing classification") {
  CHECK(two_gluing_classification(4, 2, 1, 3));
  // a single K_3^3 block is already i = d
  CHECK_FALSE(two_gluing_classification(4, 3, 1, 3));
  CHECK_FALSE(two_gluing_classification(5, 4, 2, 3));
  CHECK(two_gluing_classification(4, 4, 3, 3));
  CHECK(two_gluing_check(5, 4, 2, 3).agree());
  CHECK(two_gluing_check(4, 4, 3, 3).agree());
  CHECK(two_gluing_check(4, 3, 1, 3).agree());
  CHECK(two_gluing_check(4, 2, 1, 3).agree());
  CHECK(two_gluing(4, 3, 1, 3).n_vertices() == 6);

  // Gluing along all of K_m^d just gives K_i^d, outside the predicate.
  CHECK(two_gluing(3, 5, 3, 2) == make_complete(5, 2));
  CHECK_FALSE(two_gluing_check(3, 5, 3, 2).predicted);
  CHECK(two_gluing_check(3, 5, 3, 2).empirical);

  const auto start = std::chrono::steady_clock::now();
  int checked = 0;
  for (int d = 2; d <= 3; ++d)
    for (int m = d; m <= 9; ++m)
      for (int i = 1; i <= 9; ++i)
        for (int j = 0; j < std::min(i, m); ++j) {
          if (m + i - j > 9) continue;
          INFO("m=" << m << " i=" << i << " j=" << j << " d=" << d);
          CHECK(two_gluing_check(m, i, j, d, SearchOptions{128}).agree());
          ++checked;
        }
  MESSAGE(checked << " gluings in "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << "s");
}

TEST_CASE("complement diameter") {
  const Hypergraph p5(5, {mask_of({0, 1}), mask_of({1, 2}), mask_of({2, 3}), mask_of({3, 4})});
  CHECK(complement_diameter(p5) == 2);
  CHECK_FALSE(complement_diameter(make_complete(4, 2)).has_value());
  CHECK(complement_diameter(Hypergraph(1, {})) == 0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = build_chordal(random_sequence(rng, 2, 6, 2, 4, 9)).hypergraph;
    const auto diam = complement_diameter(g);
    if (diam) CHECK(*diam <= 3);
  }
}

TEST_CASE("chordal hypergraph test") {
  // graphs: agrees with the recognizer
  for (unsigned code = 0; code < (1u << 10); ++code) {
    const auto g = graph_from_bits(5, code);
    REQUIRE((chordal_hypergraph_test(g).status == ChordalStatus::chordal) == chordal_graph_recognize(g).chordal);
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto seq = random_sequence(rng, 3, 5, 2, 5, 14);
    const auto r = chordal_hypergraph_test(build_chordal(seq).hypergraph);
    CHECK(r.status == ChordalStatus::chordal);
  }
  CHECK(chordal_hypergraph_test(make_line(4, 4, 2)).status == ChordalStatus::chordal);
  CHECK(chordal_hypergraph_test(make_cycle(4, 3, 1), 0).status == ChordalStatus::inconclusive);
}

TEST_CASE("hypercycles") {
  const auto c4 = hypercycle_not_chordal_check(4, 2, 1);
  CHECK(c4.result.status == ChordalStatus::not_chordal);
  CHECK(c4.graph_recognizer_chordal == false);
  const auto c3 = hypercycle_not_chordal_check(3, 2, 1);
  CHECK(c3.result.status == ChordalStatus::chordal);
  CHECK(c3.graph_recognizer_chordal == true);
  for (int n = 4; n <= 7; ++n) CHECK(hypercycle_not_chordal_check(n, 2, 1).result.status == ChordalStatus::not_chordal);
  CHECK(hypercycle_not_chordal_check(3, 4, 2).result.status == ChordalStatus::not_chordal);
  CHECK(hypercycle_not_chordal_check(4, 4, 2).result.status == ChordalStatus::not_chordal);
  CHECK(hypercycle_not_chordal_check(4, 6, 3).result.status == ChordalStatus::not_chordal);

  // With 2α < d the closing edge meets the rest in fewer than d vertices, so
  // it can be glued on along an edgeless K_{2α}^d.
  const auto c431 = hypercycle_not_chordal_check(4, 3, 1);
  CHECK(c431.result.status == ChordalStatus::chordal);
  CHECK(c431.result.elimination_order.size() == 8);
  const AttachmentSequence closing{3, {{3, 0, std::vector<int>{}},
                                       {3, 1, std::vector<int>{2}},
                                       {3, 1, std::vector<int>{4}},
                                       {3, 2, std::vector<int>{6, 0}}}};
  CHECK(build_chordal(closing).hypergraph == make_cycle(4, 3, 1));
}

TEST_CASE("tree sequences give shellable Cohen-Macaulay clique complexes") {
  std::mt19937_64 rng(23);
  const FieldSpec q = FieldSpec::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + trial % 3;
    const auto built = build_chordal(random_tree_sequence(rng, 2, k, 2 + trial % 4));
    const auto delta = clique_complex(built.hypergraph, 2);
    CHECK(verify_d_shelling(delta, built.blocks, 1).ok);
    CHECK(froberg_cm_check(delta, q).cohen_macaulay);
  }
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 3;
    const int k = 2 + trial % 3;
    const auto built = build_chordal(random_tree_sequence(rng, d, k, 2 + trial % 3));
    const auto stripped = strip_small_facets(clique_complex(built.hypergraph, d), d);
    CHECK(verify_d_shelling(stripped, built.blocks, 1).ok);
    CHECK(froberg_cm_check(stripped, q).cohen_macaulay);
  }
  // For d = 3 the clique complex itself picks up a stray small facet.
  const auto glued = build_chordal({3, {{4, 0, std::vector<int>{}}, {4, 3, std::vector<int>{1, 2, 3}}}});
  const auto raw = clique_complex(glued.hypergraph, 3);
  CHECK(raw.contains(mask_of({0, 4})));
  CHECK_FALSE(raw.is_pure());
}

TEST_CASE("stripping small facets recovers the clique complex of the chordal graph") {
  std::mt19937_64 rng(29);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto seq = random_sequence(rng, 3, 5, 3, 5, 8);
    const auto graph = graph_sequence(seq);
    if (!graph) continue;
    const auto h = build_chordal(seq).hypergraph;
    const auto g = build_chordal(*graph).hypergraph;
    CHECK(strip_small_facets(clique_complex(h, 3), 3) == clique_complex(g, 2));
    CHECK(pad_facets(strip_small_facets(clique_complex(h, 3), 3), 3) == clique_complex(h, 3));
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("connected chordal graphs are enumerated once per isomorphism class") {
  // Independent count: labeled graphs grouped by brute-force canonical form.
  auto brute_code = [](int n, const Hypergraph& g) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      int k = 0;
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, ++k)
          if (g.has_edge(bit(perm[p]) | bit(perm[q]))) code |= std::uint64_t{1} << k;
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  const auto seqs = connected_chordal_graph_sequences(6);
  std::vector<std::size_t> per_size(7, 0);
  for (const auto& s : seqs) {
    const auto g = build_chordal(s).hypergraph;
    CHECK(chordal_graph_recognize(g).chordal);
    CHECK(complement_diameter(g).value_or(0) <= 3);
    ++per_size[g.n_vertices()];
  }
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> classes;
    const unsigned pairs = n * (n - 1) / 2;
    for (unsigned code = 0; code < (1u << pairs); ++code) {
      const auto g = graph_from_bits(n, code);
      if (!chordal_brute(g)) continue;
      Mask seen = 1, frontier = 1;
      while (frontier) {
        Mask next = 0;
        for (Mask e : g.edges())
          if (e & frontier) next |= e;
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen == full_mask(n)) classes.insert(brute_code(n, g));
    }
    INFO("n=" << n);
    CHECK(per_size[n] == classes.size());
    // the canonical code separates exactly the brute-force classes
    std::map<std::uint64_t, std::uint64_t> brute_of;
    std::set<std::uint64_t> brute_classes;
    for (unsigned code = 0; code < (1u << pairs); ++code) {
      const auto g = graph_from_bits(n, code);
      const auto b = brute_code(n, g);
      const auto [it, fresh] = brute_of.emplace(canonical_graph_code(g), b);
      REQUIRE(it->second == b);
      brute_classes.insert(b);
    }
    CHECK(brute_of.size() == brute_classes.size());
  }
}
