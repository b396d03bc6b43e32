#include <random>

#include "doctest.h"
#include "hgalg/complex.hpp"
#include "hgalg/errors.hpp"
#include "oracle.hpp"

using namespace hgalg;

namespace {

// Facets of the family accepted by is_face, by brute force.
std::vector<Mask> brute_facets(int n, const std::function<bool(Mask)>& is_face) {
  std::vector<Mask> faces;
  for_each_subset(full_mask(n), [&](Mask s) {
    if (is_face(s)) faces.push_back(s);
  });
  return maximal_sets(faces);
}

bool no_dominated_pair(const SimplicialComplex& c) {
  const auto& f = c.facets();
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b)
      if (a != b && is_subset(f[a], f[b])) return false;
  return true;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> count(1, 5);
  return SimplicialComplex::from_facets(n, oracle::random_family(rng, n, count(rng), 0, n));
}

}  // namespace

TEST_CASE("void and empty complexes are distinct") {
  const auto v = SimplicialComplex::void_complex(3);
  const auto e = SimplicialComplex::empty_complex(3);
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(v.dim() == SimplicialComplex::kVoidDimension);
  CHECK(e.dim() == -1);
  CHECK_FALSE(v.contains(0));
  CHECK(e.contains(0));
  CHECK_FALSE(v == e);
}

TEST_CASE("independence complex") {
  const auto tri = independence_complex(make_cycle(3, 2, 1));
  CHECK(tri.facets() == std::vector<Mask>{bit(0), bit(1), bit(2)});
  CHECK(independence_complex(Hypergraph(4, {})).facets() == std::vector<Mask>{full_mask(4)});
  const auto l2 = make_line(2, 3, 1);
  const auto c = independence_complex(l2);
  CHECK(c.facets() == brute_facets(5, oracle::independence_faces(l2.vertex_set(), l2.edges())));
  CHECK(c.minimal_nonfaces() == minimal_sets(l2.edges()));
}

TEST_CASE("clique complex") {
  CHECK(clique_complex(make_complete(5, 3), 3).facets() == std::vector<Mask>{full_mask(5)});
  const Hypergraph h(4, {mask_of({0, 1, 2}), mask_of({1, 2, 3})});
  // Sets smaller than d are always faces, so {0,3} is a facet as well.
  const auto c = clique_complex(h, 3);
  CHECK(c.facets().size() == 3);
  CHECK(c.contains(mask_of({0, 1, 2})));
  CHECK(c.contains(mask_of({1, 2, 3})));
  CHECK(c.contains(mask_of({0, 3})));
  CHECK(c.dim() == 2);
  const auto c4 = clique_complex(make_cycle(4, 2, 1), 2);
  CHECK(c4.facets().size() == 4);
  CHECK(c4.dim() == 1);
  CHECK_THROWS_AS(clique_complex(make_line(2, 3, 1), 2), InvalidArgument);
}

TEST_CASE("clique complex matches brute force on random 3-uniform hypergraphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 4;
    std::vector<Mask> triples;
    for_each_k_subset(n, 3, [&](Mask s) {
      if (rng() % 2) triples.push_back(s);
    });
    const Hypergraph h(n, triples);
    const auto c = clique_complex(h, 3);
    CHECK(c.facets() == brute_facets(n, oracle::clique_faces(h.vertex_set(), h.edges(), 3)));
    CHECK(no_dominated_pair(c));
    // Restriction commutes with taking induced hypergraphs.
    const Mask v = rng() & h.vertex_set();
    CHECK(restrict(c, v) == clique_complex(induced(h, v), 3));
  }
}

TEST_CASE("restrict and link") {
  const auto c = clique_complex(make_line(2, 3, 1), 3);
  CHECK(restrict(c, full_mask(5)) == c);
  CHECK(restrict(c, 0) == SimplicialComplex::empty_complex(5));
  CHECK(restrict(c, mask_of({0, 1, 2})).facets() == std::vector<Mask>{mask_of({0, 1, 2})});

  CHECK(link(c, 0) == c);
  CHECK(link(c, mask_of({0, 1, 2})) == SimplicialComplex::empty_complex(5));
  const auto square = clique_complex(make_cycle(4, 2, 1), 2);
  CHECK(link(square, bit(0)).facets() == std::vector<Mask>{bit(1), bit(3)});
  CHECK_THROWS_AS(link(square, mask_of({0, 2})), InvalidArgument);
}

TEST_CASE("Alexander dual") {
  CHECK(alexander_dual(SimplicialComplex::void_complex(3)) == SimplicialComplex::simplex(3, full_mask(3)));
  CHECK(alexander_dual(SimplicialComplex::simplex(3, full_mask(3))).is_void());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const auto c = random_complex(rng, n);
    const auto dual = alexander_dual(c);
    CHECK(alexander_dual(dual) == c);
    // F ∈ Δ* iff [n]∖F ∉ Δ.
    for_each_subset(full_mask(n), [&](Mask f) { CHECK(dual.contains(f) == !c.contains(full_mask(n) & ~f)); });
  }
}

TEST_CASE("minimal nonfaces agree with brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 7;
    const auto c = random_complex(rng, n);
    std::vector<Mask> nonfaces;
    for_each_subset(full_mask(n), [&](Mask s) {
      if (!c.contains(s)) nonfaces.push_back(s);
    });
    CHECK(c.minimal_nonfaces() == minimal_sets(nonfaces));
    CHECK(SimplicialComplex::from_minimal_nonfaces(n, c.minimal_nonfaces()) == c);
  }
}

TEST_CASE("R_d and A_d") {
  const auto simplex = SimplicialComplex::simplex(4, full_mask(4));
  CHECK(strip_small_facets(simplex, 3) == simplex);
  const auto mixed = SimplicialComplex::from_facets(5, {mask_of({0, 1, 2}), mask_of({2, 3}), bit(4)});
  CHECK(strip_small_facets(mixed, 2) == mixed);
  CHECK(strip_small_facets(mixed, 3).facets() ==
        std::vector<Mask>{mask_of({0, 1, 2}), bit(3), bit(4)});
  CHECK(pad_facets(mixed, 2) == mixed);
  // A_3 adds the missing edges among the vertices.
  CHECK(pad_facets(strip_small_facets(mixed, 3), 3).facets().size() == 1 + 7);
  for (int n = 3; n <= 6; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const auto h = make_line(n, d, 1);
      const auto delta = clique_complex(h, d);
      if (h.vertex_count() >= d - 1) CHECK(pad_facets(strip_small_facets(delta, d), d) == delta);
    }
  }
}

TEST_CASE("leaf orders") {
  CHECK(quasi_forest_leaf_order(SimplicialComplex::simplex(3, full_mask(3))).has_value());
  const auto triangle_boundary =
      SimplicialComplex::from_facets(3, {mask_of({0, 1}), mask_of({1, 2}), mask_of({0, 2})});
  CHECK_FALSE(quasi_forest_leaf_order(triangle_boundary).has_value());
  // Path: a chordal graph.
  const auto path = clique_complex(make_line(4, 2, 1), 2);
  const auto order = quasi_forest_leaf_order(path);
  REQUIRE(order.has_value());
  CHECK(order->size() == 4);
  for (std::size_t i = 1; i < order->size(); ++i) {
    const std::vector<Mask> prefix(order->begin(), order->begin() + static_cast<long>(i) + 1);
    CHECK(is_leaf((*order)[i], prefix));
  }
  CHECK_FALSE(quasi_forest_leaf_order(clique_complex(make_cycle(5, 2, 1), 2)).has_value());
}
