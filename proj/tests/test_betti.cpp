#include <random>

#include "doctest.h"
#include "hgalg/betti.hpp"
#include "hgalg/errors.hpp"
#include "oracle.hpp"

using namespace hgalg;

namespace {

const FieldSpec kFields[] = {FieldSpec::gf2(), FieldSpec::gf3(), FieldSpec::rationals()};

oracle::Table as_table(const BettiTable& t) {
  oracle::Table out;
  for (const auto& [k, v] : t.entries()) out[k] = v;
  return out;
}

BettiTable edge_ideal_betti(const Hypergraph& h, const FieldSpec& f) {
  HochsterOptions opt;
  opt.max_vertices = 24;
  return hochster_betti(independence_complex(h), f, opt);
}

}  // namespace

TEST_CASE("table conventions") {
  BettiTable t(4);
  t.set(0, 0, 1);
  t.set(1, 2, 3);
  t.set(2, 3, 2);
  const auto ideal = t.to_convention(BettiConvention::ideal);
  CHECK(ideal.get(0, 2) == 3);
  CHECK(ideal.get(1, 3) == 2);
  CHECK(ideal.get(0, 0) == 0);
  CHECK(ideal.to_convention(BettiConvention::quotient) == t);
  const BettiTable zero_ring(2);
  CHECK(zero_ring.to_convention(BettiConvention::ideal).get(0, 0) == 1);
  CHECK(zero_ring.to_convention(BettiConvention::ideal).to_convention(BettiConvention::quotient) == zero_ring);
  CHECK(t.total(1) == 3);
  CHECK(t.max_degree() == 2);
  CHECK(t.to_csv() == "i,j,beta\n0,0,1\n1,2,3\n2,3,2\n");
}

TEST_CASE("Hochster examples") {
  for (const auto& f : kFields) {
    const Hypergraph h1(4, {mask_of({0, 1, 2}), mask_of({1, 2, 3})});
    CHECK(hochster_betti(clique_complex(h1, 3), f).total(2) == 1);
    const Hypergraph h2(5, {mask_of({0, 1, 2}), mask_of({2, 3, 4})});
    CHECK(hochster_betti(clique_complex(h2, 3), f).total(3) == 4);
    const auto poly = hochster_betti(independence_complex(Hypergraph(3, {})), f);
    CHECK(poly.entries().size() == 1);
    CHECK(poly.get(0, 0) == 1);
  }
  CHECK_THROWS_AS(hochster_betti(SimplicialComplex::void_complex(2), FieldSpec::gf2()), InvalidArgument);
  CHECK_THROWS_AS(hochster_betti(SimplicialComplex::simplex(21, 0), FieldSpec::gf2()), SizeLimitExceeded);
}

TEST_CASE("Hochster agrees with the unpruned oracle on random complexes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    const auto c = SimplicialComplex::from_facets(n, oracle::random_family(rng, n, 1 + static_cast<int>(rng() % 5), 0, n));
    for (const auto& f : kFields) {
      const auto t = hochster_betti(c, f);
      CHECK(as_table(t) == oracle::hochster(n, oracle::facet_faces(c.facets()), f.characteristic()));
    }
  }
}

TEST_CASE("thread count does not change the table") {
  const auto c = independence_complex(make_cycle(6, 3, 1));
  HochsterOptions one, many;
  one.threads = 1;
  many.threads = 4;
  CHECK(hochster_betti(c, FieldSpec::gf2(), one) == hochster_betti(c, FieldSpec::gf2(), many));
}

TEST_CASE("Taylor counting") {
  const auto l2 = taylor_betti_free_vertex(make_line(2, 3, 1));
  CHECK(l2.get(1, 3) == 2);
  CHECK(l2.get(2, 5) == 1);
  CHECK(l2 == edge_ideal_betti(make_line(2, 3, 1), FieldSpec::gf2()));
  CHECK_THROWS_AS(taylor_betti_free_vertex(make_line(3, 2, 1)), PreconditionFailed);
  const auto star = taylor_betti_free_vertex(make_star_overlap(5, 3, 1));
  for (int i = 1; i <= 5; ++i) CHECK(star.get(i, 3 * i - (i - 1)) == binomial(5, i));
  for (int n = 1; n <= 5; ++n) {
    const auto t = taylor_betti_free_vertex(make_line(n, 5, 2));
    for (int i = 0; i <= n; ++i) CHECK(t.total(i) == binomial(n, i));
  }
}

TEST_CASE("closed-form examples") {
  CHECK(line_betti_closed_form(3, 3, 1).get(1, 3) == 3);
  const auto top = line_betti_closed_form(4, 5, 2);
  CHECK(top.degrees_in_row(4) == std::vector<int>{4 * 3 + 2});
  CHECK(line_betti_closed_form(2, 3, 1) == taylor_betti_free_vertex(make_line(2, 3, 1)));
  CHECK_THROWS_AS(line_betti_closed_form(3, 2, 1), InvalidArgument);

  const auto deg = line_betti_degenerate(2, 1);
  CHECK(deg.get(1, 2) == 2);
  CHECK(deg.get(2, 3) == 1);
  CHECK(line_betti_degenerate(1, 1).entries().size() == 2);
  for (int n = 1; n <= 6; ++n) {
    const auto base = line_betti_degenerate(n, 1);
    const auto scaled = line_betti_degenerate(n, 3);
    REQUIRE(base.entries().size() == scaled.entries().size());
    for (const auto& [k, v] : base.entries()) CHECK(scaled.get(k.first, 3 * k.second) == v);
  }

  CHECK(cycle_betti_closed_form(3, 3, 1).get(1, 3) == 3);
  CHECK(cycle_betti_closed_form(5, 4, 1).degrees_in_row(5) == std::vector<int>{15});
  CHECK(cycle_betti_degenerate(3, 1).get(2, 3) == 2);
  CHECK(cycle_betti_degenerate(4, 1).get(3, 4) == 1);
  CHECK(cycle_betti_degenerate(5, 1).get(2, 3) == 5);

  CHECK(knd_complement_betti(4, 2).get(1, 2) == 6);
  CHECK(knd_complement_betti(5, 3).get(2, 4) == 15);
}

TEST_CASE("line formula row sums are binomial") {
  for (int d = 3; d <= 6; ++d)
    for (int alpha = 1; 2 * alpha < d; ++alpha)
      for (int n = 1; n <= 8; ++n) {
        const auto t = line_betti_closed_form(n, d, alpha);
        for (int i = 0; i <= n; ++i) CHECK(t.total(i) == binomial(n, i));
      }
}

TEST_CASE("closed forms agree with Hochster on small families") {
  for (const auto& f : kFields) {
    CHECK(line_betti_closed_form(3, 3, 1) == edge_ideal_betti(make_line(3, 3, 1), f));
    CHECK(line_betti_degenerate(4, 1) == edge_ideal_betti(make_line(4, 2, 1), f));
    CHECK(cycle_betti_closed_form(4, 3, 1) == edge_ideal_betti(make_cycle(4, 3, 1), f));
    CHECK(cycle_betti_degenerate(5, 1) == edge_ideal_betti(make_cycle(5, 2, 1), f));
    CHECK(cycle_betti_degenerate(6, 2) == edge_ideal_betti(make_cycle(6, 4, 2), f));
    CHECK(star_betti_closed_form(4, 3, 1) == edge_ideal_betti(make_star_overlap(4, 3, 1), f));
    CHECK(knd_complement_betti(5, 3) == hochster_betti(clique_complex(complement(make_complete(5, 3), 3), 3), f));
  }
}

TEST_CASE("counting lemmas") {
  for (int n = 1; n <= 8; ++n)
    for (int s = 1; s <= n; ++s) CHECK(count_line_subconfigs({s}, n) == n - s + 1);
  for (int n = 3; n <= 8; ++n)
    for (int s = 1; s <= n - 2; ++s) CHECK(count_cycle_subconfigs({s}, n) == n);
  CHECK(count_line_subconfigs({1, 1}, 4) == 3);
  CHECK(count_line_subconfigs_brute({1, 1}, 4) == 3);
  CHECK(count_cycle_subconfigs({1, 1}, 4) == 2);
  CHECK(count_cycle_subconfigs_brute({1, 1}, 4) == 2);
  CHECK(count_cycle_subconfigs_brute({4}, 4) == 0);
  CHECK_THROWS_AS(count_line_subconfigs({3, 3}, 5), InvalidArgument);
}

TEST_CASE("connectivity") {
  const auto f = FieldSpec::gf2();
  CHECK(connectivity(Hypergraph(4, {mask_of({0, 1}), mask_of({2, 3})}), f) == 0);
  CHECK_FALSE(connectivity(make_complete(4, 2), f).has_value());
  CHECK(connectivity(complement(make_multipartite({2, 2}, 2), 2), f) == 0);
  CHECK(connectivity(complement(make_multipartite({3, 2}, 3), 3), f) == 0);
  CHECK(connectivity(make_multipartite({2, 2}, 2), f) == 2);
  CHECK(connectivity(make_cycle(5, 2, 1), f) == 2);
  CHECK(connectivity(make_line(3, 2, 1), f) == 1);
}

TEST_CASE("resolution stats") {
  const auto poly = hochster_betti(independence_complex(Hypergraph(3, {})), FieldSpec::gf2());
  const auto s = resolution_stats(poly, 2);
  CHECK(s.pd == 0);
  CHECK(s.depth == 3);
  CHECK(resolution_stats(knd_complement_betti(6, 3), 3).has_linear_resolution);
  const Hypergraph ex(5, {mask_of({0, 1, 2}), mask_of({2, 3, 4})});
  CHECK(resolution_stats(hochster_betti(clique_complex(ex, 3), FieldSpec::gf2()), 3).pd == 3);
  CHECK_THROWS_AS(resolution_stats(BettiTable(3), 2), InvalidArgument);
}

TEST_CASE("connectivity and depth") {
  const auto f = FieldSpec::gf3();
  const auto disc = check_conn_depth_theorem(Hypergraph(5, {mask_of({0, 1}), mask_of({1, 2}), mask_of({3, 4})}), f);
  CHECK(disc.connectivity == 0);
  CHECK(disc.stats.pd == 4);
  CHECK(disc.stats.depth == 1);
  CHECK(disc.formula_holds == true);
  CHECK(disc.homconn_equivalence_holds);
  const auto ex = check_conn_depth_theorem(Hypergraph(5, {mask_of({0, 1, 2}), mask_of({2, 3, 4})}), f);
  CHECK(ex.formula_holds == true);
  CHECK(ex.not_homologically_connected);
  CHECK(ex.homconn_conditions);
}

TEST_CASE("Froberg test matches the projective dimension") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 6;
    const auto c = SimplicialComplex::from_facets(n, oracle::random_family(rng, n, 1 + static_cast<int>(rng() % 4), 1, n));
    if (c.vertex_set() != full_mask(n)) continue;
    const auto t = hochster_betti(c, FieldSpec::gf2());
    const bool cm = resolution_stats(t, 2).pd == n - (c.dim() + 1);
    const auto rep = froberg_cm_check(c, FieldSpec::gf2());
    CHECK(rep.cohen_macaulay == cm);
    CHECK(rep.violation.has_value() == !cm);
  }
  // dim Δ(H) = d-2 gives a Cohen-Macaulay ring.
  CHECK(froberg_cm_check(clique_complex(Hypergraph(6, {}), 3), FieldSpec::gf2()).cohen_macaulay);
}
