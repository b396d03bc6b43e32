#include "hgalg/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hgalg/chordal.hpp"
#include "hgalg/complex.hpp"
#include "hgalg/errors.hpp"

namespace hgalg {

// ---------------------------------------------------------------- grid

Grid Grid::parse(const std::string& text) {
  Grid g;
  g.text_ = text;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw InvalidArgument("");
      return v;
    } catch (const std::exception&) {
      throw InvalidArgument("grid: bad integer '" + s + "' in '" + text + "'");
    }
  };
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (!g.preset_.empty()) throw InvalidArgument("grid: more than one preset in '" + text + "'");
      g.preset_ = item;
      continue;
    }
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key.empty() || value.empty()) throw InvalidArgument("grid: malformed item '" + item + "'");
    std::vector<int> vals;
    if (const auto dots = value.find(".."); dots != std::string::npos) {
      const int lo = to_int(value.substr(0, dots)), hi = to_int(value.substr(dots + 2));
      if (lo > hi) throw InvalidArgument("grid: empty range '" + value + "'");
      for (int v = lo; v <= hi; ++v) vals.push_back(v);
    } else {
      std::stringstream vs(value);
      std::string part;
      while (std::getline(vs, part, '/')) vals.push_back(to_int(part));
    }
    if (g.values_.count(key)) throw InvalidArgument("grid: key '" + key + "' given twice");
    g.values_[key] = std::move(vals);
  }
  return g;
}

std::vector<int> Grid::values(const std::string& key, std::vector<int> fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

int Grid::value(const std::string& key, int fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  if (it->second.size() != 1) throw InvalidArgument("grid: key '" + key + "' takes a single value");
  return it->second.front();
}

void Grid::restrict_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [key, vals] : values_) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      throw InvalidArgument("grid: unknown key '" + key + "' (allowed: " + list + ")");
    }
  }
}

// ---------------------------------------------------------------- report

std::string to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::match: return "match";
    case InstanceStatus::mismatch: return "mismatch";
    case InstanceStatus::skipped: return "skipped";
  }
  return "unknown";
}

std::size_t VerificationReport::count(InstanceStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [s](const InstanceResult& r) { return r.status == s; }));
}

Json VerificationReport::to_json(bool include_matches) const {
  Json list = Json::array();
  for (const auto& r : instances) {
    if (r.status == InstanceStatus::match && !include_matches) continue;
    Json item{{"params", r.params}, {"status", hgalg::to_string(r.status)}};
    if (!r.details.is_null()) item["details"] = r.details;
    list.push_back(std::move(item));
  }
  return Json{{"theorem", theorem},
              {"grid", grid},
              {"field", field},
              {"counts",
               {{"match", count(InstanceStatus::match)},
                {"mismatch", count(InstanceStatus::mismatch)},
                {"skipped", count(InstanceStatus::skipped)}}},
              {"ok", ok()},
              {"instances", list}};
}

namespace {

// ---------------------------------------------------------------- helpers

struct Context {
  const Grid& grid;
  const VerifyOptions& options;
  VerificationReport& report;

  void match(Json params) { report.instances.push_back({std::move(params), InstanceStatus::match, nullptr}); }
  void mismatch(Json params, Json details) {
    report.instances.push_back({std::move(params), InstanceStatus::mismatch, std::move(details)});
  }
  void skip(Json params, const std::string& reason) {
    report.instances.push_back({std::move(params), InstanceStatus::skipped, Json{{"reason", reason}}});
  }
  void expect(bool ok, Json params, Json details) {
    if (ok) {
      match(std::move(params));
    } else {
      mismatch(std::move(params), std::move(details));
    }
  }
  void compare(Json params, const BettiTable& expected, const BettiTable& actual, Json input) {
    expect(expected == actual, std::move(params),
           Json{{"expected", to_json(expected)}, {"actual", to_json(actual)}, {"input", std::move(input)}});
  }
  // Runs f, turning budget overruns into skipped instances.
  template <class F>
  void guarded(const Json& params, F&& f) {
    try {
      f();
    } catch (const SizeLimitExceeded& e) {
      skip(params, e.what());
    }
  }
};

BettiTable edge_ideal_table(const Hypergraph& h, const Context& ctx) {
  return hochster_betti(independence_complex(h), ctx.options.field, ctx.options.hochster);
}

bool too_large(const Hypergraph& h, const Context& ctx) { return h.n_vertices() > ctx.options.hochster.max_vertices; }

const std::vector<std::string> kFamilyKeys{"n", "d", "alpha"};

// Calls f(n, d, alpha) over the family parameters of the grid.
void for_family_params(const Grid& grid, const std::function<void(int, int, int)>& f) {
  for (int n : grid.values("n", {1, 2, 3, 4, 5}))
    for (int d : grid.values("d", {2, 3, 4}))
      for (int alpha : grid.values("alpha", {1, 2}))
        if (n >= 1 && d >= 2 && alpha >= 1 && alpha < d) f(n, d, alpha);
}

Json family_params(const char* family, int n, int d, int alpha) {
  return Json{{"family", family}, {"n", n}, {"d", d}, {"alpha", alpha}};
}

// Closed form against Hochster on one family member.
void closed_form_instance(Context& ctx, const char* family, int n, int d, int alpha, const Hypergraph& h,
                          const std::function<BettiTable()>& closed) {
  const Json params = family_params(family, n, d, alpha);
  if (too_large(h, ctx)) {
    ctx.skip(params, "vertex count above the Hochster bound");
    return;
  }
  ctx.guarded(params, [&] { ctx.compare(params, closed(), edge_ideal_table(h, ctx), to_json(h)); });
}

// Free-vertex families used for the Taylor-resolution statements.
void for_free_vertex_families(const Grid& grid,
                              const std::function<void(const char*, int, int, int, const Hypergraph&)>& f) {
  for_family_params(grid, [&](int n, int d, int alpha) {
    if (d > 2 * alpha) f("line", n, d, alpha, make_line(n, d, alpha));
    if (d > 2 * alpha && n >= 3) f("cycle", n, d, alpha, make_cycle(n, d, alpha));
    f("star", n, d, alpha, make_star_overlap(n, d, alpha));
  });
}

// Random hypergraphs in which every edge owns a private vertex.
std::vector<Hypergraph> random_free_vertex_hypergraphs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  while (static_cast<int>(out.size()) < count) {
    const int edges = 1 + static_cast<int>(rng() % 4);
    const int shared = 1 + static_cast<int>(rng() % 4);
    int n = shared;
    std::vector<Mask> es;
    for (int e = 0; e < edges; ++e) {
      Mask m = bit(n++);
      for (int v = 0; v < shared; ++v)
        if (rng() % 2) m |= bit(v);
      if (popcount(m) < 2) m |= bit(static_cast<int>(rng() % shared));
      es.push_back(m);
    }
    out.emplace_back(n, es);
  }
  return out;
}

// Multisets of positive integers summing to i, parts nondecreasing.
std::vector<std::vector<int>> partitions(int i) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int min_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(i, 1);
  return out;
}

// Random attachment sequence with block sizes in [min_i, max_i] and random
// glue among the j-cliques of what has been built.
AttachmentSequence random_sequence(std::mt19937_64& rng, int d, int min_i, int max_i, int max_vertices) {
  std::uniform_int_distribution<int> isz(min_i, max_i);
  AttachmentSequence seq{d, {{std::min(isz(rng), max_vertices), 0, std::vector<int>{}}}};
  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto built = build_chordal(seq);
    const int n = built.hypergraph.n_vertices();
    const int i = isz(rng);
    const int j = std::uniform_int_distribution<int>(0, std::min(i - 1, n))(rng);
    if (n + i - j > max_vertices) continue;
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

// Named families with at most max_vertices vertices and at least one edge.
std::vector<std::pair<FamilySpec, Hypergraph>> family_grid(int max_vertices) {
  std::vector<FamilySpec> specs;
  for (int d = 2; d <= 4; ++d) {
    for (int n = d; n <= max_vertices; ++n) specs.push_back({FamilyKind::complete, n, d, 1, {}});
    for (int alpha = 1; 2 * alpha <= d; ++alpha)
      for (int n = 1; n * (d - alpha) + alpha <= max_vertices; ++n) specs.push_back({FamilyKind::line, n, d, alpha, {}});
    for (int alpha = 1; 2 * alpha <= d; ++alpha)
      for (int n = 3; n * (d - alpha) <= max_vertices; ++n) specs.push_back({FamilyKind::cycle, n, d, alpha, {}});
    for (int alpha = 1; alpha < d; ++alpha)
      for (int n = 2; alpha + n * (d - alpha) <= max_vertices; ++n)
        specs.push_back({FamilyKind::star_overlap, n, d, alpha, {}});
    for (const auto& parts : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 1, 1}, {2, 1, 1},
                                                            {2, 2, 1}, {2, 2, 2}, {3, 3}, {4, 2}, {3, 2, 1}}) {
      int total = 0;
      for (int p : parts) total += p;
      if (total <= max_vertices && total >= d) specs.push_back({FamilyKind::multipartite, 0, d, 1, parts});
    }
  }
  std::vector<std::pair<FamilySpec, Hypergraph>> out;
  for (const auto& s : specs) {
    Hypergraph h = make_family(s);
    if (h.edge_count() > 0) out.emplace_back(s, std::move(h));
  }
  return out;
}

std::vector<Hypergraph> random_uniform_hypergraphs(int count, int d, int max_vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(d, max_vertices)(rng);
    std::vector<Mask> edges;
    const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
    for_each_k_subset(n, d, [&](Mask e) {
      if (std::bernoulli_distribution(p)(rng)) edges.push_back(e);
    });
    if (edges.empty()) continue;
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

// Instances of the connectivity theorems: the family grid and random
// d-uniform hypergraphs.
void for_connectivity_instances(const Grid& grid, const std::function<void(Json, const Hypergraph&)>& f) {
  const int vertices = grid.value("vertices", 7);
  for (const auto& [spec, h] : family_grid(vertices)) f(Json{{"family", to_json(spec)}}, h);
  const int count = grid.value("random", 20);
  const int d = grid.value("random-d", 3);
  const int seed = grid.value("seed", 1);
  const auto rs = random_uniform_hypergraphs(count, d, vertices, static_cast<std::uint64_t>(seed));
  for (std::size_t k = 0; k < rs.size(); ++k) f(Json{{"random", k}, {"seed", seed}}, rs[k]);
}

const std::vector<std::string> kConnectivityKeys{"vertices", "random", "random-d", "seed"};

// Equigenerated squarefree ideals: every set of `t` distinct `degree`-subsets
// of [n].
void for_small_world(const Grid& grid, const std::vector<int>& default_n,
                     const std::function<void(Json, const MonomialIdeal&, int)>& f) {
  const bool preset = grid.preset() == "small-world";
  const auto ns = grid.values("n", preset ? std::vector<int>{1, 2, 3, 4, 5, 6} : default_n);
  const auto ts = grid.values("generators", {1, 2, 3, 4, 5});
  const auto degrees = grid.values("degree", {2, 3});
  for (int n : ns)
    for (int degree : degrees) {
      if (degree > n || degree < 1) continue;
      std::vector<Mask> pool;
      for_each_k_subset(n, degree, [&](Mask s) { pool.push_back(s); });
      sort_lex(pool);
      const int p = static_cast<int>(pool.size());
      for (int t : ts) {
        if (t < 1 || t > p) continue;
        for_each_k_subset(p, t, [&](Mask pick) {
          std::vector<Mask> gens;
          for_each_vertex(pick, [&](int k) { gens.push_back(pool[k]); });
          const MonomialIdeal ideal(n, gens);
          f(Json{{"n", n}, {"degree", degree}, {"generators", to_json(ideal)["generators"]}}, ideal, degree);
        });
      }
    }
}

const std::vector<std::string> kSmallWorldKeys{"n", "generators", "degree"};

// ---------------------------------------------------------------- theorems

void check_betti_totals(Context& ctx) {
  ctx.grid.restrict_keys({"n", "d", "alpha", "random", "seed"});
  auto one = [&](Json params, const Hypergraph& h) {
    if (too_large(h, ctx)) {
      ctx.skip(params, "vertex count above the Hochster bound");
      return;
    }
    ctx.guarded(params, [&] {
      const auto t = edge_ideal_table(h, ctx);
      const auto m = static_cast<std::int64_t>(h.edge_count());
      Json expected = Json::array(), actual = Json::array();
      bool ok = true;
      for (int i = 0; i <= m + 1; ++i) {
        expected.push_back(binomial(m, i));
        actual.push_back(t.total(i));
        ok = ok && binomial(m, i) == t.total(i);
      }
      ctx.expect(ok, params, Json{{"expected", expected}, {"actual", actual}, {"input", to_json(h)}});
    });
  };
  for_free_vertex_families(ctx.grid, [&](const char* fam, int n, int d, int alpha, const Hypergraph& h) {
    one(family_params(fam, n, d, alpha), h);
  });
  const int seed = ctx.grid.value("seed", 1);
  const auto rs = random_free_vertex_hypergraphs(ctx.grid.value("random", 10), static_cast<std::uint64_t>(seed));
  for (std::size_t k = 0; k < rs.size(); ++k) one(Json{{"random", k}, {"seed", seed}}, rs[k]);
}

void check_taylor_graded(Context& ctx) {
  ctx.grid.restrict_keys({"n", "d", "alpha", "random", "seed"});
  auto one = [&](Json params, const Hypergraph& h) {
    if (too_large(h, ctx)) {
      ctx.skip(params, "vertex count above the Hochster bound");
      return;
    }
    ctx.guarded(params, [&] { ctx.compare(params, taylor_betti_free_vertex(h), edge_ideal_table(h, ctx), to_json(h)); });
  };
  for_free_vertex_families(ctx.grid, [&](const char* fam, int n, int d, int alpha, const Hypergraph& h) {
    one(family_params(fam, n, d, alpha), h);
  });
  const int seed = ctx.grid.value("seed", 1);
  const auto rs = random_free_vertex_hypergraphs(ctx.grid.value("random", 10), static_cast<std::uint64_t>(seed));
  for (std::size_t k = 0; k < rs.size(); ++k) one(Json{{"random", k}, {"seed", seed}}, rs[k]);
}

// The top row of the table has a single entry 1 at `degree`.
void check_top_row(Context& ctx, const char* family, int n, int d, int alpha, const Hypergraph& h, int degree) {
  const Json params = family_params(family, n, d, alpha);
  if (too_large(h, ctx)) {
    ctx.skip(params, "vertex count above the Hochster bound");
    return;
  }
  ctx.guarded(params, [&] {
    const auto t = edge_ideal_table(h, ctx);
    Json row = Json::object();
    for (int j : t.degrees_in_row(n)) row[std::to_string(j)] = t.get(n, j);
    const bool ok = t.degrees_in_row(n) == std::vector<int>{degree} && t.get(n, degree) == 1;
    ctx.expect(ok, params, Json{{"expected", {{std::to_string(degree), 1}}}, {"actual", row}, {"input", to_json(h)}});
  });
}

void check_line_top(Context& ctx) {
  ctx.grid.restrict_keys(kFamilyKeys);
  for_family_params(ctx.grid, [&](int n, int d, int alpha) {
    if (d > 2 * alpha) check_top_row(ctx, "line", n, d, alpha, make_line(n, d, alpha), n * (d - alpha) + alpha);
  });
}

void check_cycle_top(Context& ctx) {
  ctx.grid.restrict_keys(kFamilyKeys);
  for_family_params(ctx.grid, [&](int n, int d, int alpha) {
    if (d > 2 * alpha && n >= 3) check_top_row(ctx, "cycle", n, d, alpha, make_cycle(n, d, alpha), n * (d - alpha));
  });
}

void check_line_formula(Context& ctx) {
  ctx.grid.restrict_keys(kFamilyKeys);
  for_family_params(ctx.grid, [&](int n, int d, int alpha) {
    if (d > 2 * alpha) {
      closed_form_instance(ctx, "line", n, d, alpha, make_line(n, d, alpha),
                           [&] { return line_betti_closed_form(n, d, alpha); });
    }
  });
}

void check_line_degenerate(Context& ctx) {
  ctx.grid.restrict_keys(kFamilyKeys);
  for_family_params(ctx.grid, [&](int n, int d, int alpha) {
    if (d == 2 * alpha) {
      closed_form_instance(ctx, "line", n, d, alpha, make_line(n, d, alpha),
                           [&] { return line_betti_degenerate(n, alpha); });
    }
  });
}

void check_cycle_formula(Context& ctx) {
  ctx.grid.restrict_keys(kFamilyKeys);
  for_family_params(ctx.grid, [&](int n, int d, int alpha) {
    if (d > 2 * alpha && n >= 3) {
      closed_form_instance(ctx, "cycle", n, d, alpha, make_cycle(n, d, alpha),
                           [&] { return cycle_betti_closed_form(n, d, alpha); });
    }
  });
}

void check_cycle_degenerate(Context& ctx) {
  ctx.grid.restrict_keys(kFamilyKeys);
  for_family_params(ctx.grid, [&](int n, int d, int alpha) {
    if (d == 2 * alpha && n >= 3) {
      closed_form_instance(ctx, "cycle", n, d, alpha, make_cycle(n, d, alpha),
                           [&] { return cycle_betti_degenerate(n, alpha); });
    }
  });
}

void check_star(Context& ctx) {
  ctx.grid.restrict_keys(kFamilyKeys);
  for_family_params(ctx.grid, [&](int n, int d, int alpha) {
    closed_form_instance(ctx, "star", n, d, alpha, make_star_overlap(n, d, alpha),
                         [&] { return star_betti_closed_form(n, d, alpha); });
  });
}

void check_counting(Context& ctx, bool cycle) {
  ctx.grid.restrict_keys({"n", "i"});
  const auto ns = ctx.grid.values("n", cycle ? std::vector<int>{3, 4, 5, 6, 7, 8} : std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  const auto is = ctx.grid.values("i", {1, 2, 3, 4, 5, 6});
  for (int n : ns)
    for (int i : is) {
      if (i > n || i < 1 || (cycle && n < 3)) continue;
      for (const auto& parts : partitions(i)) {
        const Json params{{"n", n}, {"lengths", parts}};
        const auto formula = cycle ? count_cycle_subconfigs(parts, n) : count_line_subconfigs(parts, n);
        const auto brute = cycle ? count_cycle_subconfigs_brute(parts, n) : count_line_subconfigs_brute(parts, n);
        ctx.expect(formula == brute, params, Json{{"expected", brute}, {"actual", formula}});
      }
    }
}

void check_knd(Context& ctx) {
  ctx.grid.restrict_keys({"n", "d"});
  for (int n : ctx.grid.values("n", {2, 3, 4, 5, 6, 7}))
    for (int d : ctx.grid.values("d", {2, 3, 4})) {
      if (d < 2 || d > n) continue;
      const Json params{{"n", n}, {"d", d}};
      const Hypergraph h = make_complete(n, d);
      if (too_large(h, ctx)) {
        ctx.skip(params, "vertex count above the Hochster bound");
        continue;
      }
      ctx.guarded(params, [&] { ctx.compare(params, knd_complement_betti(n, d), edge_ideal_table(h, ctx), to_json(h)); });
    }
}

void check_chordal_quotients(Context& ctx) {
  ctx.grid.restrict_keys({"d", "seed", "vertices"});
  const int vertices = ctx.grid.value("vertices", 8);
  for (int d : ctx.grid.values("d", {2, 3}))
    for (int seed : ctx.grid.values("seed", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10})) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 7919 + d);
      const auto seq = random_sequence(rng, d, 1, d + 2, vertices);
      const Json params{{"d", d}, {"seed", seed}, {"sequence", to_json(seq)}};
      ctx.guarded(params, [&] {
        const auto h = build_chordal(seq).hypergraph;
        const SimplicialComplex delta = clique_complex(h, d);
        const MonomialIdeal ideal(h.n_vertices(), delta.minimal_nonfaces());
        const bool lq = ideal.is_zero() || search_d_quotients(ideal, 1, SearchOptions{256}).has_value();
        ctx.expect(lq, params, Json{{"expected", "linear quotients"}, {"actual", "none found"}, {"input", to_json(h)}});
      });
    }
}

void check_graph_corollary(Context& ctx) {
  ctx.grid.restrict_keys({"n"});
  for (int n : ctx.grid.values("n", {1, 2, 3, 4, 5})) {
    if (n < 1 || n > 7) throw InvalidArgument("graph-corollary: n must lie in 1..7");
    std::vector<Mask> pairs;
    for_each_k_subset(n, 2, [&](Mask p) { pairs.push_back(p); });
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Mask> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (code >> k & 1) edges.push_back(pairs[k]);
      const Hypergraph g(n, edges);
      const auto r = corollary_graph_check(g, SearchOptions{256});
      const Json params{{"n", n}, {"code", code}};
      if (r.agree()) {
        ctx.match(params);
      } else {
        ctx.mismatch(params, Json{{"chordal", r.chordal}, {"linear_quotients", r.linear_quotients}, {"input", to_json(g)}});
      }
    }
  }
}

void check_tree_shellable(Context& ctx) {
  ctx.grid.restrict_keys({"d", "k", "steps", "seed"});
  for (int d : ctx.grid.values("d", {2, 3}))
    for (int k : ctx.grid.values("k", {1, 2, 3}))
      for (int steps : ctx.grid.values("steps", {1, 2, 3, 4}))
        for (int seed : ctx.grid.values("seed", {1, 2, 3})) {
          const Json params{{"d", d}, {"k", k}, {"steps", steps}, {"seed", seed}};
          if (k + 1 < d) {
            ctx.skip(params, "blocks K_{k+1}^d need k + 1 >= d");
            continue;
          }
          std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
          AttachmentSequence seq{d, {{k + 1, 0, std::vector<int>{}}}};
          for (int s = 1; s < steps; ++s) {
            const auto built = build_chordal(seq);
            std::vector<Mask> cliques;
            for (Mask b : built.blocks) for_each_k_subset_of(b, k, [&](Mask g) { cliques.push_back(g); });
            sort_lex(cliques);
            cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
            const Mask glue = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
            seq.steps.push_back({k + 1, k, vertices_of(glue)});
          }
          const auto built = build_chordal(seq);
          // For d >= 3 the clique complex also has facets of size below d
          // (pairs of vertices in different blocks); the blocks are the
          // facets of R_d of it.
          const SimplicialComplex raw = clique_complex(built.hypergraph, d);
          const SimplicialComplex delta = d == 2 ? raw : strip_small_facets(raw, d);
          const bool shelled = verify_d_shelling(delta, built.blocks, 1).ok;
          const bool cm = froberg_cm_check(delta, ctx.options.field).cohen_macaulay;
          Json details{{"shelling", shelled}, {"cohen_macaulay", cm}, {"sequence", to_json(seq)},
                       {"complex", d == 2 ? "clique" : "clique with small facets stripped"}};
          ctx.expect(shelled && cm, params, std::move(details));
        }
}

void check_two_gluing(Context& ctx) {
  ctx.grid.restrict_keys({"d", "vertices"});
  const int vertices = ctx.grid.value("vertices", 9);
  for (int d : ctx.grid.values("d", {2, 3}))
    for (int m = d; m <= vertices; ++m)
      for (int i = 1; i <= vertices; ++i)
        for (int j = 0; j < std::min(i, m); ++j) {
          if (m + i - j > vertices) continue;
          const Json params{{"m", m}, {"i", i}, {"j", j}, {"d", d}};
          ctx.guarded(params, [&] {
            const auto r = two_gluing_check(m, i, j, d, SearchOptions{256});
            ctx.expect(r.agree(), params, Json{{"predicted", r.predicted}, {"empirical", r.empirical}});
          });
        }
}

void check_diameter(Context& ctx) {
  ctx.grid.restrict_keys({"vertices"});
  const int vertices = ctx.grid.value("vertices", 8);
  for (const auto& seq : connected_chordal_graph_sequences(vertices)) {
    const auto g = build_chordal(seq).hypergraph;
    const auto diam = complement_diameter(g);
    const Json params{{"vertices", g.n_vertices()}, {"sequence", to_json(seq)}};
    if (!diam) {
      // complete graphs have an edgeless complement
      ctx.skip(params, "complement disconnected");
      continue;
    }
    ctx.expect(*diam <= 3, params, Json{{"diameter", *diam}, {"input", to_json(g)}});
  }
}

void check_adrd(Context& ctx) {
  ctx.grid.restrict_keys({"d", "seed", "vertices"});
  const int vertices = ctx.grid.value("vertices", 9);
  for (int d : ctx.grid.values("d", {2, 3, 4}))
    for (int seed : ctx.grid.values("seed", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20})) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 104729 + d);
      const auto seq = random_sequence(rng, d, 1, d + 2, vertices);
      const auto h = build_chordal(seq).hypergraph;
      const Json params{{"d", d}, {"seed", seed}, {"sequence", to_json(seq)}};
      if (h.vertex_count() < d - 1) {
        ctx.skip(params, "fewer than d - 1 vertices");
        continue;
      }
      const auto delta = clique_complex(h, d);
      const auto round = pad_facets(strip_small_facets(delta, d), d);
      ctx.expect(round == delta, params, Json{{"expected", to_json(delta)}, {"actual", to_json(round)}, {"input", to_json(h)}});
    }
}

void check_conn_depth(Context& ctx, bool homconn) {
  ctx.grid.restrict_keys(kConnectivityKeys);
  for_connectivity_instances(ctx.grid, [&](Json params, const Hypergraph& h) {
    if (too_large(h, ctx)) {
      ctx.skip(params, "vertex count above the Hochster bound");
      return;
    }
    ctx.guarded(params, [&] {
      const auto rep = check_conn_depth_theorem(h, ctx.options.field, ctx.options.hochster);
      Json details{{"connectivity", rep.connectivity ? Json(*rep.connectivity) : Json("infinite")},
                   {"pd", rep.stats.pd},
                   {"depth", rep.stats.depth},
                   {"r", rep.r ? Json(*rep.r) : Json(nullptr)},
                   {"input", to_json(h)}};
      if (homconn) {
        details["homconn_conditions"] = rep.homconn_conditions;
        ctx.expect(rep.homconn_equivalence_holds, params, std::move(details));
      } else if (!rep.formula_holds) {
        ctx.skip(params, rep.connectivity ? "no nonzero linear-strand entry" : "connectivity infinite");
      } else {
        ctx.expect(*rep.formula_holds, params, std::move(details));
      }
    });
  });
}

void check_cm(Context& ctx) {
  ctx.grid.restrict_keys(kConnectivityKeys);
  for_connectivity_instances(ctx.grid, [&](Json params, const Hypergraph& h) {
    if (too_large(h, ctx)) {
      ctx.skip(params, "vertex count above the Hochster bound");
      return;
    }
    ctx.guarded(params, [&] {
      const int d = *h.uniformity();
      const SimplicialComplex delta = clique_complex(h, d);
      const auto fro = froberg_cm_check(delta, ctx.options.field);
      // Auslander-Buchsbaum: CM exactly when pd = n - Krull dimension.
      const auto stats = resolution_stats(hochster_betti(delta, ctx.options.field, ctx.options.hochster), d);
      const int krull = delta.dim() + 1;
      const bool ab = stats.pd == h.n_vertices() - krull;
      const auto con = connectivity(h, ctx.options.field);
      const bool corollary = !(fro.cohen_macaulay && krull >= d) || !con || *con != 0;
      ctx.expect(fro.cohen_macaulay == ab && corollary, params,
                 Json{{"froberg", fro.cohen_macaulay},
                      {"auslander_buchsbaum", ab},
                      {"krull_dimension", krull},
                      {"connectivity", con ? Json(*con) : Json("infinite")},
                      {"input", to_json(h)}});
    });
  });
}

void check_dquot_dshell(Context& ctx) {
  ctx.grid.restrict_keys({"n", "generators", "degree", "d"});
  const auto ds = ctx.grid.values("d", {1, 2, 3});
  for_small_world(ctx.grid, {1, 2, 3, 4, 5}, [&](Json params, const MonomialIdeal& ideal, int) {
    const auto bridge = duality_bridge(ideal);
    for (int d : ds) {
      Json p = params;
      p["d"] = d;
      ctx.guarded(p, [&] {
        const auto q = search_d_quotients(ideal, d, SearchOptions{256});
        const auto s = search_d_shelling(bridge.complex, d, SearchOptions{256});
        bool ok = q.has_value() == s.has_value();
        // the certificates transport across the bridge
        if (ok && q) ok = verify_d_shelling(bridge.complex, facets_in_order(bridge, *q), d).ok;
        if (ok && s) ok = verify_d_quotients(ideal, ordering_of_facets(bridge, *s), d).ok;
        ctx.expect(ok, p, Json{{"quotients", q.has_value()}, {"shelling", s.has_value()}});
      });
    }
  });
}

// Ideals of the small world along a d-quotients ordering, for the d values
// of the grid.
void for_quotient_orderings(Context& ctx, const std::vector<int>& default_d,
                            const std::function<void(Json, const MonomialIdeal&, int, int, const std::vector<int>&)>& f) {
  const auto ds = ctx.grid.values("d", default_d);
  for_small_world(ctx.grid, {1, 2, 3, 4}, [&](Json params, const MonomialIdeal& ideal, int degree) {
    for (int d : ds) {
      if (ideal.size() == 1 && d != ds.front()) continue;
      const auto q = search_d_quotients(ideal, d, SearchOptions{256});
      if (!q) continue;
      Json p = params;
      p["d"] = d;
      p["ordering"] = *q;
      f(std::move(p), ideal, degree, d, *q);
    }
  });
}

void check_splitting(Context& ctx) {
  ctx.grid.restrict_keys({"n", "generators", "degree", "d"});
  for_quotient_orderings(ctx, {1, 2, 3}, [&](Json params, const MonomialIdeal& ideal, int degree, int, const std::vector<int>& q) {
    ctx.guarded(params, [&] {
      const auto rep = betti_splitting_check(ideal, q, degree, ctx.options.field, ctx.options.hochster);
      ctx.expect(rep.holds(), params, Json{{"failures", rep.failures}, {"input", to_json(ideal)}});
    });
  });
}

void check_rsequence(Context& ctx) {
  ctx.grid.restrict_keys({"n", "generators", "degree", "d"});
  for_quotient_orderings(ctx, {1, 2, 3}, [&](Json params, const MonomialIdeal& ideal, int, int, const std::vector<int>& q) {
    BettiTable closed;
    try {
      closed = rsequence_betti_for_ideal(ideal, q);
    } catch (const PreconditionFailed& e) {
      ctx.skip(params, e.what());
      return;
    }
    ctx.guarded(params, [&] {
      const auto actual = hochster_betti(ideal.stanley_reisner_complex(), ctx.options.field, ctx.options.hochster);
      ctx.compare(params, closed, actual, to_json(ideal));
    });
  });
}

void check_linear_quotients(Context& ctx) {
  ctx.grid.restrict_keys({"n", "generators", "degree"});
  for_quotient_orderings(ctx, {1}, [&](Json params, const MonomialIdeal& ideal, int degree, int, const std::vector<int>& q) {
    const auto cert = verify_d_quotients(ideal, q, 1);
    std::vector<int> sizes;
    for (std::size_t s = 1; s < cert.colons.size(); ++s) sizes.push_back(static_cast<int>(cert.colons[s].size()));
    // an empty size list stands for the zero ideal, so one generator is special
    const auto closed = sizes.empty() ? rsequence_betti_for_ideal(ideal, q)
                                      : rsequence_betti_closed_form(sizes, 1, degree, ideal.n_vertices());
    ctx.guarded(params, [&] {
      const auto actual = hochster_betti(ideal.stanley_reisner_complex(), ctx.options.field, ctx.options.hochster);
      ctx.compare(params, closed, actual, to_json(ideal));
    });
  });
}

struct TheoremEntry {
  std::string id;
  std::string description;
  std::function<void(Context&)> run;
};

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> entries{
      {"betti", "free-vertex hypergraphs: total Betti numbers are binomial(#edges, i)", check_betti_totals},
      {"u", "free-vertex hypergraphs: graded Betti numbers count unions of i edges by size", check_taylor_graded},
      {"b1", "line with d > 2 alpha: top row is a single 1 at n(d - alpha) + alpha", check_line_top},
      {"l", "line sub-configuration count against enumeration", [](Context& c) { check_counting(c, false); }},
      {"P", "line with d > 2 alpha: closed form against Hochster", check_line_formula},
      {"PI", "line with d = 2 alpha: closed form against Hochster", check_line_degenerate},
      {"b", "hypercycle with free vertices: top row is a single 1 at n(d - alpha)", check_cycle_top},
      {"k", "hypercycle sub-configuration count against enumeration", [](Context& c) { check_counting(c, true); }},
      {"betti1", "hypercycle with d > 2 alpha: closed form against Hochster", check_cycle_formula},
      {"to", "hypercycle with d = 2 alpha: closed form against Hochster", check_cycle_degenerate},
      {"star", "edges sharing one alpha-core: closed form against Hochster", check_star},
      {"hypergraph", "chordal hypergraphs: the clique-complex ideal has linear quotients", check_chordal_quotients},
      {"graph-corollary", "graphs: chordal exactly when the clique-complex ideal has linear quotients",
       check_graph_corollary},
      {"Td-shellable", "K_{k+1} glued along K_k: construction order shells a Cohen-Macaulay complex",
       check_tree_shellable},
      {"two-gluing", "K_m glued to K_i along K_j: predicted linear quotients against search", check_two_gluing},
      {"diameter", "connected chordal graphs: complement diameter at most 3", check_diameter},
      {"AdRd", "A_d(R_d(clique complex)) returns the clique complex", check_adrd},
      {"conn-depth", "con = depth - d + r + 1", [](Context& c) { check_conn_depth(c, false); }},
      {"homconn", "con = 0 exactly when pd = n - d + 1, depth = d - 1 and the linear strand is maximal",
       [](Context& c) { check_conn_depth(c, true); }},
      {"cm-froberg", "Froberg test against Auslander-Buchsbaum, and CM of dimension >= d forces con > 0", check_cm},
      {"knd-complement", "(K_n^d)^c clique complex: closed form against Hochster", check_knd},
      {"dquot-dshell", "d-quotients exist exactly when the dual complex is d-shellable", check_dquot_dshell},
      {"betti-splitting", "Betti numbers split along d-quotients orderings", check_splitting},
      {"rsequence", "colons generated by regular sequences: closed form against Hochster", check_rsequence},
      {"lin-quot", "linear quotients: closed form from colon sizes against Hochster", check_linear_quotients},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string theorem_description(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e.description;
  throw InvalidArgument("unknown theorem id: " + id);
}

VerificationReport run_verification(const std::string& id, const Grid& grid, const VerifyOptions& options) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const TheoremEntry& e) { return e.id == id; });
  if (it == reg.end()) throw InvalidArgument("unknown theorem id: " + id);
  if (!grid.preset().empty() && grid.preset() != "small-world") {
    throw InvalidArgument("grid: unknown preset '" + grid.preset() + "'");
  }
  VerificationReport report;
  report.theorem = id;
  report.grid = grid.text();
  report.field = options.field.name();
  Context ctx{grid, options, report};
  it->run(ctx);
  return report;
}

}  // namespace hgalg
