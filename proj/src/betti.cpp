#include "hgalg/betti.hpp"

#include <algorithm>
#include <climits>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "hgalg/errors.hpp"
#include "hgalg/homology.hpp"

namespace hgalg {

std::string to_string(BettiConvention c) { return c == BettiConvention::quotient ? "quotient" : "ideal"; }

std::int64_t BettiTable::get(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t value) {
  if (value == 0) return;
  const std::int64_t v = (entries_[{i, j}] += value);
  if (v < 0) throw std::logic_error("negative Betti number");
  if (v == 0) entries_.erase({i, j});
}

void BettiTable::set(int i, int j, std::int64_t value) {
  if (value < 0) throw InvalidArgument("Betti numbers are nonnegative");
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (auto it = entries_.lower_bound({i, INT_MIN}); it != entries_.end() && it->first.first == i; ++it) {
    s += it->second;
  }
  return s;
}

int BettiTable::max_degree() const { return entries_.empty() ? -1 : entries_.rbegin()->first.first; }

std::vector<int> BettiTable::degrees_in_row(int i) const {
  std::vector<int> out;
  for (auto it = entries_.lower_bound({i, INT_MIN}); it != entries_.end() && it->first.first == i; ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

BettiTable BettiTable::to_convention(BettiConvention target) const {
  if (target == convention_) return *this;
  BettiTable out(n_, target);
  if (target == BettiConvention::ideal) {
    if (entries_.empty()) {
      out.set(0, 0, 1);
      return out;
    }
    for (const auto& [key, v] : entries_) {
      if (key.first == 0) continue;
      out.set(key.first - 1, key.second, v);
    }
  } else {
    if (get(0, 0) != 0) return out;
    out.set(0, 0, 1);
    for (const auto& [key, v] : entries_) out.set(key.first + 1, key.second, v);
  }
  return out;
}

BettiTable BettiTable::shifted(int delta) const {
  BettiTable out(n_, convention_);
  for (const auto& [key, v] : entries_) out.set(key.first, key.second + delta, v);
  return out;
}

std::string BettiTable::to_csv() const {
  std::ostringstream os;
  os << "i,j,beta\n";
  for (const auto& [key, v] : entries_) os << key.first << ',' << key.second << ',' << v << '\n';
  return os.str();
}

namespace {

// Every nonzero multigraded Betti number of R/I_Δ sits on a union of minimal
// nonfaces, so only those V are visited.
std::vector<Mask> lcm_lattice(const std::vector<Mask>& nonfaces) {
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> order{0};
  for (Mask s : nonfaces) {
    const std::size_t size = order.size();
    for (std::size_t k = 0; k < size; ++k) {
      const Mask u = order[k] | s;
      if (seen.insert(u).second) order.push_back(u);
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

void check_nonnegative_index(int n, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + " must be nonnegative");
}

}  // namespace

BettiTable hochster_betti(const SimplicialComplex& c, const FieldSpec& field, const HochsterOptions& options) {
  if (c.is_void()) throw InvalidArgument("hochster_betti: the void complex has no Stanley-Reisner ring");
  const int n = c.n_vertices();
  if (n > options.max_vertices) {
    throw SizeLimitExceeded("hochster_betti: " + std::to_string(n) + " vertices exceeds the bound of " +
                            std::to_string(options.max_vertices));
  }
  const RestrictionHomology rh(c, field, options.face_budget);
  const std::vector<Mask> candidates = lcm_lattice(rh.minimal_nonfaces());

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, candidates.size() / 64)));

  std::vector<BettiTable> partial(threads, BettiTable(n));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t k = t; k < candidates.size(); k += threads) {
        const Mask v = candidates[k];
        const int size = popcount(v);
        const auto h = rh.dims(v);
        for (std::size_t idx = 0; idx < h.size(); ++idx) {
          const int l = static_cast<int>(idx) - 1;
          partial[t].add(size - l - 1, size, h[idx]);
        }
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  BettiTable out(n);
  for (const auto& p : partial) {
    for (const auto& [key, v] : p.entries()) out.add(key.first, key.second, v);
  }
  return out;
}

BettiTable taylor_betti_free_vertex(const Hypergraph& h) {
  if (!free_vertices(h).every_edge_has_free_vertex) {
    throw PreconditionFailed(
        "taylor_betti_free_vertex: some edge has no free vertex; use hochster_betti on the independence complex");
  }
  const auto& edges = h.edges();
  if (edges.size() > 25) throw SizeLimitExceeded("taylor_betti_free_vertex: more than 25 edges");
  BettiTable out(h.n_vertices());
  std::map<BettiTable::Key, std::int64_t> counts;
  std::function<void(std::size_t, int, Mask)> rec = [&](std::size_t idx, int size, Mask u) {
    if (idx == edges.size()) {
      ++counts[{size, popcount(u)}];
      return;
    }
    rec(idx + 1, size, u);
    rec(idx + 1, size + 1, u | edges[idx]);
  };
  rec(0, 0, 0);
  for (const auto& [key, v] : counts) out.add(key.first, key.second, v);
  return out;
}

BettiTable line_betti_closed_form(int n, int d, int alpha) {
  if (n < 1 || alpha < 0) throw InvalidArgument("line_betti_closed_form: need n >= 1 and alpha >= 0");
  if (d <= 2 * alpha) throw InvalidArgument("line_betti_closed_form: needs d > 2*alpha; use line_betti_degenerate");
  BettiTable out(n * (d - alpha) + alpha);
  out.set(0, 0, 1);
  for (int i = 1; i < n; ++i) {
    for (int r = 1; r <= i; ++r) {
      out.add(i, i * d - alpha * (i - r), binomial(i - 1, r - 1) * binomial(n - i + 1, r));
    }
  }
  out.add(n, n * (d - alpha) + alpha, 1);
  return out;
}

BettiTable line_betti_degenerate(int n, int alpha) {
  if (n < 1 || alpha < 1) throw InvalidArgument("line_betti_degenerate: need n >= 1 and alpha >= 1");
  BettiTable out(n * alpha + alpha);
  out.set(0, 0, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= 2 * i; ++j) {
      const int m = n + 1 - 2 * j + 2 * i;
      const std::int64_t v = binomial(j - i, 2 * i - j) * binomial(m, j - i) +
                             binomial(j - i - 1, 2 * i - j) * binomial(m, j - i - 1);
      out.add(i, j * alpha, v);
    }
  }
  return out;
}

BettiTable cycle_betti_closed_form(int n, int d, int alpha) {
  if (n < 3 || alpha < 0) throw InvalidArgument("cycle_betti_closed_form: need n >= 3 and alpha >= 0");
  if (d <= 2 * alpha) throw InvalidArgument("cycle_betti_closed_form: needs d > 2*alpha; use cycle_betti_degenerate");
  BettiTable out(n * (d - alpha));
  out.set(0, 0, 1);
  for (int i = 1; i < n; ++i) {
    for (int r = 1; r <= i; ++r) {
      const std::int64_t num = std::int64_t{n} * binomial(i - 1, r - 1) * binomial(n - i - 1, r - 1);
      if (num % r != 0) throw std::logic_error("cycle_betti_closed_form: non-integral coefficient");
      out.add(i, i * d - alpha * (i - r), num / r);
    }
  }
  out.add(n, n * (d - alpha), 1);
  return out;
}

BettiTable cycle_betti_degenerate(int n, int alpha) {
  if (n < 3 || alpha < 1) throw InvalidArgument("cycle_betti_degenerate: need n >= 3 and alpha >= 1");
  BettiTable out(n * alpha);
  out.set(0, 0, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= std::min(2 * i, n - 1); ++j) {
      const int denom = n - 2 * (j - i);
      if (denom <= 0) continue;
      const std::int64_t num = std::int64_t{n} * binomial(j - i, 2 * i - j) * binomial(denom, j - i);
      if (num % denom != 0) throw std::logic_error("cycle_betti_degenerate: non-integral coefficient");
      out.add(i, alpha * j, num / denom);
    }
  }
  switch (n % 3) {
    case 0: out.add(2 * n / 3, alpha * n, 2); break;
    case 1: out.add((2 * n + 1) / 3, alpha * n, 1); break;
    default: out.add((2 * n - 1) / 3, alpha * n, 1); break;
  }
  return out;
}

BettiTable star_betti_closed_form(int n, int d, int alpha) {
  if (n < 1 || alpha < 0 || d <= alpha) throw InvalidArgument("star_betti_closed_form: need n >= 1, 0 <= alpha < d");
  BettiTable out(alpha + n * (d - alpha));
  out.set(0, 0, 1);
  for (int i = 1; i <= n; ++i) out.add(i, i * d - alpha * (i - 1), binomial(n, i));
  return out;
}

BettiTable knd_complement_betti(int n, int d) {
  if (d < 2 || d > n) throw InvalidArgument("knd_complement_betti: need 2 <= d <= n");
  BettiTable out(n);
  out.set(0, 0, 1);
  for (int i = 1; i <= n - d + 1; ++i) {
    const int j = i + d - 1;
    out.add(i, j, binomial(n, j) * binomial(j - 1, d - 1));
  }
  return out;
}

namespace {

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int x = 2; x <= k; ++x) f *= x;
  return f;
}

// r! / ∏ l_u! where l_u are the multiplicities of equal lengths, as (numerator
// helper, denominator).
std::int64_t multiplicity_denominator(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end());
  std::int64_t den = 1;
  for (std::size_t a = 0; a < lengths.size();) {
    std::size_t b = a;
    while (b < lengths.size() && lengths[b] == lengths[a]) ++b;
    den *= factorial(static_cast<int>(b - a));
    a = b;
  }
  return den;
}

void check_lengths(const std::vector<int>& lengths, int n) {
  check_nonnegative_index(n, "n");
  if (lengths.empty()) throw InvalidArgument("need at least one line length");
  int sum = 0;
  for (int s : lengths) {
    if (s < 1) throw InvalidArgument("line lengths must be positive");
    sum += s;
  }
  if (sum > n) throw InvalidArgument("total length exceeds n");
}

int total_length(const std::vector<int>& lengths) {
  int s = 0;
  for (int x : lengths) s += x;
  return s;
}

// Counts i-subsets of the edges whose vertex-sharing components are paths
// with the given multiset of lengths.
std::int64_t brute_count(const Hypergraph& h, std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end());
  const auto& edges = h.edges();
  const int m = static_cast<int>(edges.size());
  const int i = total_length(lengths);
  std::int64_t count = 0;
  for_each_k_subset(m, i, [&](Mask chosen) {
    const std::vector<int> idx = vertices_of(chosen);
    const int k = static_cast<int>(idx.size());
    std::vector<int> comp(k, -1);
    std::vector<int> sizes, edge_counts;
    std::vector<int> degree(k, 0);
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (edges[idx[a]] & edges[idx[b]]) {
          ++degree[a];
          ++degree[b];
        }
      }
    }
    for (int s = 0; s < k; ++s) {
      if (comp[s] != -1) continue;
      const int id = static_cast<int>(sizes.size());
      int vertices = 0, adjacency = 0;
      std::vector<int> stack{s};
      comp[s] = id;
      while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        ++vertices;
        adjacency += degree[a];
        for (int b = 0; b < k; ++b) {
          if (comp[b] == -1 && (edges[idx[a]] & edges[idx[b]])) {
            comp[b] = id;
            stack.push_back(b);
          }
        }
      }
      sizes.push_back(vertices);
      edge_counts.push_back(adjacency / 2);
    }
    for (int a = 0; a < k; ++a) {
      if (degree[a] > 2) return;
    }
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (edge_counts[c] != sizes[c] - 1) return;
    }
    std::sort(sizes.begin(), sizes.end());
    if (sizes == lengths) ++count;
  });
  return count;
}

}  // namespace

std::int64_t count_line_subconfigs(const std::vector<int>& lengths, int n) {
  check_lengths(lengths, n);
  const int r = static_cast<int>(lengths.size());
  const int i = total_length(lengths);
  return factorial(r) / multiplicity_denominator(lengths) * binomial(n - i + 1, r);
}

std::int64_t count_cycle_subconfigs(const std::vector<int>& lengths, int n) {
  check_lengths(lengths, n);
  const int r = static_cast<int>(lengths.size());
  const int i = total_length(lengths);
  const std::int64_t num = std::int64_t{n} * factorial(r - 1) * binomial(n - i - 1, r - 1);
  const std::int64_t den = multiplicity_denominator(lengths);
  if (num % den != 0) throw std::logic_error("count_cycle_subconfigs: non-integral count");
  return num / den;
}

std::int64_t count_line_subconfigs_brute(const std::vector<int>& lengths, int n) {
  check_lengths(lengths, n);
  return brute_count(make_line(n, 3, 1), lengths);
}

std::int64_t count_cycle_subconfigs_brute(const std::vector<int>& lengths, int n) {
  check_lengths(lengths, n);
  if (n < 3) throw InvalidArgument("cycles need n >= 3");
  return brute_count(make_cycle(n, 3, 1), lengths);
}

namespace {

int uniform_degree(const Hypergraph& h) {
  const auto d = h.uniformity();
  if (!d) throw InvalidArgument("hypergraph must be uniform with at least one edge");
  return *d;
}

}  // namespace

std::optional<int> connectivity(const Hypergraph& h, const FieldSpec& field) {
  const int d = uniform_degree(h);
  const RestrictionHomology rh(clique_complex(h, d), field);
  const Mask x = h.vertex_set();
  for (int s = 0; s <= popcount(x); ++s) {
    bool found = false;
    for_each_k_subset_of(x, s, [&](Mask v) {
      if (!found && rh.dim(x & ~v, d - 2) != 0) found = true;
    });
    if (found) return s;
  }
  return std::nullopt;
}

ResolutionStats resolution_stats(const BettiTable& t, int d) {
  if (t.convention() != BettiConvention::quotient) throw InvalidArgument("resolution_stats: needs a quotient table");
  if (t.empty()) throw InvalidArgument("resolution_stats: empty Betti table");
  ResolutionStats s;
  s.pd = t.max_degree();
  s.depth = t.n_vertices() - s.pd;
  s.has_linear_resolution = true;
  s.regularity = 0;
  for (const auto& [key, v] : t.entries()) {
    const auto [i, j] = key;
    s.regularity = std::max(s.regularity, j - i);
    if (i >= 1) {
      if (j == i + d - 1) {
        s.linear_strand_length = std::max(s.linear_strand_length, i);
      } else {
        s.has_linear_resolution = false;
      }
    }
  }
  if (s.pd + s.depth != t.n_vertices()) throw std::logic_error("pd + depth != n");
  return s;
}

ConnDepthReport check_conn_depth_theorem(const Hypergraph& h, const FieldSpec& field, const HochsterOptions& options) {
  const int d = uniform_degree(h);
  const int n = h.n_vertices();
  if (h.vertex_set() != full_mask(n)) throw InvalidArgument("check_conn_depth_theorem: every vertex must lie in X");
  ConnDepthReport rep;
  rep.n = n;
  rep.d = d;
  rep.connectivity = connectivity(h, field);
  const BettiTable t = hochster_betti(clique_complex(h, d), field, options);
  rep.stats = resolution_stats(t, d);
  const int pd = rep.stats.pd;
  for (int r = 0; pd - r >= 1; ++r) {
    if (t.get(pd - r, pd - r + d - 1) != 0) {
      rep.r = r;
      break;
    }
  }
  if (rep.stats.linear_strand_length > 0) rep.r_from_strand = pd - rep.stats.linear_strand_length;
  if (rep.connectivity && rep.r) {
    rep.formula_holds = (*rep.connectivity == rep.stats.depth - d + *rep.r + 1);
  }
  rep.not_homologically_connected = rep.connectivity && *rep.connectivity == 0;
  rep.homconn_conditions = pd == n - d + 1 && rep.stats.depth == d - 1 && rep.r && *rep.r == 0;
  rep.homconn_equivalence_holds = rep.not_homologically_connected == rep.homconn_conditions;
  return rep;
}

CohenMacaulayReport froberg_cm_check(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw InvalidArgument("froberg_cm_check: void complex");
  CohenMacaulayReport rep;
  const Mask ground = c.vertex_set();
  const int n = popcount(ground);
  const int e = c.dim() + 1;
  const RestrictionHomology rh(c, field);
  for (int i = -1; i <= e - 2 && !rep.violation; ++i) {
    const int size = n - e + i + 2;
    if (size < 0 || size > n) continue;
    std::vector<Mask> sets;
    for_each_k_subset_of(ground, size, [&](Mask v) { sets.push_back(v); });
    sort_lex(sets);
    for (Mask v : sets) {
      if (rh.dim(v, i) != 0) {
        rep.violation = std::make_pair(i, v);
        break;
      }
    }
  }
  rep.cohen_macaulay = !rep.violation;
  return rep;
}

}  // namespace hgalg
