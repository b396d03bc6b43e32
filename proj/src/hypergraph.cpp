#include "hgalg/hypergraph.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

void check_vertex_count(int n) {
  if (n < 0) throw InvalidArgument("vertex count must be nonnegative");
  if (n > kMaxVertices) {
    throw InvalidArgument("at most " + std::to_string(kMaxVertices) +
                          " vertices are supported, got " + std::to_string(n));
  }
}

}  // namespace

Hypergraph::Hypergraph(int n_vertices, std::vector<Mask> edges)
    : Hypergraph(n_vertices, full_mask(std::max(n_vertices, 0)), std::move(edges)) {}

Hypergraph::Hypergraph(int n_vertices, Mask vertex_set, std::vector<Mask> edges)
    : n_(n_vertices), vertices_(vertex_set), edges_(std::move(edges)) {
  check_vertex_count(n_);
  if (!is_subset(vertices_, full_mask(n_))) {
    throw InvalidArgument("vertex set exceeds the declared vertex count");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (Mask e : edges_) {
    if (popcount(e) < 2) throw InvalidArgument("edges must have at least two vertices");
    if (!is_subset(e, vertices_)) throw InvalidArgument("edge uses a vertex outside the vertex set");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (i != j && is_subset(edges_[i], edges_[j])) {
        throw InvalidArgument("hypergraph is not simple: an edge contains another edge");
      }
    }
  }
}

bool Hypergraph::has_edge(Mask e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const int d = popcount(edges_.front());
  for (Mask e : edges_) {
    if (popcount(e) != d) return std::nullopt;
  }
  return d;
}

bool Hypergraph::is_uniform(int d) const {
  return std::all_of(edges_.begin(), edges_.end(), [d](Mask e) { return popcount(e) == d; });
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
  std::vector<Mask> sorted = edges_;
  sort_lex(sorted);
  std::vector<std::vector<int>> out;
  out.reserve(sorted.size());
  for (Mask e : sorted) out.push_back(vertices_of(e));
  return out;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::line: return "line";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::multipartite: return "multipartite";
    case FamilyKind::star_overlap: return "star";
  }
  return "unknown";
}

FamilyKind family_kind_from_string(const std::string& s) {
  if (s == "complete") return FamilyKind::complete;
  if (s == "line") return FamilyKind::line;
  if (s == "cycle") return FamilyKind::cycle;
  if (s == "multipartite") return FamilyKind::multipartite;
  if (s == "star" || s == "star-overlap") return FamilyKind::star_overlap;
  throw InvalidArgument("unknown family: " + s);
}

Hypergraph make_complete(int n, int d) {
  if (d < 2) throw InvalidArgument("make_complete: d must be at least 2");
  check_vertex_count(n);
  std::vector<Mask> edges;
  for_each_k_subset(n, d, [&](Mask s) { edges.push_back(s); });
  return Hypergraph(n, std::move(edges));
}

namespace {

void check_overlap_params(int d, int alpha) {
  if (d < 2) throw InvalidArgument("d must be at least 2");
  if (alpha < 1) throw InvalidArgument("alpha must be at least 1");
  if (2 * alpha > d) {
    throw InvalidArgument("2*alpha must not exceed d: consecutive overlaps would intersect");
  }
}

Mask block(int start, int len) { return full_mask(len) << start; }

}  // namespace

Hypergraph make_line(int n, int d, int alpha) {
  if (n < 1) throw InvalidArgument("make_line: n must be at least 1");
  check_overlap_params(d, alpha);
  const int step = d - alpha;
  const int total = n * step + alpha;
  check_vertex_count(total);
  std::vector<Mask> edges;
  for (int i = 0; i < n; ++i) edges.push_back(block(i * step, d));
  return Hypergraph(total, std::move(edges));
}

Hypergraph make_cycle(int n, int d, int alpha) {
  if (n < 3) throw InvalidArgument("make_cycle: n must be at least 3");
  check_overlap_params(d, alpha);
  const int step = d - alpha;
  const int total = n * step;
  check_vertex_count(total);
  std::vector<Mask> edges;
  for (int i = 0; i < n - 1; ++i) edges.push_back(block(i * step, d));
  // Last edge: its own step-block followed by the first alpha vertices.
  edges.push_back(block((n - 1) * step, step) | block(0, alpha));
  return Hypergraph(total, std::move(edges));
}

Hypergraph make_star_overlap(int n, int d, int alpha) {
  if (n < 1) throw InvalidArgument("make_star_overlap: n must be at least 1");
  if (d < 2) throw InvalidArgument("make_star_overlap: d must be at least 2");
  if (alpha < 0) throw InvalidArgument("make_star_overlap: alpha must be nonnegative");
  if (d - alpha < 1) throw InvalidArgument("make_star_overlap: every edge needs a private vertex (d > alpha)");
  const int priv = d - alpha;
  const int total = alpha + n * priv;
  check_vertex_count(total);
  const Mask core = block(0, alpha);
  std::vector<Mask> edges;
  for (int i = 0; i < n; ++i) edges.push_back(core | block(alpha + i * priv, priv));
  return Hypergraph(total, std::move(edges));
}

Hypergraph make_multipartite(const std::vector<int>& parts, int d) {
  if (d < 2) throw InvalidArgument("make_multipartite: d must be at least 2");
  int total = 0;
  std::vector<Mask> part_masks;
  for (int p : parts) {
    if (p < 1) throw InvalidArgument("make_multipartite: part sizes must be positive");
    part_masks.push_back(block(total, p));
    total += p;
  }
  check_vertex_count(total);
  std::vector<Mask> edges;
  for_each_k_subset(total, d, [&](Mask s) {
    for (Mask pm : part_masks) {
      if (is_subset(s, pm)) return;
    }
    edges.push_back(s);
  });
  return Hypergraph(total, std::move(edges));
}

Hypergraph make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::complete: return make_complete(spec.n, spec.d);
    case FamilyKind::line: return make_line(spec.n, spec.d, spec.alpha);
    case FamilyKind::cycle: return make_cycle(spec.n, spec.d, spec.alpha);
    case FamilyKind::multipartite: return make_multipartite(spec.parts, spec.d);
    case FamilyKind::star_overlap: return make_star_overlap(spec.n, spec.d, spec.alpha);
  }
  throw InvalidArgument("unknown family");
}

Hypergraph complement(const Hypergraph& h, int d) {
  if (d < 2) throw InvalidArgument("complement: d must be at least 2");
  if (!h.is_uniform(d)) throw InvalidArgument("complement: hypergraph is not " + std::to_string(d) + "-uniform");
  std::vector<Mask> edges;
  for_each_k_subset_of(h.vertex_set(), d, [&](Mask s) {
    if (!h.has_edge(s)) edges.push_back(s);
  });
  return Hypergraph(h.n_vertices(), h.vertex_set(), std::move(edges));
}

Hypergraph induced(const Hypergraph& h, Mask vertices) {
  if (!is_subset(vertices, h.vertex_set())) {
    throw InvalidArgument("induced: subset is not contained in the vertex set");
  }
  std::vector<Mask> edges;
  for (Mask e : h.edges()) {
    if (is_subset(e, vertices)) edges.push_back(e);
  }
  return Hypergraph(h.n_vertices(), vertices, std::move(edges));
}

FreeVertexReport free_vertices(const Hypergraph& h) {
  const auto& edges = h.edges();
  FreeVertexReport report;
  report.free_per_edge.reserve(edges.size());
  report.every_edge_has_free_vertex = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Mask others = 0;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != i) others |= edges[j];
    }
    const Mask free = edges[i] & ~others;
    report.free_per_edge.push_back(free);
    if (free == 0) report.every_edge_has_free_vertex = false;
  }
  return report;
}

std::string canonical_string(const Hypergraph& h) {
  std::ostringstream os;
  os << "n=" << h.n_vertices() << ";x=" << h.vertex_set() << ";e=";
  bool first = true;
  for (Mask e : h.edges()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os.str();
}

std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

std::string canonical_hash(const Hypergraph& h) { return sha256_hex(canonical_string(h)); }

}  // namespace hgalg
