#ifndef HGALG_HYPERGRAPH_HPP
#define HGALG_HYPERGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "hgalg/bits.hpp"

namespace hgalg {

/// A simple hypergraph H = (X, E) with X a subset of {0..n-1}.
///
/// Edges are stored deduplicated and sorted by mask value. Simplicity is
/// enforced at construction: every edge has at least two vertices and no edge
/// contains another. Vertices keep their ambient labels; `vertex_set()` may be
/// a proper subset of {0..n-1} (for instance after `induced`).
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Hypergraph on vertex set {0..n-1}.
  Hypergraph(int n_vertices, std::vector<Mask> edges);

  /// Hypergraph on an explicit vertex set inside {0..n-1}.
  Hypergraph(int n_vertices, Mask vertex_set, std::vector<Mask> edges);

  int n_vertices() const { return n_; }
  Mask vertex_set() const { return vertices_; }
  int vertex_count() const { return popcount(vertices_); }
  const std::vector<Mask>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(Mask e) const;

  /// Common edge cardinality, or nullopt when edges differ in size. An edgeless
  /// hypergraph reports nullopt; callers that need a d pass it explicitly.
  std::optional<int> uniformity() const;
  bool is_uniform(int d) const;

  /// Edges as ascending vertex lists, sorted lexicographically.
  std::vector<std::vector<int>> edge_lists() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  Mask vertices_ = 0;
  std::vector<Mask> edges_;
};

enum class FamilyKind { complete, line, cycle, multipartite, star_overlap };

/// Parameters of one of the named families. Unused fields are ignored.
struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  int n = 0;
  int d = 2;
  int alpha = 1;
  std::vector<int> parts;
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& s);

/// K_n^d: every d-subset of {0..n-1}. For n < d this is n isolated vertices.
Hypergraph make_complete(int n, int d);

/// L_n^{d,alpha}. Edge E_i (0-based) occupies [i(d-alpha), i(d-alpha)+d).
Hypergraph make_line(int n, int d, int alpha);

/// C_n^{d,alpha}. Same block layout as the line; the last edge wraps onto the
/// first alpha vertices. Vertex count n(d-alpha).
Hypergraph make_cycle(int n, int d, int alpha);

/// n edges sharing the core {0..alpha-1}; edge i owns d-alpha private vertices.
Hypergraph make_star_overlap(int n, int d, int alpha);

/// K^d_{n_1,...,n_t}: every d-subset of the disjoint union of the parts that
/// does not lie inside a single part. Parts are laid out consecutively.
Hypergraph make_multipartite(const std::vector<int>& parts, int d);

Hypergraph make_family(const FamilySpec& spec);

/// d-subsets of the vertex set that are not edges of h.
Hypergraph complement(const Hypergraph& h, int d);

/// H_Y: edges of h lying inside `vertices`; labels are kept.
Hypergraph induced(const Hypergraph& h, Mask vertices);

struct FreeVertexReport {
  std::vector<Mask> free_per_edge;  // parallel to h.edges()
  bool every_edge_has_free_vertex = false;
};

/// For each edge, the vertices of that edge lying in no other edge.
FreeVertexReport free_vertices(const Hypergraph& h);

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(const std::string& text);

/// SHA-256 (hex) of the canonical serialization.
std::string canonical_hash(const Hypergraph& h);

/// Canonical text form: "n=<n>;x=<vertex mask>;e=<sorted edge masks>".
std::string canonical_string(const Hypergraph& h);

}  // namespace hgalg

#endif  // HGALG_HYPERGRAPH_HPP
