#ifndef HGALG_COMPLEX_HPP
#define HGALG_COMPLEX_HPP

#include <climits>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hgalg/bits.hpp"
#include "hgalg/hypergraph.hpp"

namespace hgalg {

/// A simplicial complex on the ground set {0..n-1}, stored by its facets.
///
/// The void complex (no faces at all) and the empty complex {∅} are distinct:
/// the former has no facets, the latter has the single facet 0.
class SimplicialComplex {
 public:
  static constexpr int kVoidDimension = INT_MIN;

  SimplicialComplex() = default;

  static SimplicialComplex void_complex(int n_vertices);
  static SimplicialComplex empty_complex(int n_vertices);
  static SimplicialComplex simplex(int n_vertices, Mask vertices);
  static SimplicialComplex from_facets(int n_vertices, std::vector<Mask> facets);
  /// Faces are the subsets of {0..n-1} containing none of `nonfaces`.
  static SimplicialComplex from_minimal_nonfaces(int n_vertices, std::vector<Mask> nonfaces);

  int n_vertices() const { return n_; }
  bool is_void() const { return facets_.empty(); }
  /// Facets sorted by mask value.
  const std::vector<Mask>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  int dim() const;
  bool is_pure() const;
  bool contains(Mask face) const;
  /// Union of all facets.
  Mask vertex_set() const;

  /// Minimal subsets of {0..n-1} that are not faces. Computed once and shared
  /// between copies.
  const std::vector<Mask>& minimal_nonfaces() const;

  /// Faces of cardinality k, sorted.
  std::vector<Mask> faces_of_size(int k) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  struct NonfaceCache {
    std::once_flag once;
    std::vector<Mask> nonfaces;
  };

  SimplicialComplex(int n, std::vector<Mask> facets);
  // Caller guarantees `nonfaces` are exactly the minimal nonfaces.
  static SimplicialComplex with_nonfaces(int n, std::vector<Mask> facets, std::vector<Mask> nonfaces);

  friend SimplicialComplex clique_complex(const Hypergraph& h, int d);
  friend SimplicialComplex alexander_dual(const SimplicialComplex& c);

  int n_ = 0;
  std::vector<Mask> facets_;
  std::shared_ptr<NonfaceCache> cache_ = std::make_shared<NonfaceCache>();
};

/// Δ_H: subsets of the vertex set containing no edge. Ground vertices outside
/// X(H) are nonfaces.
SimplicialComplex independence_complex(const Hypergraph& h);

/// Δ(H): sets all of whose d-subsets are edges. Every subset of X(H) of size
/// below d is a face.
SimplicialComplex clique_complex(const Hypergraph& h, int d);

/// Complex generated by the edges of h as facets.
SimplicialComplex edge_complex(const Hypergraph& h);

SimplicialComplex restrict(const SimplicialComplex& c, Mask vertices);

/// Throws InvalidArgument when `face` is not a face of c.
SimplicialComplex link(const SimplicialComplex& c, Mask face);

/// Faces are the F with [n]∖F not a face of c.
SimplicialComplex alexander_dual(const SimplicialComplex& c);

/// R_d: drop facets of dimension 1..d-2 together with those of their faces of
/// positive dimension that lie in no larger facet. Vertices stay.
SimplicialComplex strip_small_facets(const SimplicialComplex& c, int d);

/// A_d: every (d-1)-subset of the vertex set that is not a face is added as a
/// facet.
SimplicialComplex pad_facets(const SimplicialComplex& c, int d);

/// Leaf order of the facets, searched per connected component; components are
/// concatenated in order of their lowest vertex. nullopt when some component
/// has none. A void complex has the empty order.
std::optional<std::vector<Mask>> quasi_forest_leaf_order(const SimplicialComplex& c);

/// True when `facet` is a leaf of the complex generated by `facets`.
bool is_leaf(Mask facet, const std::vector<Mask>& facets);

}  // namespace hgalg

#endif  // HGALG_COMPLEX_HPP
