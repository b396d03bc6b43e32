#ifndef HGALG_HOMOLOGY_HPP
#define HGALG_HOMOLOGY_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "hgalg/bits.hpp"
#include "hgalg/complex.hpp"
#include "hgalg/field.hpp"

namespace hgalg {

inline constexpr std::int64_t kDefaultFaceBudget = std::int64_t{1} << 22;

/// Reduced chain complex data. Vectors are indexed by degree + 1, so slot 0
/// is degree -1 (the empty face). All vectors are empty for the void complex.
struct ChainComplexDims {
  std::vector<std::int64_t> face_counts;
  /// Rank of the boundary map leaving each degree; degree -1 has rank 0.
  std::vector<std::int64_t> boundary_ranks;
  std::vector<std::int64_t> homology;

  /// dim H̃_k; zero outside the stored range.
  std::int64_t dim(int degree) const;
  /// Highest degree with a face, or -2 for the void complex.
  int top_degree() const { return static_cast<int>(face_counts.size()) - 2; }
  bool acyclic() const;
};

/// Reduced homology of a complex by explicit boundary ranks. Throws
/// SizeLimitExceeded when the complex has more than `face_budget` faces.
ChainComplexDims reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field,
                                       std::int64_t face_budget = kDefaultFaceBudget);

/// Same, for the downward-closed family of subsets of `ground` accepted by
/// `is_face`.
ChainComplexDims downset_homology(Mask ground, const std::function<bool(Mask)>& is_face, const FieldSpec& field,
                                  std::int64_t face_budget = kDefaultFaceBudget);

/// Reduced homology of the restrictions Δ_V of one complex, given by its
/// minimal nonfaces.
///
/// When fewer minimal nonfaces lie in V than V has vertices, the homology is
/// read off the nerve of the Alexander dual of Δ_V: its simplices are the
/// nonempty sets of minimal nonfaces in V whose union is a proper subset of V,
/// and H̃_j(Δ_V) has the dimension of H̃_{|V|-j-3} of that nerve. Otherwise the
/// faces of Δ_V are enumerated directly.
class RestrictionHomology {
 public:
  RestrictionHomology(int n_vertices, std::vector<Mask> minimal_nonfaces, FieldSpec field,
                      std::int64_t face_budget = kDefaultFaceBudget);
  RestrictionHomology(const SimplicialComplex& c, FieldSpec field, std::int64_t face_budget = kDefaultFaceBudget);

  int n_vertices() const { return n_; }
  const std::vector<Mask>& minimal_nonfaces() const { return nonfaces_; }
  const FieldSpec& field() const { return field_; }

  /// dim H̃_k(Δ_V) indexed by k + 1; trailing zeros trimmed.
  std::vector<std::int64_t> dims(Mask v) const;
  std::int64_t dim(Mask v, int degree) const;

  /// True when some vertex of V lies in no minimal nonface inside V, which
  /// makes Δ_V a cone with vanishing reduced homology.
  bool is_cone(Mask v) const;

 private:
  int n_;
  std::vector<Mask> nonfaces_;
  FieldSpec field_;
  std::int64_t face_budget_;
};

}  // namespace hgalg

#endif  // HGALG_HOMOLOGY_HPP
