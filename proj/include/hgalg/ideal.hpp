#ifndef HGALG_IDEAL_HPP
#define HGALG_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgalg/betti.hpp"
#include "hgalg/bits.hpp"
#include "hgalg/complex.hpp"
#include "hgalg/field.hpp"
#include "hgalg/hypergraph.hpp"

namespace hgalg {

/// Squarefree monomial ideal in k[x_0..x_{n-1}], each generator stored by its
/// support. Generator order is kept as given.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int n_vertices, std::vector<Mask> generators);

  int n_vertices() const { return n_; }
  const std::vector<Mask>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  /// No support contains another and none repeats.
  bool is_minimal() const;
  /// Common support size, if every generator has the same one.
  std::optional<int> generator_degree() const;

  /// Minimal generators, lex-sorted.
  MonomialIdeal minimalized() const;
  /// The first `count` generators.
  MonomialIdeal prefix(std::size_t count) const;
  /// Generators permuted so that position s holds generators()[ordering[s]].
  MonomialIdeal reordered(const std::vector<int>& ordering) const;

  /// Δ_I: the complex whose minimal nonfaces are the minimal generators.
  /// The unit ideal gives the void complex.
  SimplicialComplex stanley_reisner_complex() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.generators_ == b.generators_;
  }

 private:
  int n_ = 0;
  std::vector<Mask> generators_;
};

MonomialIdeal edge_ideal(const Hypergraph& h);

/// Minimal generators of (prefix : x^m), lex-sorted. The zero ideal stays zero.
MonomialIdeal colon_by_generator(const MonomialIdeal& prefix, Mask m);

/// One generator per line as a product x1*x2*..., variables numbered from 1.
std::string to_variable_products(const MonomialIdeal& ideal);

struct SearchOptions {
  std::size_t max_items = 12;
};

struct QuotientCertificate {
  bool ok = false;
  int d = 0;
  std::vector<int> ordering;
  /// colons[s] generates (m_0..m_{s-1}) : m_s in the given order; colons[0] is empty.
  std::vector<std::vector<Mask>> colons;
  /// First position whose colon has a generator of the wrong size.
  std::optional<std::size_t> failed_step;
};

/// Checks that every colon along the ordering is generated in degree d.
/// I must be minimally generated; `ordering` is a permutation of its indices.
QuotientCertificate verify_d_quotients(const MonomialIdeal& ideal, const std::vector<int>& ordering, int d);

/// Depth-first search over orderings with memoized dead prefixes. Throws
/// SizeLimitExceeded above options.max_items generators.
std::optional<std::vector<int>> search_d_quotients(const MonomialIdeal& ideal, int d, const SearchOptions& options = {});

struct ShellingCertificate {
  bool ok = false;
  int d = 0;
  std::vector<Mask> ordering;
  /// witnesses[j]: the minimal sets F_j ∖ F_i over i < j, each of size d when ok.
  std::vector<std::vector<Mask>> witnesses;
  std::optional<std::size_t> failed_step;
};

/// `ordering` lists every facet of c once. The step j is accepted when the
/// maximal sets F_j ∩ F_i (i < j) all have |F_j| - d elements, and
/// independently when every F_j ∖ F_i contains some F_j ∖ F_k (k < j) of size
/// d. The two answers must agree; a disagreement throws std::logic_error.
ShellingCertificate verify_d_shelling(const SimplicialComplex& c, const std::vector<Mask>& ordering, int d);

std::optional<std::vector<Mask>> search_d_shelling(const SimplicialComplex& c, int d,
                                                   const SearchOptions& options = {});

struct DualBridge {
  SimplicialComplex complex;
  /// facets[s] = [n] ∖ generators()[s].
  std::vector<Mask> facets;
};

/// Alexander dual of Δ_I with its facets listed in generator order.
DualBridge duality_bridge(const MonomialIdeal& ideal);

/// Facet order of the bridge matching a generator permutation, and back.
std::vector<Mask> facets_in_order(const DualBridge& bridge, const std::vector<int>& ordering);
std::vector<int> ordering_of_facets(const DualBridge& bridge, const std::vector<Mask>& facets);

struct SplittingReport {
  int d = 0;
  int d_prime = 0;
  /// R/I_s for s = 1..t.
  std::vector<BettiTable> prefix_tables;
  /// R/(I_{s-1} : m_s) for s = 2..t, unshifted.
  std::vector<BettiTable> colon_tables;
  bool disjoint_degrees = true;
  bool graded_recursion = true;
  bool total_identity = true;
  std::vector<std::string> failures;

  bool holds() const { return disjoint_degrees && graded_recursion && total_identity; }
  const BettiTable& quotient_table() const { return prefix_tables.back(); }
};

/// Compares the Betti numbers of R/I with those of the colon ideals along a
/// d-quotients ordering. I must be generated in degree d_prime and have
/// d-quotients (for some d) along `ordering`; otherwise PreconditionFailed.
SplittingReport betti_splitting_check(const MonomialIdeal& ideal, const std::vector<int>& ordering, int d_prime,
                                      const FieldSpec& field, const HochsterOptions& options = {});

/// Table of R/I when each colon I_{s-1} : m_s is generated by a regular
/// sequence of r_s monomials of degree d, for s = 2..t (t = r.size() + 1).
/// An empty list gives the table of R alone.
BettiTable rsequence_betti_closed_form(const std::vector<int>& colon_sizes, int d, int d_prime, int n_vertices = 0);

/// Computes the colons of I along `ordering`, checks that each is generated
/// by pairwise disjoint supports of one common size d, and returns the closed
/// form. Throws PreconditionFailed otherwise.
BettiTable rsequence_betti_for_ideal(const MonomialIdeal& ideal, const std::vector<int>& ordering);

struct LinkSpotcheck {
  std::size_t faces_checked = 0;
  bool truncated = false;
  std::optional<Mask> failing_face;
  bool ok() const { return !failing_face.has_value(); }
};

/// For every face F (up to max_faces of them), verifies that the facets of
/// lk(F), taken as F_i ∖ F in the order induced by `ordering`, form a
/// d-shelling of the link.
LinkSpotcheck link_shellability_spotcheck(const SimplicialComplex& c, const std::vector<Mask>& ordering, int d,
                                          std::size_t max_faces = 4096);

}  // namespace hgalg

#endif  // HGALG_IDEAL_HPP
