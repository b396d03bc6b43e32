#ifndef HGALG_CHORDAL_HPP
#define HGALG_CHORDAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hgalg/bits.hpp"
#include "hgalg/hypergraph.hpp"
#include "hgalg/ideal.hpp"

namespace hgalg {

/// Attach K_i^d along K_j^d. `glue` lists the j existing vertices that are
/// identified with the first j vertices of the new block; when absent, the
/// lexicographically least j-set spanning a K_j^d is used.
struct AttachmentStep {
  int i = 0;
  int j = 0;
  std::optional<std::vector<int>> glue;
};

/// The first step must have j = 0 and creates a bare K_i^d.
struct AttachmentSequence {
  int d = 2;
  std::vector<AttachmentStep> steps;
};

struct ChordalBuild {
  Hypergraph hypergraph;
  /// The input with every glue made explicit.
  AttachmentSequence resolved;
  /// Vertex set of each attached block, in construction order.
  std::vector<Mask> blocks;
};

/// Realizes the sequence. New vertices receive the next free labels.
/// Throws InvalidArgument for a gluing set that is not a d-clique.
ChordalBuild build_chordal(const AttachmentSequence& seq);

/// L_n^{d,α} written as K_d^d glued repeatedly along K_α^d.
AttachmentSequence line_sequence(int n, int d, int alpha);

/// The same steps with d = 2, if every glue is a clique of the graph built
/// along the way.
std::optional<AttachmentSequence> graph_sequence(const AttachmentSequence& seq);

struct ChordalGraphResult {
  bool chordal = false;
  /// Perfect elimination ordering when chordal.
  std::vector<int> elimination_order;
  /// An induced cycle of length at least 4 otherwise.
  std::vector<int> chordless_cycle;
};

/// Maximum cardinality search followed by a perfect-elimination check.
/// Requires a graph (every edge of size 2).
ChordalGraphResult chordal_graph_recognize(const Hypergraph& g);

struct CorollaryGraphReport {
  bool chordal = false;
  bool linear_quotients = false;
  bool agree() const { return chordal == linear_quotients; }
};

/// Compares chordality of g with linear quotients of I_{Δ(g)}.
CorollaryGraphReport corollary_graph_check(const Hypergraph& g, const SearchOptions& options = {64});

/// Predicted linear quotients of I(K_m^d ∪_{K_j^d} K_i^d).
bool two_gluing_classification(int m, int i, int j, int d);

/// K_m^d on 0..m-1 with K_i^d glued along 0..j-1.
Hypergraph two_gluing(int m, int i, int j, int d);

struct TwoGluingReport {
  bool predicted = false;
  bool empirical = false;
  bool agree() const { return predicted == empirical; }
};

TwoGluingReport two_gluing_check(int m, int i, int j, int d, const SearchOptions& options = {64});

/// One attachment sequence per isomorphism class of connected chordal graphs
/// on 1..max_vertices vertices. Each step attaches K_{j+1} along a K_j, so the
/// sequences list a perfect elimination ordering in reverse. Classes are
/// listed by vertex count.
std::vector<AttachmentSequence> connected_chordal_graph_sequences(int max_vertices);

/// Canonical adjacency code of a graph on {0..n-1}: equal exactly for
/// isomorphic graphs. Intended for n ≤ 11.
std::uint64_t canonical_graph_code(const Hypergraph& g);

/// Diameter of the complement of g on X(g); nullopt when it is disconnected.
std::optional<int> complement_diameter(const Hypergraph& g);

enum class ChordalStatus { chordal, not_chordal, inconclusive };

struct HypergraphChordality {
  ChordalStatus status = ChordalStatus::inconclusive;
  /// Vertices in removal order; each is simplicial when removed.
  std::vector<int> elimination_order;
  std::size_t states_explored = 0;
};

/// A vertex w is simplicial when every d-subset of its closed neighbourhood
/// is an edge; removing it undoes one attachment of K_{|N[w]|}^d. The search
/// runs over vertex subsets with memoized dead ends and gives up after
/// `state_budget` subsets.
HypergraphChordality chordal_hypergraph_test(const Hypergraph& h, std::size_t state_budget = std::size_t{1} << 20);

struct HypercycleReport {
  HypergraphChordality result;
  /// For d = 2, the graph recognizer's answer.
  std::optional<bool> graph_recognizer_chordal;
};

HypercycleReport hypercycle_not_chordal_check(int n, int d, int alpha,
                                              std::size_t state_budget = std::size_t{1} << 20);

}  // namespace hgalg

#endif  // HGALG_CHORDAL_HPP
