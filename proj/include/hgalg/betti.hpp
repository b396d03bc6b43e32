#ifndef HGALG_BETTI_HPP
#define HGALG_BETTI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgalg/complex.hpp"
#include "hgalg/field.hpp"
#include "hgalg/hypergraph.hpp"

namespace hgalg {

enum class BettiConvention { quotient, ideal };

std::string to_string(BettiConvention c);

/// Graded Betti numbers β_{i,j}, either of R/I (quotient) or of I (ideal).
/// Only nonzero entries are stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  BettiTable() = default;
  explicit BettiTable(int n_vertices, BettiConvention convention = BettiConvention::quotient)
      : n_(n_vertices), convention_(convention) {}

  int n_vertices() const { return n_; }
  BettiConvention convention() const { return convention_; }

  std::int64_t get(int i, int j) const;
  void add(int i, int j, std::int64_t value);
  void set(int i, int j, std::int64_t value);

  const std::map<Key, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Σ_j β_{i,j}.
  std::int64_t total(int i) const;
  /// Largest i with a nonzero entry, or -1 when empty.
  int max_degree() const;
  /// Degrees j with β_{i,j} ≠ 0.
  std::vector<int> degrees_in_row(int i) const;

  /// β_{i,j}(I) = β_{i+1,j}(R/I). An empty quotient table (R/I = 0) maps to
  /// the unit ideal, whose only entry is (0,0), and back.
  BettiTable to_convention(BettiConvention target) const;

  /// Entries with j shifted by `delta` (twist R/J(-delta)).
  BettiTable shifted(int delta) const;

  std::string to_csv() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.n_ == b.n_ && a.convention_ == b.convention_ && a.entries_ == b.entries_;
  }

 private:
  int n_ = 0;
  BettiConvention convention_ = BettiConvention::quotient;
  std::map<Key, std::int64_t> entries_;
};

struct HochsterOptions {
  int max_vertices = 20;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  std::int64_t face_budget = std::int64_t{1} << 22;
};

/// β_{i,j}(R/I_Δ) = Σ_{|V|=j} dim H̃_{j-i-1}(Δ_V).
BettiTable hochster_betti(const SimplicialComplex& c, const FieldSpec& field, const HochsterOptions& options = {});

/// Betti table of R/I(H) by counting unions of edge subsets. Requires every
/// edge to have a free vertex; otherwise throws PreconditionFailed.
BettiTable taylor_betti_free_vertex(const Hypergraph& h);

/// Line hypergraph with d > 2α.
BettiTable line_betti_closed_form(int n, int d, int alpha);
/// Line hypergraph with d = 2α.
BettiTable line_betti_degenerate(int n, int alpha);
/// Hypercycle with d > 2α.
BettiTable cycle_betti_closed_form(int n, int d, int alpha);
/// Hypercycle with d = 2α.
BettiTable cycle_betti_degenerate(int n, int alpha);
/// n edges pairwise meeting in a common core of size α.
BettiTable star_betti_closed_form(int n, int d, int alpha);
/// Stanley-Reisner ring of the clique complex of (K_n^d)^c.
BettiTable knd_complement_betti(int n, int d);

/// Multiplicity-corrected counts of sub-configurations made of disjoint lines
/// of the given lengths inside a line (resp. cycle) of length n.
std::int64_t count_line_subconfigs(const std::vector<int>& lengths, int n);
std::int64_t count_cycle_subconfigs(const std::vector<int>& lengths, int n);

/// Brute-force versions: enumerate edge subsets of the family hypergraph whose
/// vertex-sharing components are lines with exactly the given lengths.
std::int64_t count_line_subconfigs_brute(const std::vector<int>& lengths, int n);
std::int64_t count_cycle_subconfigs_brute(const std::vector<int>& lengths, int n);

/// Smallest |V| such that H̃_{d-2} of the clique complex restricted to X∖V
/// is nonzero; nullopt when no such V exists. h must be d-uniform with at
/// least one edge.
std::optional<int> connectivity(const Hypergraph& h, const FieldSpec& field);

struct ResolutionStats {
  int pd = 0;
  int depth = 0;
  /// max{i ≥ 1 : β_{i,i+d-1} ≠ 0}, 0 when there is none.
  int linear_strand_length = 0;
  bool has_linear_resolution = false;
  int regularity = 0;
};

/// Requires the quotient convention and a nonempty table.
ResolutionStats resolution_stats(const BettiTable& t, int d);

struct ConnDepthReport {
  int n = 0;
  int d = 0;
  std::optional<int> connectivity;
  ResolutionStats stats;
  /// Minimal r ≥ 0 with β_{n-g-r, n-g-r+d-1} ≠ 0, g the depth.
  std::optional<int> r;
  /// pd minus the linear strand length.
  std::optional<int> r_from_strand;
  /// con = g - d + r + 1; unset when con is infinite.
  std::optional<bool> formula_holds;
  bool not_homologically_connected = false;
  /// pd = n-d+1, depth = d-1 and maximal linear strand.
  bool homconn_conditions = false;
  bool homconn_equivalence_holds = false;
};

/// Compares the connectivity scan with the Betti-table prediction for the
/// clique complex of h. Every vertex of h must lie in X(h).
ConnDepthReport check_conn_depth_theorem(const Hypergraph& h, const FieldSpec& field,
                                         const HochsterOptions& options = {});

struct CohenMacaulayReport {
  bool cohen_macaulay = true;
  /// First (homology degree, V) with H̃_i(Δ_V) ≠ 0 and |V| = n - e + i + 2.
  std::optional<std::pair<int, Mask>> violation;
};

/// Restriction-homology test for the Cohen-Macaulay property of k[Δ], with n
/// the size of the vertex set of c and e = dim c + 1.
CohenMacaulayReport froberg_cm_check(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace hgalg

#endif  // HGALG_BETTI_HPP
