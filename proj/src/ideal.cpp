#include "hgalg/ideal.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hgalg/errors.hpp"

namespace hgalg {

MonomialIdeal::MonomialIdeal(int n_vertices, std::vector<Mask> generators)
    : n_(n_vertices), generators_(std::move(generators)) {
  if (n_ < 0 || n_ > kMaxVertices) throw InvalidArgument("ideal: vertex count out of range");
  for (Mask g : generators_) {
    if (!is_subset(g, full_mask(n_))) throw InvalidArgument("ideal: generator uses a variable outside the ring");
  }
}

bool MonomialIdeal::is_minimal() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = 0; b < generators_.size(); ++b) {
      if (a != b && is_subset(generators_[a], generators_[b])) return false;
    }
  }
  return true;
}

std::optional<int> MonomialIdeal::generator_degree() const {
  if (generators_.empty()) return std::nullopt;
  const int d = popcount(generators_.front());
  for (Mask g : generators_) {
    if (popcount(g) != d) return std::nullopt;
  }
  return d;
}

MonomialIdeal MonomialIdeal::minimalized() const {
  std::vector<Mask> gens = minimal_sets(generators_);
  sort_lex(gens);
  return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::prefix(std::size_t count) const {
  if (count > generators_.size()) throw InvalidArgument("ideal: prefix longer than the generator list");
  return MonomialIdeal(n_, std::vector<Mask>(generators_.begin(), generators_.begin() + static_cast<long>(count)));
}

namespace {

void check_permutation(const std::vector<int>& ordering, std::size_t size) {
  if (ordering.size() != size) throw InvalidArgument("ordering has the wrong length");
  std::vector<char> seen(size, 0);
  for (int i : ordering) {
    if (i < 0 || static_cast<std::size_t>(i) >= size || seen[i]) throw InvalidArgument("ordering is not a permutation");
    seen[i] = 1;
  }
}

void require_minimal(const MonomialIdeal& ideal) {
  if (!ideal.is_minimal()) throw InvalidArgument("ideal must be given by its minimal generators");
}

}  // namespace

MonomialIdeal MonomialIdeal::reordered(const std::vector<int>& ordering) const {
  check_permutation(ordering, generators_.size());
  std::vector<Mask> gens;
  gens.reserve(ordering.size());
  for (int i : ordering) gens.push_back(generators_[i]);
  return MonomialIdeal(n_, std::move(gens));
}

SimplicialComplex MonomialIdeal::stanley_reisner_complex() const {
  return SimplicialComplex::from_minimal_nonfaces(n_, generators_);
}

MonomialIdeal edge_ideal(const Hypergraph& h) { return MonomialIdeal(h.n_vertices(), h.edges()); }

MonomialIdeal colon_by_generator(const MonomialIdeal& prefix, Mask m) {
  std::vector<Mask> diffs;
  diffs.reserve(prefix.size());
  for (Mask g : prefix.generators()) diffs.push_back(g & ~m);
  diffs = minimal_sets(std::move(diffs));
  sort_lex(diffs);
  return MonomialIdeal(prefix.n_vertices(), std::move(diffs));
}

std::string to_variable_products(const MonomialIdeal& ideal) {
  std::ostringstream os;
  for (Mask g : ideal.generators()) {
    if (g == 0) {
      os << "1\n";
      continue;
    }
    bool first = true;
    for_each_vertex(g, [&](int v) {
      if (!first) os << '*';
      os << 'x' << v + 1;
      first = false;
    });
    os << '\n';
  }
  return os.str();
}

QuotientCertificate verify_d_quotients(const MonomialIdeal& ideal, const std::vector<int>& ordering, int d) {
  require_minimal(ideal);
  check_permutation(ordering, ideal.size());
  QuotientCertificate cert;
  cert.d = d;
  cert.ordering = ordering;
  const MonomialIdeal ordered = ideal.reordered(ordering);
  cert.colons.emplace_back();
  for (std::size_t s = 1; s < ordered.size(); ++s) {
    const MonomialIdeal colon = colon_by_generator(ordered.prefix(s), ordered.generators()[s]);
    cert.colons.push_back(colon.generators());
    if (!cert.failed_step) {
      for (Mask g : colon.generators()) {
        if (popcount(g) != d) {
          cert.failed_step = s;
          break;
        }
      }
    }
  }
  cert.ok = !cert.failed_step;
  return cert;
}

namespace {

constexpr std::size_t kMaxSearchItems = 256;
using Placed = std::bitset<kMaxSearchItems>;

// Orders items 0..t-1 (tried in the order given by `priority`) so that
// step_ok(placed, next) holds at every step. can_precede[a][b] must be a
// necessary condition for a to come before b.
std::optional<std::vector<int>> ordered_search(int t, const std::vector<int>& priority,
                                               const std::function<bool(const std::vector<int>&, int)>& step_ok,
                                               const std::vector<std::vector<char>>& can_precede) {
  for (int a = 0; a < t; ++a) {
    for (int b = a + 1; b < t; ++b) {
      if (!can_precede[a][b] && !can_precede[b][a]) return std::nullopt;
    }
  }
  // blockers[b]: the items that b may not precede
  std::vector<std::vector<int>> blockers(t);
  for (int b = 0; b < t; ++b)
    for (int a = 0; a < t; ++a)
      if (a != b && !can_precede[b][a]) blockers[b].push_back(a);

  std::unordered_set<Placed> dead;
  std::vector<int> order;
  Placed placed;
  std::function<bool()> rec = [&]() {
    if (static_cast<int>(order.size()) == t) return true;
    for (int b : priority) {
      if (placed[b]) continue;
      const bool precedes_rest =
          std::all_of(blockers[b].begin(), blockers[b].end(), [&](int a) { return placed[a]; });
      if (!precedes_rest) continue;
      placed.set(b);
      if (dead.count(placed) || !step_ok(order, b)) {
        placed.reset(b);
        continue;
      }
      order.push_back(b);
      if (rec()) return true;
      order.pop_back();
      dead.insert(placed);
      placed.reset(b);
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return order;
}

void check_search_size(std::size_t t, const SearchOptions& options) {
  const std::size_t bound = std::min(options.max_items, kMaxSearchItems);
  if (t > bound) {
    throw SizeLimitExceeded("search: " + std::to_string(t) + " items exceeds the bound of " + std::to_string(bound));
  }
}

std::vector<int> lex_priority(const std::vector<Mask>& items) {
  std::vector<int> idx(items.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return lex_less(items[a], items[b]); });
  return idx;
}

// a may precede b only if some other item k has |X_k ∖ X_b| = d and
// X_k ∖ X_b ⊆ X_a ∖ X_b.
std::vector<std::vector<char>> precedence_table(const std::vector<Mask>& items, int d) {
  const std::size_t t = items.size();
  std::vector<std::vector<char>> can(t, std::vector<char>(t, 0));
  for (std::size_t b = 0; b < t; ++b) {
    std::vector<Mask> small;
    for (std::size_t k = 0; k < t; ++k) {
      if (k == b) continue;
      const Mask diff = items[k] & ~items[b];
      if (popcount(diff) == d) small.push_back(diff);
    }
    for (std::size_t a = 0; a < t; ++a) {
      if (a == b) continue;
      const Mask diff = items[a] & ~items[b];
      can[a][b] = std::any_of(small.begin(), small.end(), [diff](Mask s) { return is_subset(s, diff); });
    }
  }
  return can;
}

}  // namespace

std::optional<std::vector<int>> search_d_quotients(const MonomialIdeal& ideal, int d, const SearchOptions& options) {
  require_minimal(ideal);
  const auto& gens = ideal.generators();
  check_search_size(gens.size(), options);
  const int t = static_cast<int>(gens.size());
  auto step_ok = [&](const std::vector<int>& placed, int b) {
    std::vector<Mask> diffs;
    for (int a : placed) diffs.push_back(gens[a] & ~gens[b]);
    for (Mask g : minimal_sets(std::move(diffs))) {
      if (popcount(g) != d) return false;
    }
    return true;
  };
  return ordered_search(t, lex_priority(gens), step_ok, precedence_table(gens, d));
}

ShellingCertificate verify_d_shelling(const SimplicialComplex& c, const std::vector<Mask>& ordering, int d) {
  std::vector<Mask> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Mask> facets = c.facets();
  std::sort(facets.begin(), facets.end());
  if (sorted != facets) throw InvalidArgument("verify_d_shelling: ordering must list every facet exactly once");

  ShellingCertificate cert;
  cert.d = d;
  cert.ordering = ordering;
  cert.witnesses.emplace_back();
  std::optional<std::size_t> failed_by_intersection, failed_by_pairs;
  for (std::size_t j = 1; j < ordering.size(); ++j) {
    const Mask fj = ordering[j];
    std::vector<Mask> meets, removed;
    for (std::size_t i = 0; i < j; ++i) {
      meets.push_back(fj & ordering[i]);
      removed.push_back(fj & ~ordering[i]);
    }
    const int want = popcount(fj) - d;
    const auto top = maximal_sets(meets);
    if (!failed_by_intersection &&
        !std::all_of(top.begin(), top.end(), [want](Mask m) { return popcount(m) == want; })) {
      failed_by_intersection = j;
    }
    if (!failed_by_pairs) {
      for (std::size_t i = 0; i < j && !failed_by_pairs; ++i) {
        bool found = false;
        for (std::size_t k = 0; k < j && !found; ++k) {
          found = popcount(removed[k]) == d && is_subset(removed[k], removed[i]);
        }
        if (!found) failed_by_pairs = j;
      }
    }
    auto witness = minimal_sets(removed);
    sort_lex(witness);
    cert.witnesses.push_back(std::move(witness));
  }
  if (failed_by_intersection != failed_by_pairs) {
    throw std::logic_error("verify_d_shelling: intersection and pairwise criteria disagree");
  }
  cert.failed_step = failed_by_intersection;
  cert.ok = !cert.failed_step;
  return cert;
}

std::optional<std::vector<Mask>> search_d_shelling(const SimplicialComplex& c, int d, const SearchOptions& options) {
  std::vector<Mask> facets = c.facets();
  check_search_size(facets.size(), options);
  const int t = static_cast<int>(facets.size());
  auto step_ok = [&](const std::vector<int>& placed, int b) {
    std::vector<Mask> meets;
    for (int a : placed) meets.push_back(facets[a] & facets[b]);
    const int want = popcount(facets[b]) - d;
    for (Mask m : maximal_sets(std::move(meets))) {
      if (popcount(m) != want) return false;
    }
    return true;
  };
  // F_b ∖ F_k is the colon-side difference of the complements.
  std::vector<Mask> complements;
  for (Mask f : facets) complements.push_back(~f);
  const auto order = ordered_search(t, lex_priority(facets), step_ok, precedence_table(complements, d));
  if (!order) return std::nullopt;
  std::vector<Mask> out;
  out.reserve(order->size());
  for (int i : *order) out.push_back(facets[i]);
  return out;
}

DualBridge duality_bridge(const MonomialIdeal& ideal) {
  require_minimal(ideal);
  DualBridge bridge;
  const Mask ground = full_mask(ideal.n_vertices());
  for (Mask g : ideal.generators()) bridge.facets.push_back(ground & ~g);
  bridge.complex = SimplicialComplex::from_facets(ideal.n_vertices(), bridge.facets);
  return bridge;
}

std::vector<Mask> facets_in_order(const DualBridge& bridge, const std::vector<int>& ordering) {
  check_permutation(ordering, bridge.facets.size());
  std::vector<Mask> out;
  for (int i : ordering) out.push_back(bridge.facets[i]);
  return out;
}

std::vector<int> ordering_of_facets(const DualBridge& bridge, const std::vector<Mask>& facets) {
  std::vector<int> out;
  for (Mask f : facets) {
    const auto it = std::find(bridge.facets.begin(), bridge.facets.end(), f);
    if (it == bridge.facets.end()) throw InvalidArgument("facet does not belong to the dual complex");
    out.push_back(static_cast<int>(it - bridge.facets.begin()));
  }
  check_permutation(out, bridge.facets.size());
  return out;
}

SplittingReport betti_splitting_check(const MonomialIdeal& ideal, const std::vector<int>& ordering, int d_prime,
                                      const FieldSpec& field, const HochsterOptions& options) {
  require_minimal(ideal);
  if (ideal.is_zero()) throw PreconditionFailed("betti_splitting_check: zero ideal");
  if (ideal.generator_degree() != d_prime) {
    throw PreconditionFailed("betti_splitting_check: generators must all have degree " + std::to_string(d_prime));
  }
  const QuotientCertificate cert = verify_d_quotients(ideal, ordering, 0);
  std::set<int> sizes;
  for (const auto& colon : cert.colons) {
    for (Mask g : colon) sizes.insert(popcount(g));
  }
  if (sizes.size() > 1) throw PreconditionFailed("betti_splitting_check: ordering does not give d-quotients");

  SplittingReport rep;
  rep.d = sizes.empty() ? 0 : *sizes.begin();
  rep.d_prime = d_prime;
  const MonomialIdeal ordered = ideal.reordered(ordering);
  const int n = ideal.n_vertices();
  const std::size_t t = ordered.size();
  for (std::size_t s = 1; s <= t; ++s) {
    rep.prefix_tables.push_back(hochster_betti(ordered.prefix(s).stanley_reisner_complex(), field, options));
  }
  for (std::size_t s = 1; s < t; ++s) {
    const MonomialIdeal colon(n, cert.colons[s]);
    rep.colon_tables.push_back(hochster_betti(colon.stanley_reisner_complex(), field, options));
  }

  for (std::size_t s = 1; s < t; ++s) {
    const BettiTable& before = rep.prefix_tables[s - 1];
    const BettiTable& after = rep.prefix_tables[s];
    const BettiTable colon = rep.colon_tables[s - 1].shifted(d_prime);
    const std::string step = "step " + std::to_string(s + 1);
    for (int i = 2; i <= colon.max_degree(); ++i) {
      for (int j : colon.degrees_in_row(i)) {
        if (before.get(i, j) != 0) {
          rep.disjoint_degrees = false;
          rep.failures.push_back(step + ": common degree (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
    std::set<BettiTable::Key> keys;
    for (const auto& [k, v] : after.entries()) keys.insert(k);
    for (const auto& [k, v] : before.entries()) keys.insert(k);
    for (const auto& [k, v] : colon.entries()) keys.insert({k.first + 1, k.second});
    for (const auto& [i, j] : keys) {
      if (after.get(i, j) != before.get(i, j) + colon.get(i - 1, j)) {
        rep.graded_recursion = false;
        rep.failures.push_back(step + ": graded recursion fails at (" + std::to_string(i) + "," + std::to_string(j) +
                               ")");
      }
    }
  }
  const BettiTable& full = rep.quotient_table();
  for (int i = 2; i <= full.max_degree(); ++i) {
    std::int64_t sum = 0;
    for (const auto& c : rep.colon_tables) sum += c.total(i - 1);
    if (sum != full.total(i)) {
      rep.total_identity = false;
      rep.failures.push_back("total identity fails at i=" + std::to_string(i));
    }
  }
  return rep;
}

BettiTable rsequence_betti_closed_form(const std::vector<int>& colon_sizes, int d, int d_prime, int n_vertices) {
  if (d < 1 || d_prime < d) throw InvalidArgument("rsequence_betti_closed_form: need 1 <= d <= d'");
  BettiTable out(n_vertices);
  out.set(0, 0, 1);
  if (colon_sizes.empty()) return out;
  int top = 0;
  for (int r : colon_sizes) {
    if (r < 1) throw InvalidArgument("rsequence_betti_closed_form: colon sizes must be positive");
    top = std::max(top, r);
  }
  out.set(1, d_prime, static_cast<std::int64_t>(colon_sizes.size()) + 1);
  for (int i = 2; i <= top + 1; ++i) {
    std::int64_t sum = 0;
    for (int r : colon_sizes) sum += binomial(r, i - 1);
    out.add(i, i + d_prime - 1 + (i - 1) * (d - 1), sum);
  }
  return out;
}

BettiTable rsequence_betti_for_ideal(const MonomialIdeal& ideal, const std::vector<int>& ordering) {
  require_minimal(ideal);
  const auto d_prime = ideal.generator_degree();
  if (!d_prime) throw PreconditionFailed("rsequence: generators must share one degree");
  const QuotientCertificate cert = verify_d_quotients(ideal, ordering, 0);
  if (ideal.size() == 1) {
    BettiTable out(ideal.n_vertices());
    out.set(0, 0, 1);
    out.set(1, *d_prime, 1);
    return out;
  }
  std::optional<int> d;
  std::vector<int> sizes;
  for (std::size_t s = 1; s < cert.colons.size(); ++s) {
    const auto& colon = cert.colons[s];
    Mask seen = 0;
    for (Mask g : colon) {
      if (g & seen) throw PreconditionFailed("rsequence: colon generators at step " + std::to_string(s + 1) +
                                             " are not a regular sequence");
      seen |= g;
      if (!d) d = popcount(g);
      if (popcount(g) != *d) throw PreconditionFailed("rsequence: colon generators differ in degree");
    }
    sizes.push_back(static_cast<int>(colon.size()));
  }
  return rsequence_betti_closed_form(sizes, *d, *d_prime, ideal.n_vertices());
}

LinkSpotcheck link_shellability_spotcheck(const SimplicialComplex& c, const std::vector<Mask>& ordering, int d,
                                          std::size_t max_faces) {
  if (!verify_d_shelling(c, ordering, d).ok) throw PreconditionFailed("link spotcheck: ordering is not a d-shelling");
  LinkSpotcheck rep;
  std::set<Mask> faces;
  for (Mask f : ordering) {
    for_each_subset(f, [&](Mask s) {
      if (faces.size() < max_faces) {
        faces.insert(s);
      } else if (!faces.count(s)) {
        rep.truncated = true;
      }
    });
  }
  for (Mask face : faces) {
    std::vector<Mask> link_facets;
    for (Mask f : ordering) {
      if (is_subset(face, f)) link_facets.push_back(f & ~face);
    }
    const auto lk = SimplicialComplex::from_facets(c.n_vertices(), link_facets);
    ++rep.faces_checked;
    if (!verify_d_shelling(lk, link_facets, d).ok) {
      rep.failing_face = face;
      break;
    }
  }
  return rep;
}

}  // namespace hgalg
