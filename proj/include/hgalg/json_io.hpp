#ifndef HGALG_JSON_IO_HPP
#define HGALG_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "hgalg/betti.hpp"
#include "hgalg/chordal.hpp"
#include "hgalg/complex.hpp"
#include "hgalg/hypergraph.hpp"
#include "hgalg/ideal.hpp"

namespace hgalg {

using Json = nlohmann::json;

/// A hypergraph together with the family it was generated from, if any.
struct HypergraphDocument {
  Hypergraph hypergraph;
  std::optional<FamilySpec> family;
};

/// {"n", "edges"} plus "vertices" when X(H) is not {0..n-1} and "family"
/// when known. Edges are listed lexicographically.
Json to_json(const Hypergraph& h, const std::optional<FamilySpec>& family = std::nullopt);
HypergraphDocument hypergraph_from_json(const Json& j);

/// {"n", "facets", "void"}; facets listed lexicographically.
Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

/// {"convention", "n", "entries": [{"i", "j", "beta"}]} sorted by (i, j).
Json to_json(const BettiTable& t);
BettiTable betti_table_from_json(const Json& j);

/// {"n", "generators"} in generator order.
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

/// {"d", "steps": [{"i", "j", "glue"}]}; a missing or "auto" glue is chosen
/// by the builder.
Json to_json(const AttachmentSequence& seq);
AttachmentSequence sequence_from_json(const Json& j);

Json to_json(const QuotientCertificate& cert, const MonomialIdeal& ideal);
Json to_json(const ShellingCertificate& cert);

Json to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j);

/// Kind of object stored in a document, judged by its keys.
enum class DocumentKind { hypergraph, complex, ideal, sequence };
DocumentKind document_kind(const Json& j);

/// Canonical text: sorted keys, no whitespace, trailing newline omitted.
std::string canonical_dump(const Json& j);

/// Parses text; malformed JSON becomes InvalidArgument.
Json parse_json(const std::string& text);

}  // namespace hgalg

#endif  // HGALG_JSON_IO_HPP
