#include "hgalg/json_io.hpp"

#include <algorithm>

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

Json vertex_list(Mask m) { return Json(vertices_of(m)); }

Json mask_lists(std::vector<Mask> sets, bool sort) {
  if (sort) sort_lex(sets);
  Json out = Json::array();
  for (Mask m : sets) out.push_back(vertex_list(m));
  return out;
}

// Reads a nonnegative vertex count bounded by the mask width.
int read_n(const Json& j) {
  const int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxVertices) throw InvalidArgument("n must lie in 0.." + std::to_string(kMaxVertices));
  return n;
}

Mask read_set(const Json& list, int n) {
  if (!list.is_array()) throw InvalidArgument("expected a list of vertices");
  Mask m = 0;
  for (const auto& v : list) {
    const int x = v.get<int>();
    if (x < 0 || x >= n) throw InvalidArgument("vertex " + std::to_string(x) + " out of range");
    if (m & bit(x)) throw InvalidArgument("vertex " + std::to_string(x) + " repeated");
    m |= bit(x);
  }
  return m;
}

std::vector<Mask> read_sets(const Json& lists, int n) {
  if (!lists.is_array()) throw InvalidArgument("expected a list of vertex lists");
  std::vector<Mask> out;
  for (const auto& l : lists) out.push_back(read_set(l, n));
  return out;
}

// Turns the library's JSON exceptions into InvalidArgument.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const FamilySpec& spec) {
  Json j{{"kind", to_string(spec.kind)}, {"n", spec.n}, {"d", spec.d}};
  if (spec.kind == FamilyKind::multipartite) {
    j["parts"] = spec.parts;
    j.erase("n");
  }
  if (spec.kind == FamilyKind::line || spec.kind == FamilyKind::cycle || spec.kind == FamilyKind::star_overlap) {
    j["alpha"] = spec.alpha;
  }
  return j;
}

FamilySpec family_from_json(const Json& j) {
  return guarded("family", [&] {
    FamilySpec spec;
    spec.kind = family_kind_from_string(j.at("kind").get<std::string>());
    spec.d = j.at("d").get<int>();
    if (j.contains("n")) spec.n = j.at("n").get<int>();
    if (j.contains("alpha")) spec.alpha = j.at("alpha").get<int>();
    if (j.contains("parts")) spec.parts = j.at("parts").get<std::vector<int>>();
    return spec;
  });
}

Json to_json(const Hypergraph& h, const std::optional<FamilySpec>& family) {
  Json j{{"n", h.n_vertices()}, {"edges", mask_lists(h.edges(), true)}};
  if (h.vertex_set() != full_mask(h.n_vertices())) j["vertices"] = vertex_list(h.vertex_set());
  if (family) j["family"] = to_json(*family);
  return j;
}

HypergraphDocument hypergraph_from_json(const Json& j) {
  return guarded("hypergraph", [&] {
    const int n = read_n(j);
    const auto edges = read_sets(j.at("edges"), n);
    const Mask x = j.contains("vertices") ? read_set(j.at("vertices"), n) : full_mask(n);
    HypergraphDocument doc{Hypergraph(n, x, edges), std::nullopt};
    if (j.contains("family")) doc.family = family_from_json(j.at("family"));
    return doc;
  });
}

Json to_json(const SimplicialComplex& c) {
  return Json{{"n", c.n_vertices()}, {"facets", mask_lists(c.facets(), true)}, {"void", c.is_void()}};
}

SimplicialComplex complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    const int n = read_n(j);
    const auto facets = read_sets(j.at("facets"), n);
    const bool is_void = j.value("void", facets.empty());
    if (is_void != facets.empty()) throw InvalidArgument("complex: \"void\" disagrees with the facet list");
    return is_void ? SimplicialComplex::void_complex(n) : SimplicialComplex::from_facets(n, facets);
  });
}

Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, beta] : t.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
  return Json{{"convention", to_string(t.convention())}, {"n", t.n_vertices()}, {"entries", entries}};
}

BettiTable betti_table_from_json(const Json& j) {
  return guarded("betti table", [&] {
    const std::string conv = j.at("convention").get<std::string>();
    if (conv != "quotient" && conv != "ideal") throw InvalidArgument("betti table: unknown convention " + conv);
    BettiTable t(j.at("n").get<int>(), conv == "quotient" ? BettiConvention::quotient : BettiConvention::ideal);
    for (const auto& e : j.at("entries")) t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<std::int64_t>());
    return t;
  });
}

Json to_json(const MonomialIdeal& ideal) {
  return Json{{"n", ideal.n_vertices()}, {"generators", mask_lists(ideal.generators(), false)}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  return guarded("ideal", [&] {
    const int n = read_n(j);
    return MonomialIdeal(n, read_sets(j.at("generators"), n));
  });
}

Json to_json(const AttachmentSequence& seq) {
  Json steps = Json::array();
  for (const auto& s : seq.steps) {
    Json step{{"i", s.i}, {"j", s.j}};
    step["glue"] = s.glue ? Json(*s.glue) : Json("auto");
    steps.push_back(step);
  }
  return Json{{"d", seq.d}, {"steps", steps}};
}

AttachmentSequence sequence_from_json(const Json& j) {
  return guarded("attachment sequence", [&] {
    AttachmentSequence seq;
    seq.d = j.at("d").get<int>();
    for (const auto& s : j.at("steps")) {
      AttachmentStep step{s.at("i").get<int>(), s.at("j").get<int>(), std::nullopt};
      if (s.contains("glue") && !(s.at("glue").is_string() && s.at("glue").get<std::string>() == "auto")) {
        step.glue = s.at("glue").get<std::vector<int>>();
      }
      seq.steps.push_back(std::move(step));
    }
    return seq;
  });
}

Json to_json(const QuotientCertificate& cert, const MonomialIdeal& ideal) {
  Json ordered = Json::array();
  for (int k : cert.ordering) ordered.push_back(vertex_list(ideal.generators().at(k)));
  Json colons = Json::array();
  for (const auto& c : cert.colons) colons.push_back(mask_lists(c, false));
  Json j{{"ok", cert.ok}, {"d", cert.d}, {"ordering", cert.ordering}, {"generators", ordered}, {"colons", colons}};
  j["failed_step"] = cert.failed_step ? Json(*cert.failed_step) : Json(nullptr);
  return j;
}

Json to_json(const ShellingCertificate& cert) {
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(mask_lists(w, false));
  Json j{{"ok", cert.ok}, {"d", cert.d}, {"ordering", mask_lists(cert.ordering, false)}, {"witnesses", witnesses}};
  j["failed_step"] = cert.failed_step ? Json(*cert.failed_step) : Json(nullptr);
  return j;
}

DocumentKind document_kind(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  if (j.contains("edges")) return DocumentKind::hypergraph;
  if (j.contains("facets")) return DocumentKind::complex;
  if (j.contains("generators")) return DocumentKind::ideal;
  if (j.contains("steps")) return DocumentKind::sequence;
  throw InvalidArgument("unrecognized document: expected edges, facets, generators or steps");
}

std::string canonical_dump(const Json& j) { return j.dump(); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace hgalg
