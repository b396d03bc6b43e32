// hgalg: command-line front end. Canonical output goes to stdout, timings and
// errors to stderr.
//
// Exit codes: 0 success, 1 property absent or precondition failed,
// 2 usage error, 3 size budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hgalg/betti.hpp"
#include "hgalg/cache.hpp"
#include "hgalg/chordal.hpp"
#include "hgalg/complex.hpp"
#include "hgalg/errors.hpp"
#include "hgalg/ideal.hpp"
#include "hgalg/json_io.hpp"
#include "hgalg/verify.hpp"

using namespace hgalg;

namespace {

constexpr int kExitAbsent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;

struct CommonFlags {
  std::string field = "q";
  unsigned threads = 0;
  int max_vertices = 20;
  std::int64_t face_budget = std::int64_t{1} << 22;
  std::size_t max_items = 12;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
};

class Stopwatch {
 public:
  explicit Stopwatch(std::string label) : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  void report(const std::string& note = "") const {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << label_ << ": " << s << " s" << (note.empty() ? "" : " (" + note + ")") << '\n';
  }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Json& j) { std::cout << canonical_dump(j) << '\n'; }

HochsterOptions hochster_options(const CommonFlags& f) { return HochsterOptions{f.max_vertices, f.threads, f.face_budget}; }

// ---------------------------------------------------------------- gen

struct GenFlags {
  std::string family;
  int n = 0;
  int d = 0;
  int alpha = 1;
  std::string parts;
};

int cmd_gen(const GenFlags& g) {
  FamilySpec spec;
  spec.kind = family_kind_from_string(g.family);
  spec.n = g.n;
  spec.d = g.d;
  spec.alpha = g.alpha;
  if (spec.kind == FamilyKind::multipartite) {
    if (g.parts.empty()) throw InvalidArgument("--family multipartite needs --parts");
    std::stringstream ss(g.parts);
    std::string p;
    while (std::getline(ss, p, ',')) {
      try {
        spec.parts.push_back(std::stoi(p));
      } catch (const std::exception&) {
        throw InvalidArgument("--parts: bad entry '" + p + "'");
      }
    }
  }
  emit(to_json(make_family(spec), spec));
  return 0;
}

// ---------------------------------------------------------------- betti

struct BettiFlags {
  std::string input = "-";
  std::string complex = "independence";
  std::string method = "hochster";
  std::string format = "json";
};

BettiTable closed_form_table(const HypergraphDocument& doc) {
  if (!doc.family) throw PreconditionFailed("--method closed-form needs a family tag in the input");
  const FamilySpec& s = *doc.family;
  if (canonical_dump(to_json(make_family(s))) != canonical_dump(to_json(doc.hypergraph))) {
    throw PreconditionFailed("the family tag does not describe the edges of the input");
  }
  switch (s.kind) {
    case FamilyKind::line:
      return s.d == 2 * s.alpha ? line_betti_degenerate(s.n, s.alpha) : line_betti_closed_form(s.n, s.d, s.alpha);
    case FamilyKind::cycle:
      return s.d == 2 * s.alpha ? cycle_betti_degenerate(s.n, s.alpha) : cycle_betti_closed_form(s.n, s.d, s.alpha);
    case FamilyKind::star_overlap:
      return star_betti_closed_form(s.n, s.d, s.alpha);
    case FamilyKind::complete:
      return knd_complement_betti(s.n, s.d);
    case FamilyKind::multipartite:
      break;
  }
  throw PreconditionFailed("no closed form for family " + to_string(s.kind));
}

BettiTable compute_betti(const Json& input, const BettiFlags& b, const CommonFlags& f) {
  const FieldSpec field = FieldSpec::parse(f.field);
  const auto options = hochster_options(f);
  switch (document_kind(input)) {
    case DocumentKind::hypergraph: {
      const auto doc = hypergraph_from_json(input);
      const Hypergraph& h = doc.hypergraph;
      if (b.method != "hochster" && b.complex != "independence") {
        throw PreconditionFailed("--method " + b.method + " computes R/I(H) and needs --complex independence");
      }
      if (b.method == "taylor") return taylor_betti_free_vertex(h);
      if (b.method == "closed-form") return closed_form_table(doc);
      if (b.complex == "independence") return hochster_betti(independence_complex(h), field, options);
      if (b.complex == "edge") return hochster_betti(edge_complex(h), field, options);
      const auto d = h.uniformity();
      if (!d) throw PreconditionFailed("--complex clique needs a uniform hypergraph with at least one edge");
      return hochster_betti(clique_complex(h, *d), field, options);
    }
    case DocumentKind::complex:
      if (b.method != "hochster") throw PreconditionFailed("complex input supports --method hochster only");
      return hochster_betti(complex_from_json(input), field, options);
    case DocumentKind::ideal:
      if (b.method != "hochster") throw PreconditionFailed("ideal input supports --method hochster only");
      return hochster_betti(ideal_from_json(input).stanley_reisner_complex(), field, options);
    case DocumentKind::sequence:
      break;
  }
  throw InvalidArgument("betti: expected a hypergraph, complex or ideal document");
}

int cmd_betti(const BettiFlags& b, const CommonFlags& f) {
  const Stopwatch clock("betti");
  const Json input = parse_json(read_input(b.input));
  // Normalize through the parser so equivalent inputs share a cache entry.
  Json canonical;
  switch (document_kind(input)) {
    case DocumentKind::hypergraph: {
      const auto doc = hypergraph_from_json(input);
      canonical = to_json(doc.hypergraph, doc.family);
      break;
    }
    case DocumentKind::complex: canonical = to_json(complex_from_json(input)); break;
    case DocumentKind::ideal: canonical = to_json(ideal_from_json(input)); break;
    case DocumentKind::sequence: throw InvalidArgument("betti: expected a hypergraph, complex or ideal document");
  }
  const std::string flags = "complex=" + b.complex + ";method=" + b.method + ";format=" + b.format +
                            ";field=" + FieldSpec::parse(f.field).name();
  const ResultCache cache(ResultCache::default_root(f.cache_dir));
  const std::string key = ResultCache::key(canonical_dump(canonical), "betti", flags);
  if (!f.no_cache) {
    if (const auto hit = cache.get(key)) {
      std::cout << *hit;
      clock.report("cache hit");
      return 0;
    }
  }
  const BettiTable t = compute_betti(canonical, b, f);
  const std::string payload = b.format == "csv" ? t.to_csv() : canonical_dump(to_json(t)) + "\n";
  if (!f.no_cache) cache.put(key, payload);
  std::cout << payload;
  clock.report(f.no_cache ? "cache off" : "cache miss");
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  std::vector<std::string> theorems;
  bool all = false;
  bool list = false;
  std::string grid;
  bool include_matches = false;
};

int cmd_verify(const VerifyFlags& v, const CommonFlags& f) {
  if (v.list) {
    for (const auto& id : theorem_ids()) std::cout << id << '\t' << theorem_description(id) << '\n';
    return 0;
  }
  std::vector<std::string> ids = v.all ? theorem_ids() : v.theorems;
  if (ids.empty()) throw InvalidArgument("verify: give --theorem, --all or --list");
  if (v.all && !v.grid.empty()) throw InvalidArgument("verify: --grid applies to a single theorem");
  for (const auto& id : ids) theorem_description(id);  // reject unknown ids before running anything

  VerifyOptions options;
  options.field = FieldSpec::parse(f.field);
  options.hochster = HochsterOptions{std::max(f.max_vertices, 24), f.threads, f.face_budget};
  const Grid grid = Grid::parse(v.grid);
  bool ok = true;
  Json reports = Json::array();
  for (const auto& id : ids) {
    const Stopwatch clock("verify " + id);
    const auto report = run_verification(id, grid, options);
    ok = ok && report.ok();
    reports.push_back(report.to_json(v.include_matches));
    clock.report(std::to_string(report.count(InstanceStatus::match)) + " match, " +
                 std::to_string(report.count(InstanceStatus::mismatch)) + " mismatch, " +
                 std::to_string(report.count(InstanceStatus::skipped)) + " skipped");
  }
  emit(reports.size() == 1 ? reports.front() : reports);
  return ok ? 0 : kExitAbsent;
}

// ---------------------------------------------------------------- shell

struct ShellFlags {
  std::string input = "-";
  int d = 1;
  std::string complex = "clique";
  std::string order;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string p;
  while (std::getline(ss, p, ',')) {
    try {
      out.push_back(std::stoi(p));
    } catch (const std::exception&) {
      throw InvalidArgument("bad integer '" + p + "' in '" + text + "'");
    }
  }
  return out;
}

SimplicialComplex complex_of(const Json& input, const std::string& which) {
  switch (document_kind(input)) {
    case DocumentKind::complex: return complex_from_json(input);
    case DocumentKind::hypergraph: {
      const Hypergraph h = hypergraph_from_json(input).hypergraph;
      if (which == "independence") return independence_complex(h);
      if (which == "edge") return edge_complex(h);
      const auto d = h.uniformity();
      if (!d) throw PreconditionFailed("--complex clique needs a uniform hypergraph with at least one edge");
      return clique_complex(h, *d);
    }
    default: throw InvalidArgument("expected a hypergraph or complex document");
  }
}

int cmd_shell(const ShellFlags& s, const CommonFlags& f) {
  const Json input = parse_json(read_input(s.input));
  const SearchOptions search{f.max_items};
  if (document_kind(input) == DocumentKind::ideal) {
    const MonomialIdeal ideal = ideal_from_json(input);
    std::optional<std::vector<int>> ordering;
    if (s.order.empty()) {
      ordering = search_d_quotients(ideal, s.d, search);
    } else {
      ordering = parse_int_list(s.order);
    }
    if (!ordering) {
      emit(Json{{"ok", false}, {"d", s.d}});
      return kExitAbsent;
    }
    const auto cert = verify_d_quotients(ideal, *ordering, s.d);
    emit(to_json(cert, ideal));
    return cert.ok ? 0 : kExitAbsent;
  }
  const SimplicialComplex c = complex_of(input, s.complex);
  std::optional<std::vector<Mask>> ordering;
  if (s.order.empty()) {
    ordering = search_d_shelling(c, s.d, search);
  } else {
    std::vector<Mask> facets;
    for (int k : parse_int_list(s.order)) {
      if (k < 0 || k >= static_cast<int>(c.facet_count())) throw InvalidArgument("--order: facet index out of range");
      facets.push_back(c.facets()[k]);
    }
    ordering = facets;
  }
  if (!ordering) {
    emit(Json{{"ok", false}, {"d", s.d}});
    return kExitAbsent;
  }
  const auto cert = verify_d_shelling(c, *ordering, s.d);
  emit(to_json(cert));
  return cert.ok ? 0 : kExitAbsent;
}

// ---------------------------------------------------------------- dual, export

int cmd_dual(const std::string& path) {
  const Json input = parse_json(read_input(path));
  switch (document_kind(input)) {
    case DocumentKind::complex: emit(to_json(alexander_dual(complex_from_json(input)))); return 0;
    case DocumentKind::ideal: {
      const MonomialIdeal ideal = ideal_from_json(input);
      const SimplicialComplex dual = alexander_dual(ideal.stanley_reisner_complex());
      std::vector<Mask> gens = dual.minimal_nonfaces();
      sort_lex(gens);
      emit(to_json(MonomialIdeal(ideal.n_vertices(), gens)));
      return 0;
    }
    default: throw InvalidArgument("dual: expected a complex or ideal document");
  }
}

int cmd_export(const std::string& path) {
  const Json input = parse_json(read_input(path));
  switch (document_kind(input)) {
    case DocumentKind::ideal: std::cout << to_variable_products(ideal_from_json(input)); return 0;
    case DocumentKind::hypergraph:
      std::cout << to_variable_products(edge_ideal(hypergraph_from_json(input).hypergraph));
      return 0;
    default: throw InvalidArgument("export: expected an ideal or hypergraph document");
  }
}

// ---------------------------------------------------------------- chordal

int cmd_chordal(const std::string& path, std::size_t budget) {
  const Json input = parse_json(read_input(path));
  if (document_kind(input) == DocumentKind::sequence) {
    emit(to_json(build_chordal(sequence_from_json(input)).hypergraph));
    return 0;
  }
  if (document_kind(input) != DocumentKind::hypergraph) {
    throw InvalidArgument("chordal: expected an attachment sequence or a hypergraph");
  }
  const Hypergraph h = hypergraph_from_json(input).hypergraph;
  const auto d = h.uniformity();
  if (d == 2) {
    const auto r = chordal_graph_recognize(h);
    Json out{{"chordal", r.chordal}, {"d", 2}};
    if (r.chordal) out["elimination_order"] = r.elimination_order;
    if (!r.chordal) out["chordless_cycle"] = r.chordless_cycle;
    emit(out);
    return r.chordal ? 0 : kExitAbsent;
  }
  if (!d) throw PreconditionFailed("chordal: input must be uniform with at least one edge");
  const auto r = chordal_hypergraph_test(h, budget);
  const char* status = r.status == ChordalStatus::chordal       ? "chordal"
                       : r.status == ChordalStatus::not_chordal ? "not_chordal"
                                                                : "inconclusive";
  Json out{{"status", status}, {"chordal", r.status == ChordalStatus::chordal}, {"d", *d}};
  if (r.status == ChordalStatus::chordal) out["elimination_order"] = r.elimination_order;
  emit(out);
  if (r.status == ChordalStatus::inconclusive) return kExitSize;
  return r.status == ChordalStatus::chordal ? 0 : kExitAbsent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers, connectivity, shellability and chordality of hypergraph edge ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonFlags common;
  app.add_option("--cache-dir", common.cache_dir, "result cache directory (default: $HGALG_CACHE_DIR)");
  app.add_flag("--no-cache", common.no_cache, "bypass the result cache");

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", common.field, "q, gf2, gf3 or gfP:<p>")->capture_default_str();
  };
  auto add_hochster = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads, "worker threads (0: machine parallelism)")->capture_default_str();
    sub->add_option("--max-vertices", common.max_vertices, "vertex bound for Hochster's formula")->capture_default_str();
    sub->add_option("--face-budget", common.face_budget, "face budget per restriction")->capture_default_str();
  };

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a named hypergraph family");
  gen_cmd->add_option("--family", gen.family, "line, cycle, complete, multipartite or star")
      ->required()
      ->check(CLI::IsMember({"line", "cycle", "complete", "multipartite", "star"}));
  gen_cmd->add_option("--n", gen.n, "number of edges (complete: number of vertices)");
  gen_cmd->add_option("--d", gen.d, "edge size")->required();
  gen_cmd->add_option("--alpha", gen.alpha, "overlap size")->capture_default_str();
  gen_cmd->add_option("--parts", gen.parts, "comma-separated part sizes for multipartite");

  BettiFlags betti;
  auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of a Stanley-Reisner ring");
  betti_cmd->add_option("input", betti.input, "JSON file, or - for standard input")->capture_default_str();
  betti_cmd->add_option("--complex", betti.complex, "complex of a hypergraph input")
      ->check(CLI::IsMember({"independence", "clique", "edge"}))
      ->capture_default_str();
  betti_cmd->add_option("--method", betti.method)
      ->check(CLI::IsMember({"hochster", "taylor", "closed-form"}))
      ->capture_default_str();
  betti_cmd->add_option("--format", betti.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  add_field(betti_cmd);
  add_hochster(betti_cmd);

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a theorem against the Hochster oracle over a grid");
  verify_cmd->add_option("--theorem", verify.theorems, "theorem id (repeatable)");
  verify_cmd->add_flag("--all", verify.all, "every theorem with its default grid");
  verify_cmd->add_flag("--list", verify.list, "list theorem ids");
  verify_cmd->add_option("--grid", verify.grid, "e.g. \"n=3..6,alpha=1/2\" or small-world");
  verify_cmd->add_flag("--include-matches", verify.include_matches, "list matching instances too");
  add_field(verify_cmd);
  add_hochster(verify_cmd);

  ShellFlags shell;
  auto* shell_cmd = app.add_subcommand("shell", "d-shelling of a complex or d-quotients of an ideal");
  shell_cmd->add_option("input", shell.input)->capture_default_str();
  shell_cmd->add_option("--d", shell.d)->capture_default_str();
  shell_cmd->add_option("--complex", shell.complex, "complex of a hypergraph input")
      ->check(CLI::IsMember({"independence", "clique", "edge"}))
      ->capture_default_str();
  shell_cmd->add_option("--order", shell.order, "check this comma-separated order instead of searching");
  shell_cmd->add_option("--max-items", common.max_items, "search size bound")->capture_default_str();

  std::string dual_input = "-";
  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual of a complex or ideal");
  dual_cmd->add_option("input", dual_input)->capture_default_str();

  std::string chordal_input = "-";
  std::size_t chordal_budget = std::size_t{1} << 20;
  auto* chordal_cmd =
      app.add_subcommand("chordal", "build from an attachment sequence, or test a hypergraph for chordality");
  chordal_cmd->add_option("input", chordal_input)->capture_default_str();
  chordal_cmd->add_option("--budget", chordal_budget, "search states for d >= 3")->capture_default_str();

  std::string export_input = "-";
  auto* export_cmd = app.add_subcommand("export", "generators as variable products, one per line");
  export_cmd->add_option("input", export_input)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*betti_cmd) return cmd_betti(betti, common);
    if (*verify_cmd) return cmd_verify(verify, common);
    if (*shell_cmd) return cmd_shell(shell, common);
    if (*dual_cmd) return cmd_dual(dual_input);
    if (*chordal_cmd) return cmd_chordal(chordal_input, chordal_budget);
    if (*export_cmd) return cmd_export(export_input);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kExitSize;
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitAbsent;
  }
  return kExitUsage;
}
