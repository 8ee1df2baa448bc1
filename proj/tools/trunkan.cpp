// trunkan: command-line front end.
// Exit codes: 0 success, 1 semantic failure, 2 input error.

#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "trunkan/error.hpp"
#include "trunkan/gpd.hpp"
#include "trunkan/homspaces.hpp"
#include "trunkan/io.hpp"
#include "trunkan/kan.hpp"
#include "trunkan/testkit.hpp"
#include "trunkan/yoneda2.hpp"

using namespace trunkan;
using io::json;
namespace tk = trunkan::testkit;

namespace {

constexpr const char* kSchema = "trunkan.report/1";

struct Report {
  std::string command;
  std::vector<std::string> args;
  std::vector<std::string> lines;
  json results = json::object();
  json witnesses = json::array();
  std::string verdict = "ok";
  int exit = 0;
  std::optional<json> output;  // gen: the generated document

  void say(const std::string& s) { lines.push_back(s); }
  void fail(const std::string& v) {
    verdict = v;
    exit = 1;
  }
};

// Input problems exit 2, everything else the operation rejects exits 1.
int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::BoundsExceeded:
    case ErrorKind::IdentityViolation:
    case ErrorKind::MissingMap:
      return 2;
    default:
      return 1;
  }
}

SSet load_sset(const std::string& path) { return io::sset_from_json(io::read_file(path)); }

int object_id(const TruncatedSSet& X, const std::string& id) {
  const int a = X.find(0, id);
  if (a < 0) throw Error(ErrorKind::InvalidArgument, "no object \"" + id + "\"");
  return a;
}

json horn_json(const TruncatedSSet& X, const Horn& h) {
  json faces = json::array();
  for (int f : h.faces) faces.push_back(X.name(h.m - 1, f));
  return {{"m", h.m}, {"i", h.i}, {"faces", faces}};
}

// ---- commands ----

void cmd_check(Report& R, const std::string& file, const std::string& level, std::optional<int> n) {
  SSet X = load_sset(file);
  if (n && *n != X->n())
    throw Error(ErrorKind::DimensionMismatch, "file has n = " + std::to_string(X->n()) + ", expected " + std::to_string(*n));
  const auto rep = level == "category" ? check_n_category(*X) : check_n_groupoid(*X);
  R.results["level"] = level;
  R.results["n"] = X->n();
  R.results["sizes"] = json::array();
  for (int k = 0; k <= X->top(); ++k) R.results["sizes"].push_back(X->size(k));
  R.results["failures"] = static_cast<int>(rep.failures.size());
  if (rep.ok) {
    R.say(std::to_string(X->n()) + "-" + level + ": axioms hold");
    return;
  }
  R.say(std::to_string(X->n()) + "-" + level + ": " + std::to_string(rep.failures.size()) + " failing horn families");
  for (const auto& f : rep.failures) {
    R.say("  " + f.describe(*X));
    R.witnesses.push_back({{"axiom", f.axiom}, {"m", f.m}, {"i", f.i}, {"fillers", f.fillers},
                           {"horn", horn_json(*X, f.witness)}});
  }
  R.fail("axioms fail");
}

void cmd_pi(Report& R, const std::string& file, int k, const std::string& base) {
  SSet X = load_sset(file);
  if (X->empty()) throw Error(ErrorKind::InvalidArgument, "empty simplicial set");
  if (k < 0 || k > X->n()) throw Error(ErrorKind::InvalidArgument, "k must lie in 0.." + std::to_string(X->n()));
  const int a = base.empty() ? 0 : object_id(*X, base);
  auto rep = check_n_groupoid(*X);
  if (!rep.ok) {
    R.say("not an n-groupoid: " + rep.failures[0].describe(*X));
    R.fail("prerequisite fails");
    return;
  }
  const auto T = pi_k(*X, a, k);
  R.results["k"] = k;
  R.results["base"] = X->name(0, a);
  R.results["classes"] = static_cast<int>(T.classes.size());
  json blocks = json::array();
  for (const auto& c : T.classes) {
    json b = json::array();
    for (int x : c) b.push_back(X->name(k, x));
    blocks.push_back(b);
  }
  R.results["blocks"] = blocks;
  R.say(std::to_string(T.classes.size()) + " classes");
}

void cmd_weq(Report& R, const std::string& file) {
  SimplicialMap f = io::map_from_json(io::read_file(file));
  const WeqVerdict v = is_weak_equivalence(f);
  const int yes = v.criterion_pi + v.criterion_explicit + v.criterion_classes;
  R.results["weq"] = v.weq;
  R.results["criteria"] = {{"pi", v.criterion_pi}, {"explicit", v.criterion_explicit}, {"classes", v.criterion_classes}};
  R.results["agree"] = v.agree;
  std::string line = std::string("weak equivalence: ") + (v.weq ? "yes" : "no");
  line += v.agree ? " (3/3 criteria agree)" : " (" + std::to_string(yes) + "/3 criteria say yes)";
  R.say(line);
  if (!v.weq) {
    R.say("  " + v.diagnostic);
    R.witnesses.push_back({{"k", v.fail_k}, {"object", v.fail_a >= 0 ? f.source->name(0, v.fail_a) : ""},
                           {"diagnostic", v.diagnostic}});
    R.fail("not a weak equivalence");
  }
  if (!v.agree) R.fail("criteria disagree");
}

void cmd_pushout(Report& R, const std::string& fg, const std::string& fh, const std::string& fk) {
  Gpd G = io::gpd_from_json(io::read_file(fg));
  Gpd H = io::gpd_from_json(io::read_file(fh));
  const json kj = io::read_file(fk);
  Gpd K = io::gpd_from_json(kj);
  if (!kj.contains("g") || !kj.contains("h"))
    throw Error(ErrorKind::ParseError, "the K file needs functors \"g\" (to G) and \"h\" (to H)");
  GroupoidMap g = io::functor_from_json(kj["g"], K, G);
  GroupoidMap h = io::functor_from_json(kj["h"], K, H);
  if (!is_fully_faithful(g)) {
    R.say("g is not fully faithful");
    R.fail("precondition fails");
    return;
  }
  Pushout po = pushout(g, h);
  const FiniteGroupoid& P = *po.P;
  GroupoidMap med = check_pushout_universal(po, g, h, po.g_prime, po.h_prime, po.alpha);
  const bool id = med.on_morphisms == identity_functor(po.P).on_morphisms;
  R.results["objects"] = P.num_objects();
  R.results["morphisms"] = P.num_morphisms();
  R.results["universal"] = id;
  R.results["pushout"] = io::to_json(P);
  R.say("pushout: " + std::to_string(P.num_objects()) + " objects, " + std::to_string(P.num_morphisms()) + " morphisms");
  R.say(std::string("universal property at the pushout itself: ") + (id ? "identity mediator" : "FAILED"));
  if (!id) R.fail("universal property fails");
}

void cmd_hom(Report& R, const std::string& file, const std::string& from, const std::string& to,
             const std::string& edge) {
  SSet X = load_sset(file);
  const int a = object_id(*X, from);
  auto rep = check_n_groupoid(*X);
  if (!rep.ok) {
    R.say("not an n-groupoid: " + rep.failures[0].describe(*X));
    R.fail("prerequisite fails");
    return;
  }
  auto counts = [](const Gpd& G) { return json{{"objects", G->num_objects()}, {"morphisms", G->num_morphisms()}}; };
  auto text = [](const Gpd& G) {
    return std::to_string(G->num_objects()) + " objects, " + std::to_string(G->num_morphisms()) + " morphisms";
  };
  if (!edge.empty()) {
    if (X->n() < 1) throw Error(ErrorKind::DimensionMismatch, "edges need n >= 1");
    const int f = X->find(1, edge);
    if (f < 0) throw Error(ErrorKind::InvalidArgument, "no edge \"" + edge + "\"");
    const SimplicialMap loop = edge_loop(X, inverse_witness(*X, f));
    Gpd E = hom_groupoid(hom_left_disc(X, a, loop, false));
    Gpd foot0 = hom_groupoid(hom_left_disc(X, a, restrict_disc(loop, {0}), false));
    Gpd foot1 = hom_groupoid(hom_left_disc(X, a, restrict_disc(loop, {1}), false));
    CoSpan C = hom_cospan(X, a, loop, foot0, foot1);
    const bool eq = is_equivalence(C.we_leg) && is_equivalence(C.other_leg);
    R.results["hom"] = counts(E);
    R.results["cospan_of_equivalences"] = eq;
    R.say("Hom(" + from + ", " + edge + "): " + text(E));
    R.say(std::string("co-span of equivalences: ") + (eq ? "yes" : "no"));
    if (!eq) R.fail("legs are not equivalences");
    return;
  }
  const int b = object_id(*X, to);
  Gpd L = hom_groupoid(hom_left(X, a, b, false));
  Gpd Rt = hom_groupoid(hom_right(X, a, b, false));
  R.results["left"] = counts(L);
  R.results["right"] = counts(Rt);
  R.say("Hom^L(" + from + ", " + to + "): " + text(L));
  R.say("Hom^R(" + from + ", " + to + "): " + text(Rt));
}

void cmd_yoneda(Report& R, const std::string& file, bool roundtrip) {
  SSet X = load_sset(file);
  if (X->n() != 2) throw Error(ErrorKind::DimensionMismatch, "yoneda needs n = 2");
  auto rep = check_n_groupoid(*X);
  if (!rep.ok) {
    R.say("not a 2-groupoid: " + rep.failures[0].describe(*X));
    R.fail("prerequisite fails");
    return;
  }
  YonedaContext ctx(X, false);
  int coherent = 0;
  for (int f = 0; f < ctx.edges(); ++f) {
    auto c = check_coherence(ctx, ctx.omega(f));
    if (c.ok) {
      ++coherent;
    } else {
      R.witnesses.push_back({{"edge", X->name(1, f)}, {"coherence", c.failure}});
    }
  }
  R.results["edges"] = ctx.edges();
  R.results["coherent"] = coherent;
  R.say("coherent: " + std::to_string(coherent) + "/" + std::to_string(ctx.edges()));
  if (coherent != ctx.edges()) R.fail("coherence fails");
  if (!roundtrip) return;
  int edges_ok = 0, edges_2cell = 0, cells_ok = 0;
  for (int f = 0; f < ctx.edges(); ++f) {
    auto rec = recover_morphism(ctx, ctx.omega(f), false);
    bool two_cell = false;
    for (int s = 0; s < X->size(2) && !two_cell; ++s)
      two_cell = X->face(2, 2, s) == f && X->face(2, 1, s) == rec.edge &&
                 X->face(2, 0, s) == X->constant(1, X->face(1, 0, f));
    edges_ok += rec.verified && rec.edge == f;
    edges_2cell += rec.verified && two_cell;
    if (rec.edge != f)
      R.witnesses.push_back({{"edge", X->name(1, f)}, {"recovered", X->name(1, rec.edge)}, {"two_cell", two_cell}});
  }
  for (int s = 0; s < X->size(2); ++s) {
    int got = -1;
    try {
      got = recover_2cell(ctx, omega_2cell(ctx, s), false);
    } catch (const Error&) {
    }
    cells_ok += got == s;
    if (got != s) R.witnesses.push_back({{"two_cell", X->name(2, s)}, {"recovered", got < 0 ? "" : X->name(2, got)}});
  }
  const int ne = ctx.edges(), nc = X->size(2);
  R.results["roundtrip"] = {{"edges_ok", edges_ok}, {"edges_up_to_2cells", edges_2cell}, {"two_cells_ok", cells_ok},
                            {"two_cells", nc}};
  R.say("edges: " + std::to_string(edges_ok) + "/" + std::to_string(ne) + " ok; 2-cells: " + std::to_string(cells_ok) +
        "/" + std::to_string(nc) + " ok");
  if (edges_ok != ne)
    R.say("edges up to 2-cells: " + std::to_string(edges_2cell) + "/" + std::to_string(ne));
  if (edges_ok != ne || cells_ok != nc) R.fail("round-trip fails");
}

void cmd_gen(Report& R, const std::string& kind, std::uint64_t seed, int n, const std::string& h,
             const std::string& q, int index) {
  seed = tk::seed_from_env(seed);
  R.results["seed"] = seed;
  R.results["kind"] = kind;
  if (kind == "groupoid") {
    R.output = io::to_json(*tk::random_groupoid(seed));
  } else if (kind == "nerve") {
    R.output = io::to_json(*nerve(*tk::random_groupoid(seed), n));
  } else if (kind == "crossed-module") {
    auto cms = tk::crossed_modules({tk::group(h)}, {tk::group(q)});
    if (cms.empty()) throw Error(ErrorKind::InvalidArgument, "no crossed module " + h + " -> " + q);
    const auto& cm = cms[seed % cms.size()];
    R.results["name"] = cm.name();
    R.output = io::to_json(*tk::nerve_crossed_module(cm));
  } else if (kind == "suite") {
    const auto suite = tk::two_groupoids();
    if (index < 0 || index >= static_cast<int>(suite.size()))
      throw Error(ErrorKind::IndexOutOfRange, "suite index in 0.." + std::to_string(suite.size() - 1));
    R.results["name"] = suite[index].name;
    R.output = io::to_json(*suite[index].X);
  } else if (kind == "pushout") {
    auto inst = tk::random_pushout_instance(seed);
    json K = io::to_json(*inst.K);
    K["g"] = io::functor_to_json(inst.g);
    K["h"] = io::functor_to_json(inst.h);
    R.output = json{{"G", io::to_json(*inst.G)}, {"H", io::to_json(*inst.H)}, {"K", K}};
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown generator \"" + kind + "\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite truncated Kan complexes and n-groupoids"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, timing = false;
  app.add_flag("--json", as_json, "machine-readable report");
  app.add_flag("--timing", timing, "report wall time");

  std::string file, file2, file3, level = "groupoid", base, from, to, edge, kind, gh = "Z2", gq = "Z1";
  std::optional<int> n_opt;
  int k = 1, n = 2, index = 0;
  std::uint64_t seed = 1;
  bool roundtrip = false;

  auto* check = app.add_subcommand("check", "check the n-category or n-groupoid axioms");
  check->add_option("file", file, "simplicial set (JSON)")->required();
  check->add_option("--level", level)->check(CLI::IsMember({"category", "groupoid"}));
  check->add_option("--n", n_opt, "expected truncation level");

  auto* pi = app.add_subcommand("pi", "homotopy classes pi_k at a base object");
  pi->add_option("file", file)->required();
  pi->add_option("--k", k)->required();
  pi->add_option("--base", base, "object id (default: the first)");

  auto* weq = app.add_subcommand("weq", "is a simplicial map a weak equivalence");
  weq->add_option("file", file, "map (JSON)")->required();

  auto* po = app.add_subcommand("pushout", "pushout of groupoids along a fully faithful functor");
  po->add_option("G", file)->required();
  po->add_option("H", file2)->required();
  po->add_option("K", file3, "groupoid with functors g: K -> G, h: K -> H")->required();

  auto* hom = app.add_subcommand("hom", "Hom-groupoids between objects or along an edge");
  hom->add_option("file", file)->required();
  hom->add_option("--from", from)->required();
  auto* to_opt = hom->add_option("--to", to);
  auto* edge_opt = hom->add_option("--edge", edge);
  to_opt->excludes(edge_opt);

  auto* yon = app.add_subcommand("yoneda", "families over edges and 2-cells of a 2-groupoid");
  yon->add_option("file", file)->required();
  yon->add_flag("--roundtrip", roundtrip, "recover every edge and 2-cell");

  auto* gen = app.add_subcommand("gen", "generate an instance (TRUNKAN_SEED overrides --seed)");
  gen->add_option("kind", kind, "groupoid | nerve | crossed-module | suite | pushout")->required();
  gen->add_option("--seed", seed);
  gen->add_option("--n", n, "truncation level for nerve");
  gen->add_option("--h-group", gh, "crossed-module group H");
  gen->add_option("--q-group", gq, "crossed-module group Q");
  gen->add_option("--index", index, "suite member");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report R;
  CLI::App* sub = app.get_subcommands().front();
  R.command = sub->get_name();
  for (int i = 1; i < argc; ++i) R.args.push_back(argv[i]);
  std::string error;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (sub == check) cmd_check(R, file, level, n_opt);
    else if (sub == pi) cmd_pi(R, file, k, base);
    else if (sub == weq) cmd_weq(R, file);
    else if (sub == po) cmd_pushout(R, file, file2, file3);
    else if (sub == hom) {
      if (to.empty() && edge.empty()) throw Error(ErrorKind::InvalidArgument, "give --to or --edge");
      cmd_hom(R, file, from, to, edge);
    } else if (sub == yon) cmd_yoneda(R, file, roundtrip);
    else if (sub == gen) cmd_gen(R, kind, seed, n, gh, gq, index);
  } catch (const Error& e) {
    R.exit = exit_for(e.kind());
    R.verdict = R.exit == 2 ? "input error" : "failed";
    error = e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (as_json) {
    json doc{{"schema", kSchema}, {"command", R.command}, {"args", R.args}, {"verdict", R.verdict},
             {"exit", R.exit}, {"results", R.results}, {"witnesses", R.witnesses}};
    if (!error.empty()) doc["error"] = error;
    if (R.output) doc["output"] = *R.output;
    if (timing) doc["timing"] = {{"seconds", seconds}};
    std::cout << io::dump(doc);
  } else {
    if (R.output && error.empty()) std::cout << io::dump(*R.output);
    for (const auto& l : R.lines) std::cout << l << "\n";
    if (!error.empty()) std::cerr << "error: " << error << "\n";
    if (!R.output) std::cout << "verdict: " << R.verdict << "\n";
    if (timing) std::cerr << "time: " << seconds << " s\n";
  }
  return R.exit;
}
