#include "knotguts_cli/cli.hpp"

#include "knotguts/error.hpp"
#include "knotguts/states.hpp"
#include "knotguts_cli/corpus.hpp"
#include "knotguts_cli/input.hpp"
#include "knotguts_cli/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>

namespace knotguts::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string pd, braid, montesinos, file, name, table;
  bool text = false;
  int cap = 18;
  int workers = 1;
  CLI::App* app = nullptr;

  BracketOptions bracket() const { return {cap, workers}; }
};

void add_input_options(CLI::App* sub, InputOptions& o) {
  o.app = sub;
  sub->add_option("--pd", o.pd, "planar diagram code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
  sub->add_option("--braid", o.braid, "braid word, e.g. \"B3: s1^3 s2^3\"");
  sub->add_option("--montesinos,--slopes", o.montesinos, "Montesinos slopes, e.g. \"M(1/3,-1/3,1/3)\"");
  sub->add_option("--file", o.file, "file holding one PD code, braid word or Montesinos vector");
  sub->add_option("--name", o.name, "knot table entry, e.g. 11n95 (needs --table)");
  sub->add_option("--table", o.table, "knot table CSV (default: $KNOTGUTS_TABLE)");
  sub->add_flag("--text", o.text, "human-readable output instead of JSON");
  sub->add_option("--cap", o.cap, "crossing cap for the Jones polynomial")->capture_default_str();
  sub->add_option("--workers", o.workers, "threads for the state sum")->capture_default_str();
}

LoadedInput load(const InputOptions& o) {
  int given = 0;
  for (const char* flag : {"--pd", "--braid", "--montesinos", "--file", "--name"}) given += o.app->count(flag) ? 1 : 0;
  if (given == 0) throw UsageError("one of --pd, --braid, --montesinos, --file, --name is required");
  if (given > 1) throw UsageError("give exactly one input option");
  if (o.app->count("--pd")) return load_pd(o.pd);
  if (o.app->count("--braid")) return load_braid(o.braid);
  if (o.app->count("--montesinos")) return load_montesinos(o.montesinos);
  if (o.app->count("--file")) return load_file(o.file);
  std::string table = o.table;
  if (table.empty())
    if (const char* env = std::getenv("KNOTGUTS_TABLE")) table = env;
  if (table.empty()) throw UsageError("--name needs --table or KNOTGUTS_TABLE");
  return load_named(table, o.name);
}

void emit(std::ostream& out, const json& j, bool text) {
  if (text) out << to_text(j);
  else out << j.dump(2) << "\n";
}

json jones_command(const LoadedInput& in, const BracketOptions& opts, const std::string& method) {
  JonesPolynomial poly;
  if (method == "state-sum") {
    if (in.diagram.crossing_count() > opts.crossing_cap)
      throw Error(ErrorCode::CrossingCapExceeded, "diagram has " + std::to_string(in.diagram.crossing_count()) +
                                                      " crossings, cap is " + std::to_string(opts.crossing_cap));
    poly = jones_from_bracket(in.diagram, state_sum_bracket(in.diagram, opts));
  } else {
    poly = jones_polynomial(in.diagram, opts);
  }
  auto r = jones_report(poly);
  json j = jones_json(r);
  j["crossings"] = in.diagram.crossing_count();
  j["components"] = in.diagram.component_count();
  j["method"] = method;
  const LinkDiagram& d = in.diagram;
  if (is_adequate(state_graph(resolve(d, all_a(d))))) {
    auto s = stable_identity_a(d, r);
    j["identity_a"] = {{"holds", s.holds}, {"expected", big_json(s.expected)}, {"observed", big_json(s.observed)}};
  }
  if (is_adequate(state_graph(resolve(d, all_b(d))))) {
    auto s = stable_identity_b(d, r);
    j["identity_b"] = {{"holds", s.holds}, {"expected", big_json(s.expected)}, {"observed", big_json(s.observed)}};
  }
  return j;
}

json braid_command(const LoadedInput& in, const BracketOptions& opts) {
  if (!in.braid) throw UsageError("braid needs --braid or a braid word in --file");
  const BraidWord w = merge_letters(*in.braid);
  const LinkDiagram& d = in.diagram;
  auto twist = twist_regions(d);
  json j;
  j["word"] = to_string(w);
  j["strands"] = w.strands;
  j["positive"] = is_positive(w);
  j["crossings"] = d.crossing_count();
  j["components"] = d.component_count();
  j["twist_number"] = twist.twist_number;
  j["prime"] = primeness(d).is_prime;
  j["fiber"] = fiber_pair_json(d);
  auto g = state_graph(resolve(d, all_a(d)));
  auto reduced = reduce(g);
  const long long chi = euler_data(g, reduced).chi_reduced;
  j["all_a"] = {{"adequate", is_adequate(g)},
                {"no_parallel_edges", reduced.edges.size() == g.edges.size()},
                {"chi_reduced", chi},
                {"chi_within_two_thirds_bound", 3 * chi <= -2 * twist.twist_number}};
  try {
    auto b = positive_braid_bounds(w, opts);
    j["bounds"] = bounds_json(b);
    if (b.upper && b.lower > 0) j["gap"] = round12(*b.upper / b.lower);
  } catch (const Error& e) {
    j["bounds"] = {{"error", error_json(e)}};
  }
  return j;
}

json cable_command(const LoadedInput& in, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cable needs n >= 1");
  auto chi = [](const LinkDiagram& d) {
    auto g = state_graph(resolve(d, all_a(d)));
    return euler_data(g, reduce(g)).chi_reduced;
  };
  LinkDiagram c = cable(in.diagram, n);
  json j;
  j["strands"] = n;
  j["base"] = {{"crossings", in.diagram.crossing_count()}, {"chi_reduced_a", chi(in.diagram)}};
  j["cable"] = {{"crossings", c.crossing_count()},
                {"components", c.component_count()},
                {"chi_reduced_a", chi(c)},
                {"pd", to_string(c.to_pd())}};
  j["chi_invariant"] = chi(in.diagram) == chi(c);
  return j;
}

std::string dot_command(const LoadedInput& in, const std::string& graph, const std::string& state) {
  const LinkDiagram& d = in.diagram;
  auto h = resolve(d, state == "A" ? all_a(d) : all_b(d));
  const std::string name = graph + "_" + state;
  if (graph == "H") return to_dot(h, name);
  auto g = state_graph(h);
  if (graph == "G") return to_dot(g, name);
  return to_dot(reduce(g), name);
}

json ingest_command(const std::string& path, bool verify, const BracketOptions& opts) {
  auto table = ingest_table(path);
  json fixtures = json::array();
  int mismatches = 0;
  for (const auto& row : table.rows) {
    json f;
    f["name"] = row.name;
    f["crossings"] = row.pd.crossings.size();
    if (verify) {
      try {
        auto poly = jones_polynomial(LinkDiagram::from_pd(row.pd), opts);
        f["jones"] = to_string(poly);
        if (row.jones) {
          const bool match = to_string(parse_jones(*row.jones)) == to_string(poly);
          f["matches_table"] = match;
          mismatches += match ? 0 : 1;
        }
      } catch (const Error& e) {
        f["error"] = error_json(e);
      }
    }
    fixtures.push_back(f);
  }
  json j;
  j["fixtures"] = fixtures;
  j["count"] = table.rows.size();
  j["warnings"] = table.warnings;
  if (verify) j["mismatches"] = mismatches;
  return j;
}

json corpus_command(const std::string& family, std::uint64_t seed, int count, int cap) {
  json items = json::array();
  for (const auto& item : generate_corpus(family, seed, count, cap)) {
    items.push_back({{"family", item.family},
                     {"source", item.source},
                     {"crossings", item.diagram.crossing_count()},
                     {"pd", to_string(item.diagram.to_pd())}});
  }
  return {{"family", family}, {"seed", seed}, {"cap", cap}, {"items", items}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diagrammatic knot invariants: state graphs, guts, Jones polynomial and volume bounds", "knotguts"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  InputOptions analyze_o, jones_o, guts_o, volume_o, fibered_o, mont_o, braid_o, cable_o, dot_o;
  auto* analyze = app.add_subcommand("analyze", "full report: diagram, states, guts, Jones, volume");
  add_input_options(analyze, analyze_o);
  auto* jones = app.add_subcommand("jones", "Jones polynomial and its extreme coefficients");
  add_input_options(jones, jones_o);
  std::string jones_method = "skein";
  jones->add_option("--method", jones_method, "skein or state-sum")
      ->check(CLI::IsMember({"skein", "state-sum"}))
      ->capture_default_str();
  auto* guts = app.add_subcommand("guts", "guts intervals of the all-A and all-B state surfaces");
  add_input_options(guts, guts_o);
  auto* volume = app.add_subcommand("volume", "hyperbolic volume bounds");
  add_input_options(volume, volume_o);
  auto* fibered = app.add_subcommand("fibered", "fiber test for the all-A and all-B state surfaces");
  add_input_options(fibered, fibered_o);
  auto* mont = app.add_subcommand("montesinos", "Montesinos pipeline");
  add_input_options(mont, mont_o);
  std::string action = "report";
  mont->add_option("action", action, "report, volume, normalize or taxonomy")
      ->check(CLI::IsMember({"report", "volume", "normalize", "taxonomy"}))
      ->capture_default_str();
  auto* braid = app.add_subcommand("braid", "positive braid closure report");
  add_input_options(braid, braid_o);
  auto* cable_cmd = app.add_subcommand("cable", "blackboard n-cable and the chi(G'_A) comparison");
  add_input_options(cable_cmd, cable_o);
  int strands = 2;
  cable_cmd->add_option("-n,--strands", strands, "number of parallel copies")->capture_default_str();
  auto* dot = app.add_subcommand("dot", "Graphviz rendering of H, G or G' for the all-A or all-B state");
  add_input_options(dot, dot_o);
  std::string graph = "G", state = "A";
  dot->add_option("--graph", graph, "H, G or reduced")->check(CLI::IsMember({"H", "G", "reduced"}))->capture_default_str();
  dot->add_option("--state", state, "A or B")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  auto* ingest = app.add_subcommand("ingest", "load a knot table CSV");
  std::string table_path;
  bool verify = false, ingest_text = false;
  int ingest_cap = 18;
  ingest->add_option("table,--table", table_path, "CSV with columns name, pd_notation[, jones_polynomial]")->required();
  ingest->add_flag("--verify", verify, "compute each Jones polynomial and compare with the table");
  ingest->add_flag("--text", ingest_text, "human-readable output instead of JSON");
  ingest->add_option("--cap", ingest_cap, "crossing cap for the Jones polynomial")->capture_default_str();
  auto* corpus = app.add_subcommand("corpus", "deterministic diagram families");
  std::string family;
  std::uint64_t seed = 7;
  int count = 10, corpus_cap = 18;
  bool corpus_text = false;
  corpus->add_option("--family", family, "positive-braids, montesinos, pretzels, alternating-montesinos, cables")
      ->required();
  corpus->add_option("--seed", seed)->capture_default_str();
  corpus->add_option("--count", count)->capture_default_str();
  corpus->add_option("--cap", corpus_cap, "maximum crossing count")->capture_default_str();
  corpus->add_flag("--text", corpus_text, "human-readable output instead of JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (analyze->parsed()) {
      emit(out, analysis_json(load(analyze_o), analyze_o.bracket()), analyze_o.text);
    } else if (jones->parsed()) {
      emit(out, jones_command(load(jones_o), jones_o.bracket(), jones_method), jones_o.text);
    } else if (guts->parsed()) {
      auto in = load(guts_o);
      json j = guts_pair_json(in);
      j["twist_number"] = twist_regions(in.diagram).twist_number;
      emit(out, j, guts_o.text);
    } else if (volume->parsed()) {
      emit(out, volume_json(load(volume_o), volume_o.bracket()), volume_o.text);
    } else if (fibered->parsed()) {
      emit(out, fiber_pair_json(load(fibered_o).diagram), fibered_o.text);
    } else if (mont->parsed()) {
      auto in = load(mont_o);
      if (!in.montesinos) throw UsageError("montesinos needs --slopes or a Montesinos vector in --file");
      json j;
      if (action == "normalize") j = normal_form_json(*in.montesinos);
      else if (action == "volume") j = bounds_json(montesinos_bounds(*in.montesinos, mont_o.bracket()));
      else if (action == "taxonomy") j = taxonomy_json(negative_loop_taxonomy(*in.montesinos));
      else j = montesinos_report_json(montesinos_report(*in.montesinos));
      emit(out, j, mont_o.text);
    } else if (braid->parsed()) {
      emit(out, braid_command(load(braid_o), braid_o.bracket()), braid_o.text);
    } else if (cable_cmd->parsed()) {
      emit(out, cable_command(load(cable_o), strands), cable_o.text);
    } else if (dot->parsed()) {
      out << dot_command(load(dot_o), graph, state);
    } else if (ingest->parsed()) {
      emit(out, ingest_command(table_path, verify, BracketOptions{ingest_cap, 1}), ingest_text);
    } else if (corpus->parsed()) {
      emit(out, corpus_command(family, seed, count, corpus_cap), corpus_text);
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    out << json{{"error", error_json(e)}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return error_kind(e.code()) == ErrorKind::Hypothesis ? kHypothesisNotMet : kInputError;
  }
  return kSuccess;
}

}  // namespace knotguts::cli
