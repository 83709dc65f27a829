#include "boundarykit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boundarykit/boundary.hpp"
#include "boundarykit/harness.hpp"
#include "boundarykit/json_io.hpp"
#include "boundarykit/lattice.hpp"

namespace boundarykit {

using nlohmann::json;

namespace {

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON for " + what + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InputError("bad " + what + " '" + s + "'");
  return v;
}

struct BoundaryArgs {
  std::string box;
  std::string pair_file;
  std::string set;
  std::string x;
  std::string adj;
  std::string probe;
  bool inner = false;
};

int run_boundary(const BoundaryArgs& a, std::ostream& out) {
  if (a.box.empty() == a.pair_file.empty()) throw InputError("boundary: give exactly one of --box or --pair");

  Graph g;
  Graph adj;
  Graph probe;
  if (!a.box.empty()) {
    BoxSpec spec = parse_box_spec(a.box);
    const Flavor adj_flavor = a.adj.empty() ? spec.flavor : parse_flavor(a.adj);
    const Flavor probe_flavor = a.probe.empty() ? adj_flavor : parse_flavor(a.probe);
    g = build_box(spec);
    adj = build_box(spec.with_flavor(adj_flavor));
    probe = build_box(spec.with_flavor(probe_flavor));
  } else {
    GraphPair pair = graph_pair_from_json(read_json_file(a.pair_file));
    auto pick = [&](const std::string& which, const std::string& fallback) -> const Graph& {
      const std::string& w = which.empty() ? fallback : which;
      if (w == "g") return pair.g;
      if (w == "plus") return pair.g_plus;
      throw InputError("with --pair, --adj/--probe must be g or plus");
    };
    adj = pick(a.adj, "g");
    probe = pick(a.probe, a.adj.empty() ? "g" : a.adj);
    g = pair.g;
  }

  VertexId x = -1;
  if (a.x == "apex") {
    g = add_apex(g);
    adj = add_apex(adj);
    probe = add_apex(probe);
    x = g.vertex_count() - 1;
  } else {
    x = vertex_from_json(g, parse_json_arg(a.x, "--x"));
  }
  VertexSet c = vertex_set_from_json(g, parse_json_arg(a.set, "--set"));
  BoundaryReport report = a.inner ? inner_report(g, adj, probe, c, x) : full_report(g, adj, probe, c, x);

  json j = report_to_json(g, report);
  j["schema"] = 1;
  j["x"] = vertex_to_json(g, x);
  j["kind"] = a.inner ? "inner" : "outer";
  out << j.dump(2) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string theorem;
  std::string box = "z2:4:plain";
  std::string mode = "random";
  int max_size = 6;
  long trials = 1000;
  std::uint64_t seed = 1;
  int margin = 2;
  std::string x = "apex";
  std::string probe;
  std::string adj;
  std::string set;
  bool skip_hypotheses = false;
  std::string random_graph;
  std::string replay;
  bool no_elapsed = false;
  int threads = 0;
};

TrialConfig to_config(const VerifyArgs& a) {
  TrialConfig cfg;
  cfg.theorem = parse_theorem(a.theorem);
  cfg.box = parse_box_spec(a.box);
  if (a.mode == "exhaustive") {
    cfg.mode = Mode::exhaustive;
  } else if (a.mode == "random") {
    cfg.mode = Mode::random;
  } else {
    throw InputError("--mode must be exhaustive or random");
  }
  cfg.max_size = a.max_size;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.margin = a.margin;
  if (a.x == "apex") {
    cfg.x_policy = XPolicy::apex;
  } else if (a.x == "all") {
    cfg.x_policy = XPolicy::all;
  } else {
    cfg.x_policy = XPolicy::fixed;
    cfg.fixed_x = parse_json_arg(a.x, "--x");
  }
  if (!a.probe.empty()) cfg.probe = parse_flavor(a.probe);
  if (!a.adj.empty()) cfg.adjacency = parse_flavor(a.adj);
  if (!a.set.empty()) cfg.fixed_set = parse_json_arg(a.set, "--set");
  cfg.skip_hypotheses = a.skip_hypotheses;
  if (!a.random_graph.empty()) {
    auto colon = a.random_graph.find(':');
    if (colon == std::string::npos) throw InputError("--random-graph must look like VERTICES:EXTRA_EDGES");
    cfg.random_graph = RandomGraphSpec{
        static_cast<int>(parse_u64(a.random_graph.substr(0, colon), "vertex count")),
        static_cast<int>(parse_u64(a.random_graph.substr(colon + 1), "extra edge count"))};
  }
  cfg.threads = a.threads;
  return cfg;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  TrialConfig cfg = to_config(a);
  VerifyReport report =
      a.replay.empty() ? run_verification(cfg) : replay_trial(cfg, parse_u64(a.replay, "replay seed"));
  out << report.to_json(!a.no_elapsed).dump(2) << "\n";
  return report.passed() ? 0 : 1;
}

int run_hypotheses(const std::string& box, const std::string& pair_file, std::ostream& out) {
  if (box.empty() == pair_file.empty()) throw InputError("hypotheses: give exactly one of --box or --pair");
  json j = {{"schema", 1}};
  bool ok = true;
  if (!box.empty()) {
    BoxSpec spec = parse_box_spec(box);
    if (spec.flavor != Flavor::plain) throw InputError("hypotheses: --box must use the plain flavor");
    if (spec.d < 2) throw InputError("hypotheses: need d >= 2");
    const Graph g = build_box(spec);
    const CycleGen gen = box_generators(spec, g);
    auto dp_pair = GraphPair::make(g, build_box(spec.with_flavor(Flavor::plus)));
    auto k_pair = GraphPair::make(g, build_box(spec.with_flavor(Flavor::star)));
    const bool dp = check_dp_hypotheses(dp_pair, gen);
    const bool k = check_k_hypotheses(k_pair, gen, oe_cycle_map(k_pair));
    j["box"] = to_string(spec);
    j["dp"] = dp;
    j["k"] = k;
    ok = dp && k;
  } else {
    GraphPair pair = graph_pair_from_json(read_json_file(pair_file));
    const bool dp = check_dp_hypotheses(pair, fundamental_basis(pair.g));
    j["dp"] = dp;
    ok = dp;
  }
  j["pass"] = ok;
  out << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int run_enumerate(const std::string& box, const std::string& graph_file, int max_size, bool count_only,
                  std::ostream& out) {
  if (box.empty() == graph_file.empty()) throw InputError("enumerate: give exactly one of --box or --graph");
  const Graph g = box.empty() ? graph_from_json(read_json_file(graph_file)) : build_box(parse_box_spec(box));
  long count = 0;
  for_each_connected_subset(g, max_size, [&](const std::vector<VertexId>& s) {
    ++count;
    if (!count_only) out << vertex_set_to_json(g, g.make_set(s)).dump() << "\n";
  });
  if (count_only) out << json{{"count", count}}.dump() << "\n";
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"boundarykit: boundaries of vertex sets in graph pairs"};
  app.require_subcommand(1);

  BoundaryArgs b;
  auto* boundary = app.add_subcommand("boundary", "Boundary report for one vertex set");
  boundary->add_option("--box", b.box, "Box spec z{d}:{n}:{plain|star|plus}");
  boundary->add_option("--pair", b.pair_file, "Graph pair JSON file");
  boundary->add_option("--set", b.set, "JSON array of ids or coordinates")->required();
  boundary->add_option("--x", b.x, "apex, an id, or a coordinate tuple")->required();
  boundary->add_option("--adj", b.adj, "Graph measuring adjacency to the set");
  boundary->add_option("--probe", b.probe, "Graph in which connectivity is measured");
  boundary->add_flag("--inner", b.inner, "Inner boundary variants");

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Verification campaign");
  verify->add_option("theorem", v.theorem, "dp, k or lemma")->required();
  verify->add_option("--box", v.box, "Box spec");
  verify->add_option("--mode", v.mode, "exhaustive or random");
  verify->add_option("--max-size", v.max_size, "Largest set size");
  verify->add_option("--trials", v.trials, "Random trials");
  verify->add_option("--seed", v.seed, "Base seed");
  verify->add_option("--margin", v.margin, "Minimum distance of c from outside the box (apex policy)");
  verify->add_option("--x", v.x, "apex, all, or a vertex");
  verify->add_option("--probe", v.probe, "Flavor of the connectivity graph");
  verify->add_option("--adj", v.adj, "Flavor of the adjacency graph");
  verify->add_option("--set", v.set, "Check a single JSON vertex set");
  verify->add_flag("--skip-hypotheses", v.skip_hypotheses, "Run even if the hypotheses fail");
  verify->add_option("--random-graph", v.random_graph, "Lemma on random graphs VERTICES:EXTRA_EDGES");
  verify->add_option("--replay", v.replay, "Replay one random trial from its seed");
  verify->add_flag("--no-elapsed", v.no_elapsed, "Omit the elapsed time field");
  verify->add_option("--threads", v.threads, "Worker threads");

  std::string hyp_box;
  std::string hyp_pair;
  auto* hypotheses = app.add_subcommand("hypotheses", "Check theorem hypotheses");
  hypotheses->add_option("--box", hyp_box, "Plain box spec");
  hypotheses->add_option("--pair", hyp_pair, "Graph pair JSON file");

  std::string enum_box;
  std::string enum_graph;
  int enum_max = 3;
  bool enum_count = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream connected subsets as JSON lines");
  enumerate->add_option("--box", enum_box, "Box spec");
  enumerate->add_option("--graph", enum_graph, "Graph JSON file");
  enumerate->add_option("--max-size", enum_max, "Largest set size");
  enumerate->add_flag("--count", enum_count, "Print only the number of sets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*boundary) return run_boundary(b, out);
    if (*verify) return run_verify(v, out);
    if (*hypotheses) return run_hypotheses(hyp_box, hyp_pair, out);
    if (*enumerate) return run_enumerate(enum_box, enum_graph, enum_max, enum_count, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace boundarykit
