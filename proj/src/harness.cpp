#include "boundarykit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "boundarykit/boundary.hpp"
#include "boundarykit/json_io.hpp"

namespace boundarykit {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Seeds and randomness

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t state = base;
  std::uint64_t mixed = splitmix64(state) ^ (index * 0xd1b54a32d192ed03ULL);
  return splitmix64(mixed);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below: empty range");
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % bound;
}

// ---------------------------------------------------------------------------
// Subset generation

void check_enumeration_budget(const Graph& g, int max_size) {
  if (max_size < 1) throw InputError("enumeration: max_size must be positive");
  if (g.vertex_count() > 25 && max_size > 9) {
    throw InputError("enumeration budget exceeded: need |V| <= 25 or max_size <= 9 (|V| = " +
                     std::to_string(g.vertex_count()) + ", max_size = " + std::to_string(max_size) + ")");
  }
}

namespace {

// ESU-style extension: each connected set is reached exactly once, from its
// smallest vertex, through exclusive neighbourhoods.
class SubsetEnumerator {
 public:
  SubsetEnumerator(const Graph& g, int max_size, const std::function<void(const std::vector<VertexId>&)>& visit)
      : g_(g), max_size_(max_size), visit_(visit), touched_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  void run() {
    for (VertexId root = 0; root < g_.vertex_count(); ++root) {
      root_ = root;
      std::vector<VertexId> ext;
      add(root);
      for (VertexId w : g_.neighbors(root)) {
        if (w > root) ext.push_back(w);
      }
      extend(ext);
      remove(root);
    }
  }

 private:
  void add(VertexId v) {
    current_.push_back(v);
    ++touched_[static_cast<std::size_t>(v)];
    for (VertexId w : g_.neighbors(v)) ++touched_[static_cast<std::size_t>(w)];
  }

  void remove(VertexId v) {
    current_.pop_back();
    --touched_[static_cast<std::size_t>(v)];
    for (VertexId w : g_.neighbors(v)) --touched_[static_cast<std::size_t>(w)];
  }

  void extend(std::vector<VertexId> ext) {
    visit_(current_);
    if (static_cast<int>(current_.size()) == max_size_) return;
    std::sort(ext.begin(), ext.end());
    while (!ext.empty()) {
      VertexId w = ext.front();
      ext.erase(ext.begin());
      std::vector<VertexId> next = ext;
      for (VertexId u : g_.neighbors(w)) {
        if (u > root_ && touched_[static_cast<std::size_t>(u)] == 0) next.push_back(u);
      }
      add(w);
      extend(std::move(next));
      remove(w);
    }
  }

  const Graph& g_;
  int max_size_;
  const std::function<void(const std::vector<VertexId>&)>& visit_;
  std::vector<int> touched_;  // members of current and their neighbours, with multiplicity
  std::vector<VertexId> current_;
  VertexId root_ = 0;
};

}  // namespace

void for_each_connected_subset(const Graph& g, int max_size,
                               const std::function<void(const std::vector<VertexId>&)>& visit) {
  check_enumeration_budget(g, max_size);
  SubsetEnumerator(g, max_size, visit).run();
}

std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, int max_size) {
  std::vector<VertexSet> out;
  for_each_connected_subset(g, max_size, [&](const std::vector<VertexId>& s) { out.push_back(g.make_set(s)); });
  return out;
}

VertexSet sample_connected_subset(const Graph& g, int size, std::uint64_t seed) {
  if (size < 1) throw InputError("sample_connected_subset: size must be positive");
  if (size > g.vertex_count()) throw InputError("sample_connected_subset: size exceeds the vertex count");

  Rng rng(seed);
  VertexSet chosen = g.empty_set();
  VertexSet seen = g.empty_set();
  std::vector<VertexId> frontier;
  auto take = [&](VertexId v) {
    chosen.insert(v);
    for (VertexId w : g.neighbors(v)) {
      if (!seen.contains(w)) {
        seen.insert(w);
        frontier.push_back(w);
      }
    }
  };

  VertexId start = static_cast<VertexId>(uniform_below(rng, static_cast<std::uint64_t>(g.vertex_count())));
  seen.insert(start);
  take(start);
  while (static_cast<int>(chosen.count()) < size) {
    if (frontier.empty()) throw InputError("sample_connected_subset: component of the start vertex is too small");
    auto pick = static_cast<std::size_t>(uniform_below(rng, frontier.size()));
    VertexId v = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
    take(v);
  }
  return chosen;
}

Graph random_connected_graph(int vertices, int extra_edges, std::uint64_t seed) {
  if (vertices < 1) throw InputError("random graph: need at least one vertex");
  if (extra_edges < 0) throw InputError("random graph: negative extra edge count");
  Rng rng(seed);

  std::vector<VertexId> order(static_cast<std::size_t>(vertices));
  for (int i = 0; i < vertices; ++i) order[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);

  std::set<Edge> edges;
  for (std::size_t i = 1; i < order.size(); ++i) {
    VertexId parent = order[uniform_below(rng, i)];
    edges.insert(make_edge(order[i], parent));
  }
  const long max_edges = static_cast<long>(vertices) * (vertices - 1) / 2;
  for (int k = 0; k < extra_edges && static_cast<long>(edges.size()) < max_edges; ++k) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto a = static_cast<VertexId>(uniform_below(rng, static_cast<std::uint64_t>(vertices)));
      auto b = static_cast<VertexId>(uniform_below(rng, static_cast<std::uint64_t>(vertices)));
      if (a != b && edges.insert(make_edge(a, b)).second) break;
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(vertices, list);
}

// ---------------------------------------------------------------------------
// Hypothesis checkers

bool check_dp_hypotheses(const GraphPair& pair, const CycleGen& gen) {
  if (!is_generating(gen, pair.g)) return false;
  return std::all_of(gen.cycles().begin(), gen.cycles().end(),
                     [&](const EdgeVector& o) { return is_chordal_cycle(pair.g, o, pair.g_plus); });
}

bool check_k_hypotheses(const GraphPair& pair, const CycleGen& gen, const std::map<Edge, EdgeVector>& oe_map) {
  std::vector<Edge> extra;
  for (const Edge& e : pair.g_plus.edges()) {
    if (!pair.g.adjacent(e.u, e.v)) extra.push_back(e);
  }
  std::string missing;
  for (const Edge& e : extra) {
    if (!oe_map.contains(e)) missing += " [" + std::to_string(e.u) + "," + std::to_string(e.v) + "]";
  }
  if (!missing.empty()) throw InputError("check_k_hypotheses: no cycle given for edges" + missing);
  for (const auto& [e, cycle] : oe_map) {
    if (!pair.g_plus.adjacent(e.u, e.v) || pair.g.adjacent(e.u, e.v)) {
      throw InputError("check_k_hypotheses: key [" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "] is not an edge of g_plus \\ g");
    }
  }

  if (!is_connected_in(pair.g, pair.g.all_vertices())) return false;
  if (!check_dp_hypotheses(pair, gen)) return false;

  for (const Edge& e : extra) {
    const EdgeVector& o = oe_map.at(e);
    o.require_host(pair.g_plus);
    if (!o.is_cycle(pair.g_plus)) return false;
    const EdgeId through = *pair.g_plus.edge_id(e.u, e.v);
    if (!o.contains(through)) return false;
    for (EdgeId id : o.edge_ids()) {
      const Edge& f = pair.g_plus.edge(id);
      if (id != through && !pair.g.adjacent(f.u, f.v)) return false;
    }
    if (!is_chordal_cycle(pair.g_plus, o, pair.g_plus)) return false;
  }
  return true;
}

CycleGen box_generators(const BoxSpec& spec, const Graph& g) {
  if (spec.flavor == Flavor::plain && spec.d >= 2) return CycleGen(g, basic_four_cycles(spec));
  return fundamental_basis(g);
}

CycleGen apex_generators(const BoxSpec& spec, const Graph& box, const Graph& apex_graph, VertexId apex) {
  std::vector<EdgeVector> cycles;
  if (spec.d >= 2) {
    for (const EdgeVector& c : basic_four_cycles(spec.with_flavor(Flavor::plain))) {
      cycles.push_back(c.lift(box, apex_graph));
    }
  }
  for (const Edge& e : box.edges()) {
    if (apex_graph.adjacent(e.u, apex) && apex_graph.adjacent(e.v, apex)) {
      const std::vector<VertexId> walk{apex, e.u, e.v, apex};
      cycles.push_back(EdgeVector::from_walk(apex_graph, walk));
    }
  }
  return CycleGen(apex_graph, std::move(cycles));
}

// ---------------------------------------------------------------------------
// Configuration

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::dp: return "dp";
    case Theorem::k: return "k";
    case Theorem::lemma: return "lemma";
  }
  return "dp";
}

Theorem parse_theorem(const std::string& s) {
  if (s == "dp") return Theorem::dp;
  if (s == "k") return Theorem::k;
  if (s == "lemma") return Theorem::lemma;
  throw InputError("unknown theorem '" + s + "' (expected dp, k or lemma)");
}

namespace {

std::string mode_name(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "random"; }

std::string policy_name(XPolicy p) {
  switch (p) {
    case XPolicy::apex: return "apex";
    case XPolicy::all: return "all";
    case XPolicy::fixed: return "fixed";
  }
  return "apex";
}

}  // namespace

void TrialConfig::validate() const {
  box.validate();
  if (max_size < 1) throw InputError("max_size must be positive");
  if (trials < 0) throw InputError("trials must be nonnegative");
  if (margin < 1) throw InputError("margin must be at least 1");
  if (x_policy == XPolicy::apex && margin < 2) throw InputError("the apex policy needs margin >= 2");
  if (x_policy == XPolicy::fixed && fixed_x.is_null()) throw InputError("fixed x policy needs a vertex");
  if (mode == Mode::exhaustive && box.vertex_count() > 25 && max_size > 9) {
    throw InputError("exhaustive budget exceeded: need n^d <= 25 or max_size <= 9");
  }
  if (random_graph) {
    if (theorem != Theorem::lemma) throw InputError("random graphs are only used for lemma runs");
    if (mode != Mode::random) throw InputError("random graphs need random mode");
    if (random_graph->vertices < 4) throw InputError("random graphs need at least 4 vertices");
    if (random_graph->extra_edges < 0) throw InputError("random graphs need a nonnegative extra edge count");
  }
}

json TrialConfig::to_json() const {
  json out = {
      {"theorem", boundarykit::to_string(theorem)},
      {"box", boundarykit::to_string(box)},
      {"mode", mode_name(mode)},
      {"max_size", max_size},
      {"seed", seed},
      {"margin", margin},
      {"x_policy", policy_name(x_policy)},
      {"skip_hypotheses", skip_hypotheses},
  };
  if (mode == Mode::random) out["trials"] = trials;
  if (x_policy == XPolicy::fixed) out["x"] = fixed_x;
  if (probe) out["probe"] = boundarykit::to_string(*probe);
  if (adjacency) out["adjacency"] = boundarykit::to_string(*adjacency);
  if (fixed_set) out["set"] = *fixed_set;
  if (random_graph) out["random_graph"] = {{"vertices", random_graph->vertices}, {"extra_edges", random_graph->extra_edges}};
  return out;
}

json VerifyReport::to_json(bool include_elapsed) const {
  json out = {
      {"schema", 1},
      {"config", config},
      {"hypotheses", hypotheses},
      {"trials_run", trials_run},
      {"skipped", skipped},
      {"failures", failures},
      {"pass", passed()},
  };
  if (!trial_seeds.empty()) out["trial_seeds"] = trial_seeds;
  if (include_elapsed) out["elapsed_ms"] = elapsed_ms;
  return out;
}

int worker_count(int requested) {
  int workers = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(workers, 1);
  if (const char* env = std::getenv("BOUNDARYKIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) workers = std::min(workers, cap);
  }
  return workers;
}

// ---------------------------------------------------------------------------
// Campaigns

namespace {

struct Outcome {
  long checks = 0;
  long skipped = 0;
  std::vector<json> failures;
};

// Everything a trial reads; immutable once built.
struct Campaign {
  TrialConfig cfg;
  Graph box_g;
  Graph g;
  Graph adj;
  Graph probe;
  std::optional<VertexId> apex;
  std::optional<VertexId> fixed_x;
  std::optional<VertexSet> fixed_set;
  Graph pool_graph;  // premise graph induced on the vertices c may use
  std::vector<VertexId> pool_map;
  CycleGen gen;  // lemma runs on the box
  std::string hypotheses = "skipped";
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<int, std::uint64_t, std::uint64_t, std::uint64_t>, bool>& hypothesis_cache() {
  static std::map<std::tuple<int, std::uint64_t, std::uint64_t, std::uint64_t>, bool> cache;
  return cache;
}

template <typename Check>
bool cached_check(Theorem t, const Graph& g, const Graph& g_plus, const CycleGen& gen, Check&& check) {
  auto key = std::make_tuple(static_cast<int>(t), g.fingerprint(), g_plus.fingerprint(), gen.fingerprint());
  {
    std::lock_guard lock(cache_mutex());
    auto it = hypothesis_cache().find(key);
    if (it != hypothesis_cache().end()) return it->second;
  }
  bool ok = check();
  std::lock_guard lock(cache_mutex());
  hypothesis_cache()[key] = ok;
  return ok;
}

void verify_hypotheses(const TrialConfig& cfg, const Graph& g, const Graph& adj, const Graph& probe, Campaign& out) {
  const CycleGen gen = box_generators(cfg.box, g);
  const std::string box = to_string(cfg.box);
  switch (cfg.theorem) {
    case Theorem::dp: {
      auto pair = GraphPair::make(g, probe);
      if (!cached_check(cfg.theorem, g, probe, gen, [&] { return check_dp_hypotheses(pair, gen); })) {
        throw InputError("hypotheses fail for dp on " + box + ": generators are not chordal in the probe graph");
      }
      break;
    }
    case Theorem::k: {
      auto pair = GraphPair::make(g, adj);
      if (!cached_check(cfg.theorem, g, adj, gen,
                        [&] { return check_k_hypotheses(pair, gen, oe_cycle_map(pair)); })) {
        throw InputError("hypotheses fail for k on " + box + ": generators not chordal, or a diagonal edge lacks a chordal cycle through it");
      }
      break;
    }
    case Theorem::lemma:
      if (!is_generating(gen, g)) throw InputError("hypotheses fail for lemma: generators do not span");
      break;
  }
  out.hypotheses = "passed";
}

Campaign build_campaign(const TrialConfig& cfg) {
  cfg.validate();
  Campaign c;
  c.cfg = cfg;
  if (cfg.random_graph) {
    c.hypotheses = "per-trial";
    return c;
  }

  const Flavor g_flavor = cfg.box.flavor;
  const Flavor adj_flavor = cfg.adjacency.value_or(cfg.theorem == Theorem::k ? Flavor::star : g_flavor);
  const Flavor probe_flavor = cfg.probe.value_or(cfg.theorem == Theorem::dp ? Flavor::plus : g_flavor);
  c.box_g = build_box(cfg.box);
  Graph box_adj = build_box(cfg.box.with_flavor(adj_flavor));
  Graph box_probe = build_box(cfg.box.with_flavor(probe_flavor));

  // Premise on a user-supplied set is checked before anything else.
  const Graph& premise_box = cfg.theorem == Theorem::k ? box_adj : c.box_g;
  if (cfg.fixed_set) {
    VertexSet s = vertex_set_from_json(c.box_g, *cfg.fixed_set);
    if (s.empty()) throw InputError("premise: the set c is empty");
    if (!is_connected_in(premise_box, s)) {
      throw InputError(std::string("premise: c is not connected in the ") +
                       (cfg.theorem == Theorem::k ? "adjacency" : "base") + " graph");
    }
    if (cfg.x_policy == XPolicy::apex) {
      for (VertexId v : s.members()) {
        if (surface_margin(cfg.box, c.box_g.label(v)) < cfg.margin) {
          throw InputError("premise: c comes closer to the box surface than the margin allows");
        }
      }
    }
    c.fixed_set = s;
  }

  if (!cfg.skip_hypotheses) verify_hypotheses(cfg, c.box_g, box_adj, box_probe, c);

  VertexSet pool = c.box_g.empty_set();
  if (cfg.x_policy == XPolicy::apex) {
    VertexSet shell;
    c.g = add_apex(c.box_g, &shell);
    c.adj = add_apex(box_adj);
    c.probe = add_apex(box_probe);
    c.apex = c.box_g.vertex_count();
    for (VertexId v = 0; v < c.box_g.vertex_count(); ++v) {
      if (surface_margin(cfg.box, c.box_g.label(v)) >= cfg.margin) pool.insert(v);
    }
    pool = VertexSet(static_cast<std::size_t>(c.g.vertex_count()), pool.members());
  } else {
    c.g = c.box_g;
    c.adj = box_adj;
    c.probe = box_probe;
    pool = c.box_g.all_vertices();
  }
  if (c.fixed_set) c.fixed_set = VertexSet(static_cast<std::size_t>(c.g.vertex_count()), c.fixed_set->members());
  if (cfg.x_policy == XPolicy::fixed) {
    c.fixed_x = vertex_from_json(c.box_g, cfg.fixed_x);
  }

  const Graph& premise = cfg.theorem == Theorem::k ? c.adj : c.g;
  auto [pool_graph, pool_map] = premise.induced(pool);
  c.pool_graph = std::move(pool_graph);
  c.pool_map = std::move(pool_map);

  if (cfg.theorem == Theorem::lemma) {
    c.gen = c.apex ? apex_generators(cfg.box, c.box_g, c.g, *c.apex) : box_generators(cfg.box, c.g);
  }
  return c;
}

VertexSet lift_pool_set(const Campaign& c, const std::vector<VertexId>& local) {
  VertexSet s = c.g.empty_set();
  for (VertexId v : local) s.insert(c.pool_map[static_cast<std::size_t>(v)]);
  return s;
}

json failure_record(const Graph& host, const VertexSet& c, VertexId x) {
  return {{"c", vertex_set_to_json(host, c)}, {"x", vertex_to_json(host, x)}};
}

void check_theorem(const Campaign& cp, const VertexSet& c, VertexId x, Outcome& out, const json& tag) {
  ++out.checks;
  BoundaryReport report = full_report(cp.g, cp.adj, cp.probe, c, x);
  if (report.visible_connected()) return;
  json failure = failure_record(cp.g, c, x);
  failure["report"] = report_to_json(cp.g, report);
  failure.update(tag);
  out.failures.push_back(std::move(failure));
}

// Minimal cutset between x and y ∈ c built from the outer-visible boundary;
// nullopt when x touches c or the cutset has fewer than two vertices.
std::optional<std::pair<VertexSet, VertexId>> lemma_cutset(const Graph& g, const VertexSet& c, VertexId x) {
  for (VertexId w : g.neighbors(x)) {
    if (c.contains(w)) return std::nullopt;
  }
  VertexSet s = outer_visible_boundary(g, g, c, x);
  if (s.count() < 2) return std::nullopt;
  return std::make_pair(s, *c.first());
}

// Independent re-check of a witness against the raw definitions.
std::optional<std::string> recheck_witness(const Graph& g, const CycleGen& gen, const SeparatingCycle& w,
                                           const VertexSet& s1, const VertexSet& s2, VertexId x) {
  if (w.generator_index >= gen.size() || !(gen[w.generator_index] == w.cycle)) return "cycle is not a generator";
  VertexSet verts = g.empty_set();
  long crossings = 0;
  VertexSet x_side = component_of(g, x, s1 | s2);
  for (EdgeId id : w.cycle.edge_ids()) {
    const Edge& e = g.edge(id);
    verts.insert(e.u);
    verts.insert(e.v);
    if ((s2.contains(e.u) && x_side.contains(e.v)) || (s2.contains(e.v) && x_side.contains(e.u))) ++crossings;
  }
  if (!verts.intersects(s1)) return "cycle misses s1";
  if (!verts.intersects(s2)) return "cycle misses s2";
  if (crossings % 2 == 0) return "even number of x-side edges at s2";
  if (static_cast<std::size_t>(crossings) != w.e2_crossings) return "reported crossing count is wrong";
  return std::nullopt;
}

void check_lemma(const Graph& g, const CycleGen& gen, const VertexSet& s1, const VertexSet& s2, VertexId x,
                 VertexId y, Outcome& out, json tag) {
  ++out.checks;
  std::string problem;
  try {
    SeparatingCycle w = separating_cycle_witness(g, gen, s1, s2, x, y);
    if (auto bad = recheck_witness(g, gen, w, s1, s2, x)) problem = *bad;
  } catch (const std::exception& e) {
    problem = e.what();
  }
  if (problem.empty()) return;
  tag["s1"] = vertex_set_to_json(g, s1);
  tag["s2"] = vertex_set_to_json(g, s2);
  tag["x"] = vertex_to_json(g, x);
  tag["y"] = vertex_to_json(g, y);
  tag["error"] = problem;
  out.failures.push_back(std::move(tag));
}

std::pair<VertexSet, VertexSet> split_by_mask(const Graph& g, const std::vector<VertexId>& members, std::uint64_t mask) {
  VertexSet s1 = g.empty_set();
  VertexSet s2 = g.empty_set();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if ((mask >> i) & 1U) {
      s1.insert(members[i]);
    } else {
      s2.insert(members[i]);
    }
  }
  return {s1, s2};
}

std::pair<VertexSet, VertexSet> random_split(const Graph& g, const std::vector<VertexId>& members, Rng& rng) {
  while (true) {
    VertexSet s1 = g.empty_set();
    VertexSet s2 = g.empty_set();
    for (VertexId v : members) {
      if (uniform_below(rng, 2) == 1) {
        s1.insert(v);
      } else {
        s2.insert(v);
      }
    }
    if (!s1.empty() && !s2.empty()) return {s1, s2};
  }
}

// All (c, x) lemma checks for one cutset, exhaustive over small cutsets.
void lemma_all_partitions(const Graph& g, const CycleGen& gen, const VertexSet& c, VertexId x, Rng& rng,
                          Outcome& out, const json& tag) {
  auto cut = lemma_cutset(g, c, x);
  if (!cut) {
    ++out.skipped;
    return;
  }
  const auto& [s, y] = *cut;
  VertexSet target = g.empty_set();
  target.insert(y);
  if (!is_minimal_cutset(g, s, x, target)) {
    json f = failure_record(g, c, x);
    f["error"] = "outer-visible boundary is not a minimal cutset";
    f.update(tag);
    out.failures.push_back(std::move(f));
    return;
  }
  const auto members = s.members();
  json base = tag;
  base["c"] = vertex_set_to_json(g, c);
  if (members.size() <= 10) {
    const std::uint64_t full = (std::uint64_t{1} << members.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      auto [s1, s2] = split_by_mask(g, members, mask);
      check_lemma(g, gen, s1, s2, x, y, out, base);
    }
  } else {
    for (int i = 0; i < 64; ++i) {
      auto [s1, s2] = random_split(g, members, rng);
      check_lemma(g, gen, s1, s2, x, y, out, base);
    }
  }
}

std::vector<VertexId> x_candidates(const Campaign& cp, const VertexSet& c) {
  switch (cp.cfg.x_policy) {
    case XPolicy::apex: return {*cp.apex};
    case XPolicy::fixed: return c.contains(*cp.fixed_x) ? std::vector<VertexId>{} : std::vector<VertexId>{*cp.fixed_x};
    case XPolicy::all: {
      std::vector<VertexId> xs;
      for (VertexId v = 0; v < cp.box_g.vertex_count(); ++v) {
        if (!c.contains(v)) xs.push_back(v);
      }
      return xs;
    }
  }
  return {};
}

Outcome exhaustive_item(const Campaign& cp, const VertexSet& c, std::size_t index) {
  Outcome out;
  auto xs = x_candidates(cp, c);
  if (xs.empty()) ++out.skipped;
  const json tag = {{"trial", index}};
  for (VertexId x : xs) {
    if (cp.cfg.theorem == Theorem::lemma) {
      Rng rng(trial_seed(cp.cfg.seed, index));
      lemma_all_partitions(cp.g, cp.gen, c, x, rng, out, tag);
    } else {
      check_theorem(cp, c, x, out, tag);
    }
  }
  return out;
}

Outcome random_graph_trial(const Campaign& cp, std::uint64_t seed, std::size_t index) {
  Outcome out;
  Rng rng(seed);
  const auto& spec = *cp.cfg.random_graph;
  Graph g = random_connected_graph(spec.vertices, spec.extra_edges, rng());
  CycleGen gen = fundamental_basis(g);
  const int cap = std::min(cp.cfg.max_size, spec.vertices - 2);
  const int size = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(cap)));
  VertexSet c = sample_connected_subset(g, size, rng());

  std::vector<VertexId> xs;
  VertexSet near = c | outer_boundary(g, c);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!near.contains(v)) xs.push_back(v);
  }
  if (xs.empty()) {
    ++out.skipped;
    return out;
  }
  VertexId x = xs[uniform_below(rng, xs.size())];
  auto cut = lemma_cutset(g, c, x);
  if (!cut) {
    ++out.skipped;
    return out;
  }
  const auto& [s, y] = *cut;
  auto [s1, s2] = random_split(g, s.members(), rng);
  json tag = {{"trial", index}, {"seed", seed}, {"graph", graph_to_json(g)}, {"c", vertex_set_to_json(g, c)}};
  check_lemma(g, gen, s1, s2, x, y, out, tag);
  return out;
}

Outcome random_trial(const Campaign& cp, std::uint64_t seed, std::size_t index) {
  if (cp.cfg.random_graph) return random_graph_trial(cp, seed, index);

  Outcome out;
  Rng rng(seed);
  VertexSet c;
  if (cp.fixed_set) {
    c = *cp.fixed_set;
  } else {
    const int cap = std::min(cp.cfg.max_size, cp.pool_graph.vertex_count());
    if (cap < 1) {
      ++out.skipped;
      return out;
    }
    const int size = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(cap)));
    c = lift_pool_set(cp, sample_connected_subset(cp.pool_graph, size, rng()).members());
  }

  auto xs = x_candidates(cp, c);
  if (xs.empty()) {
    ++out.skipped;
    return out;
  }
  VertexId x = xs.size() == 1 ? xs.front() : xs[uniform_below(rng, xs.size())];
  const json tag = {{"trial", index}, {"seed", seed}};

  if (cp.cfg.theorem != Theorem::lemma) {
    check_theorem(cp, c, x, out, tag);
    return out;
  }
  auto cut = lemma_cutset(cp.g, c, x);
  if (!cut) {
    ++out.skipped;
    return out;
  }
  const auto& [s, y] = *cut;
  VertexSet target = cp.g.empty_set();
  target.insert(y);
  if (!is_minimal_cutset(cp.g, s, x, target)) {
    json f = failure_record(cp.g, c, x);
    f["error"] = "outer-visible boundary is not a minimal cutset";
    f.update(tag);
    out.failures.push_back(std::move(f));
    return out;
  }
  auto [s1, s2] = random_split(cp.g, s.members(), rng);
  json lemma_tag = tag;
  lemma_tag["c"] = vertex_set_to_json(cp.g, c);
  check_lemma(cp.g, cp.gen, s1, s2, x, y, out, lemma_tag);
  return out;
}

// Runs work(i) for i in [0, count) on up to `workers` threads; results are
// returned in index order.
std::vector<Outcome> run_parallel(std::size_t count, int workers, const std::function<Outcome(std::size_t)>& work) {
  std::vector<Outcome> results(count);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = work(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int n = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), std::max<std::size_t>(count, 1)));
  if (n <= 1) {
    loop();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(loop);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

void merge(VerifyReport& report, std::vector<Outcome>& outcomes) {
  for (auto& o : outcomes) {
    report.trials_run += o.checks;
    report.skipped += o.skipped;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
}

}  // namespace

VerifyReport run_verification(const TrialConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Campaign cp = build_campaign(cfg);
  const int workers = worker_count(cfg.threads);

  VerifyReport report;
  report.config = cfg.to_json();
  report.hypotheses = cp.hypotheses;

  std::vector<Outcome> outcomes;
  if (cfg.mode == Mode::exhaustive && !cfg.random_graph) {
    std::vector<VertexSet> sets;
    if (cp.fixed_set) {
      sets.push_back(*cp.fixed_set);
    } else {
      for_each_connected_subset(cp.pool_graph, cfg.max_size,
                                [&](const std::vector<VertexId>& local) { sets.push_back(lift_pool_set(cp, local)); });
    }
    outcomes = run_parallel(sets.size(), workers, [&](std::size_t i) { return exhaustive_item(cp, sets[i], i); });
  } else {
    report.trial_seeds.reserve(static_cast<std::size_t>(cfg.trials));
    for (long t = 0; t < cfg.trials; ++t) report.trial_seeds.push_back(trial_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    outcomes = run_parallel(report.trial_seeds.size(), workers,
                            [&](std::size_t i) { return random_trial(cp, report.trial_seeds[i], i); });
  }
  merge(report, outcomes);

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerifyReport replay_trial(const TrialConfig& cfg, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Campaign cp = build_campaign(cfg);
  VerifyReport report;
  report.config = cfg.to_json();
  report.config["replay_seed"] = seed;
  report.hypotheses = cp.hypotheses;
  report.trial_seeds.push_back(seed);
  std::vector<Outcome> outcomes{random_trial(cp, seed, 0)};
  merge(report, outcomes);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace boundarykit
