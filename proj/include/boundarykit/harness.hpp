#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "boundarykit/cycle_space.hpp"
#include "boundarykit/graph.hpp"
#include "boundarykit/lattice.hpp"

namespace boundarykit {

// ---------------------------------------------------------------------------
// Seeds and randomness

std::uint64_t splitmix64(std::uint64_t& state);
// Seed of trial `index` in a run seeded with `base`.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

using Rng = std::mt19937_64;
// Uniform in [0, bound); rejection sampling so results do not depend on the
// standard library's distribution implementation.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// ---------------------------------------------------------------------------
// Subset generation

// Refuses (InputError) unless |V| <= 25 or max_size <= 9.
void check_enumeration_budget(const Graph& g, int max_size);

// Every connected vertex subset of size 1..max_size exactly once. Sets are
// grown from their smallest vertex, roots in increasing order, extensions
// taken smallest first.
void for_each_connected_subset(const Graph& g, int max_size,
                               const std::function<void(const std::vector<VertexId>&)>& visit);
std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, int max_size);

// Randomised growth from a random start vertex, adding a uniformly chosen
// frontier vertex each step. Deterministic per seed.
VertexSet sample_connected_subset(const Graph& g, int size, std::uint64_t seed);

// Random spanning tree on `vertices` vertices plus up to `extra_edges`
// additional random edges.
Graph random_connected_graph(int vertices, int extra_edges, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Hypothesis checkers

// gen generates the cycle space of pair.g and every member is chordal in pair.g_plus.
bool check_dp_hypotheses(const GraphPair& pair, const CycleGen& gen);

// check_dp_hypotheses, both graphs connected, and for every edge e of
// g_plus \ g the map holds a cycle of g_plus through e, chordal in g_plus,
// whose other edges all belong to g. Missing keys are an InputError.
bool check_k_hypotheses(const GraphPair& pair, const CycleGen& gen, const std::map<Edge, EdgeVector>& oe_map);

// Basic 4-cycles for plain boxes, the fundamental basis otherwise.
CycleGen box_generators(const BoxSpec& spec, const Graph& g);

// Generators for a plain box with an apex: the basic 4-cycles together with
// the triangles formed by the apex and each edge between shell vertices.
CycleGen apex_generators(const BoxSpec& spec, const Graph& box, const Graph& apex_graph, VertexId apex);

// ---------------------------------------------------------------------------
// Verification campaigns

enum class Theorem { dp, k, lemma };
enum class Mode { exhaustive, random };
enum class XPolicy { apex, all, fixed };

std::string to_string(Theorem t);
Theorem parse_theorem(const std::string& s);

struct RandomGraphSpec {
  int vertices = 20;
  int extra_edges = 10;
};

struct TrialConfig {
  Theorem theorem = Theorem::dp;
  BoxSpec box{2, 4, Flavor::plain};
  Mode mode = Mode::random;
  int max_size = 6;
  long trials = 1000;
  std::uint64_t seed = 1;
  int margin = 2;
  XPolicy x_policy = XPolicy::apex;
  nlohmann::json fixed_x;  // id or coordinate tuple when x_policy == fixed
  std::optional<Flavor> probe;
  std::optional<Flavor> adjacency;
  std::optional<nlohmann::json> fixed_set;
  bool skip_hypotheses = false;
  // Lemma only: draw a fresh random connected graph per trial instead of using the box.
  std::optional<RandomGraphSpec> random_graph;
  int threads = 0;  // 0: BOUNDARYKIT_THREADS or hardware concurrency

  void validate() const;
  nlohmann::json to_json() const;
};

struct VerifyReport {
  nlohmann::json config;
  std::string hypotheses;  // "passed" or "skipped"
  long trials_run = 0;
  long skipped = 0;
  std::vector<nlohmann::json> failures;
  std::vector<std::uint64_t> trial_seeds;  // random mode only
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json(bool include_elapsed = true) const;
};

// Throws InputError when the configuration is invalid, over budget, when a
// fixed set violates the premise, or when the hypotheses fail (unless skipped).
VerifyReport run_verification(const TrialConfig& cfg);

// Re-runs a single random-mode trial from its recorded seed.
VerifyReport replay_trial(const TrialConfig& cfg, std::uint64_t seed);

// Worker count: explicit request, else BOUNDARYKIT_THREADS, else hardware.
int worker_count(int requested);

}  // namespace boundarykit
