#include "boundarykit/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace boundarykit {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members) : bits_(universe) {
  for (VertexId v : members) insert(v);
}

void VertexSet::insert(VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= bits_.size()) {
    throw InputError("vertex id " + std::to_string(v) + " out of range");
  }
  bits_.set(static_cast<std::size_t>(v));
}

void VertexSet::erase(VertexId v) {
  if (v >= 0 && static_cast<std::size_t>(v) < bits_.size()) bits_.reset(static_cast<std::size_t>(v));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos; i = bits_.find_next(i)) {
    out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

std::optional<VertexId> VertexSet::first() const {
  auto i = bits_.find_first();
  if (i == boost::dynamic_bitset<std::uint64_t>::npos) return std::nullopt;
  return static_cast<VertexId>(i);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges, std::vector<Coord> labels)
    : vertex_count_(vertex_count),
      adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))),
      incidence_(static_cast<std::size_t>(std::max(vertex_count, 0))),
      labels_(std::move(labels)) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  if (!labels_.empty()) {
    if (labels_.size() != static_cast<std::size_t>(vertex_count)) {
      throw InputError("label count " + std::to_string(labels_.size()) + " differs from vertex count " +
                       std::to_string(vertex_count));
    }
    std::set<Coord> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw InputError("vertex labels are not pairwise distinct");
  }

  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (!valid(raw.u) || !valid(raw.v)) {
      throw InputError("edge endpoint out of range: [" + std::to_string(raw.u) + "," + std::to_string(raw.v) + "]");
    }
    if (raw.u == raw.v) throw InputError("loop at vertex " + std::to_string(raw.u));
    edges_.push_back(make_edge(raw.u, raw.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("duplicate edge");
  }

  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (VertexId v = 0; v < vertex_count_; ++v) {
    auto& adj = adjacency_[static_cast<std::size_t>(v)];
    std::sort(adj.begin(), adj.end());
    auto& inc = incidence_[static_cast<std::size_t>(v)];
    inc.reserve(adj.size());
    for (VertexId w : adj) {
      auto it = std::lower_bound(edges_.begin(), edges_.end(), make_edge(v, w));
      inc.push_back(static_cast<EdgeId>(it - edges_.begin()));
    }
  }

  fingerprint_ = kFnvOffset;
  fnv_mix(fingerprint_, static_cast<std::uint64_t>(vertex_count_));
  for (const Edge& e : edges_) {
    fnv_mix(fingerprint_, static_cast<std::uint64_t>(e.u));
    fnv_mix(fingerprint_, static_cast<std::uint64_t>(e.v));
  }
}

std::optional<EdgeId> Graph::edge_id(VertexId a, VertexId b) const {
  if (!valid(a) || !valid(b)) return std::nullopt;
  const auto& adj = neighbors(a);
  auto it = std::lower_bound(adj.begin(), adj.end(), b);
  if (it == adj.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - adj.begin())];
}

void Graph::require_valid(VertexId v) const {
  if (!valid(v)) throw InputError("vertex id " + std::to_string(v) + " out of range");
}

std::optional<VertexId> Graph::find_label(const Coord& c) const {
  auto it = std::find(labels_.begin(), labels_.end(), c);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexSet Graph::all_vertices() const {
  VertexSet s = empty_set();
  for (VertexId v = 0; v < vertex_count_; ++v) s.insert(v);
  return s;
}

VertexSet Graph::make_set(std::span<const VertexId> members) const {
  return VertexSet(static_cast<std::size_t>(vertex_count_), members);
}

std::pair<Graph, std::vector<VertexId>> Graph::induced(const VertexSet& keep) const {
  std::vector<VertexId> to_old = keep.members();
  std::vector<VertexId> to_new(static_cast<std::size_t>(vertex_count_), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[static_cast<std::size_t>(to_old[i])] = static_cast<VertexId>(i);

  std::vector<Edge> sub_edges;
  for (const Edge& e : edges_) {
    VertexId a = to_new[static_cast<std::size_t>(e.u)];
    VertexId b = to_new[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) sub_edges.push_back(make_edge(a, b));
  }
  std::vector<Coord> sub_labels;
  if (has_labels()) {
    for (VertexId v : to_old) sub_labels.push_back(label(v));
  }
  return {Graph(static_cast<int>(to_old.size()), sub_edges, std::move(sub_labels)), std::move(to_old)};
}

GraphPair GraphPair::make(Graph g, Graph g_plus) {
  if (g.vertex_count() != g_plus.vertex_count()) throw InputError("graph pair: vertex counts differ");
  if (g.labels() != g_plus.labels()) throw InputError("graph pair: labels differ");
  for (const Edge& e : g.edges()) {
    if (!g_plus.adjacent(e.u, e.v)) {
      throw InputError("graph pair: edge [" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "] of g missing from g_plus");
    }
  }
  return GraphPair{std::move(g), std::move(g_plus)};
}

VertexSet component_of(const Graph& g, VertexId start, const VertexSet& forbidden) {
  g.require_valid(start);
  if (forbidden.contains(start)) throw InputError("component_of: start vertex is forbidden");

  VertexSet seen = g.empty_set();
  std::vector<VertexId> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen.contains(w) && !forbidden.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

int component_count(const Graph& g, const VertexSet& s) {
  VertexSet outside = g.all_vertices() - s;
  VertexSet remaining = s;
  int count = 0;
  while (auto v = remaining.first()) {
    remaining -= component_of(g, *v, outside);
    ++count;
  }
  return count;
}

bool is_connected_in(const Graph& g, const VertexSet& s) {
  for (VertexId v : s.members()) g.require_valid(v);
  return component_count(g, s) <= 1;
}

namespace {

void check_cutset_args(const Graph& g, const VertexSet& s, VertexId x, const VertexSet& target) {
  g.require_valid(x);
  if (s.contains(x)) throw InputError("cutset: x lies in the cutset");
  if (target.contains(x)) throw InputError("cutset: x lies in the target");
  if (s.intersects(target)) throw InputError("cutset: cutset meets the target");
}

}  // namespace

bool is_cutset(const Graph& g, const VertexSet& s, VertexId x, const VertexSet& target) {
  check_cutset_args(g, s, x, target);
  return !component_of(g, x, s).intersects(target);
}

bool is_minimal_cutset(const Graph& g, const VertexSet& s, VertexId x, const VertexSet& target) {
  if (!is_cutset(g, s, x, target)) return false;
  for (VertexId v : s.members()) {
    VertexSet smaller = s;
    smaller.erase(v);
    if (!component_of(g, x, smaller).intersects(target)) return false;
  }
  return true;
}

std::vector<VertexId> shortest_path(const Graph& g, VertexId from, VertexId to, const VertexSet& forbidden) {
  g.require_valid(from);
  g.require_valid(to);
  if (forbidden.contains(from) || forbidden.contains(to)) return {};

  std::vector<VertexId> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  parent[static_cast<std::size_t>(from)] = from;
  std::deque<VertexId> queue{from};
  while (!queue.empty() && parent[static_cast<std::size_t>(to)] < 0) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (parent[static_cast<std::size_t>(w)] < 0 && !forbidden.contains(w)) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[static_cast<std::size_t>(to)] < 0) return {};

  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace boundarykit
