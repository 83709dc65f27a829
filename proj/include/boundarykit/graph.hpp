#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace boundarykit {

// Malformed arguments, violated preconditions, refused runs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Something that the theory says cannot happen did happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using VertexId = int;
using EdgeId = int;
using Coord = std::vector<int>;

struct Edge {
  VertexId u;
  VertexId v;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Membership over 0..size-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < bits_.size() && bits_.test(static_cast<std::size_t>(v));
  }
  void insert(VertexId v);
  void erase(VertexId v);

  // Sorted ascending.
  std::vector<VertexId> members() const;
  std::optional<VertexId> first() const;

  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }
  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }

  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); }

  const boost::dynamic_bitset<std::uint64_t>& bits() const { return bits_; }

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

// Finite undirected simple graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on loops, duplicate edges, out-of-range endpoints,
  // a label count different from n, or repeated labels.
  Graph(int vertex_count, std::span<const Edge> edges, std::vector<Coord> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  // Edge ids parallel to neighbors(v).
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

  bool adjacent(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }
  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;

  bool valid(VertexId v) const { return v >= 0 && v < vertex_count_; }
  void require_valid(VertexId v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Coord>& labels() const { return labels_; }
  const Coord& label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<VertexId> find_label(const Coord& c) const;

  // FNV-1a over vertex count and the sorted edge list.
  std::uint64_t fingerprint() const { return fingerprint_; }

  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(vertex_count_)); }
  VertexSet all_vertices() const;
  VertexSet make_set(std::span<const VertexId> members) const;

  // Induced subgraph on `keep`; second is the map new id -> old id.
  std::pair<Graph, std::vector<VertexId>> induced(const VertexSet& keep) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<Edge> edges_;
  std::vector<Coord> labels_;
  std::uint64_t fingerprint_ = 0;
};

// Two graphs on the same vertex set with g a spanning subgraph of g_plus.
struct GraphPair {
  Graph g;
  Graph g_plus;

  // Throws InputError unless the invariants hold.
  static GraphPair make(Graph g, Graph g_plus);
};

// Component of `start` in the subgraph induced on V \ forbidden.
VertexSet component_of(const Graph& g, VertexId start, const VertexSet& forbidden);

// Number of connected components of the subgraph induced on s.
int component_count(const Graph& g, const VertexSet& s);

// Empty and singleton sets count as connected.
bool is_connected_in(const Graph& g, const VertexSet& s);

bool is_cutset(const Graph& g, const VertexSet& s, VertexId x, const VertexSet& target);
bool is_minimal_cutset(const Graph& g, const VertexSet& s, VertexId x, const VertexSet& target);

// BFS shortest path from `from` to `to` avoiding `forbidden`, visiting
// neighbours in increasing id order. Empty if unreachable.
std::vector<VertexId> shortest_path(const Graph& g, VertexId from, VertexId to, const VertexSet& forbidden);

}  // namespace boundarykit
