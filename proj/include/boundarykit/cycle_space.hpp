#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "boundarykit/graph.hpp"

namespace boundarykit {

// Requested combination lies outside the span of the generators.
class NotInSpan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set of edges of one host graph, viewed as a vector over GF(2).
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(const Graph& host);

  static EdgeVector from_edges(const Graph& host, std::span<const Edge> edges);
  // Edges between consecutive vertices; a closed walk repeats the first vertex at the end.
  static EdgeVector from_walk(const Graph& host, std::span<const VertexId> walk);

  std::uint64_t host_fingerprint() const { return host_; }
  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(EdgeId e) const { return bits_.test(static_cast<std::size_t>(e)); }
  void flip(EdgeId e) { bits_.flip(static_cast<std::size_t>(e)); }

  std::vector<EdgeId> edge_ids() const;

  EdgeVector& operator+=(const EdgeVector& other);
  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

  // Throws InputError unless `host` is the graph this vector was built on.
  void require_host(const Graph& host) const;

  // Vertices incident to some edge.
  VertexSet vertices(const Graph& host) const;
  std::vector<int> degrees(const Graph& host) const;
  bool all_degrees_even(const Graph& host) const;
  // Connected and 2-regular.
  bool is_cycle(const Graph& host) const;
  // Number of edges in common with `edges` (a vector of the same host).
  std::size_t overlap(const EdgeVector& edges) const { return (bits_ & edges.bits_).count(); }

  // Re-express over another graph containing the same endpoint pairs.
  EdgeVector lift(const Graph& from, const Graph& to) const;

  // Sorted [[u,v],...], endpoints as coordinates when the host is labeled.
  nlohmann::json to_json(const Graph& host) const;

  const boost::dynamic_bitset<std::uint64_t>& bits() const { return bits_; }

 private:
  std::uint64_t host_ = 0;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

// An ordered list of cycles together with a GF(2) echelon form used for
// rank and decomposition queries. Built once; read-only afterwards.
class CycleGen {
 public:
  CycleGen() = default;
  // Throws InputError if a member is not a cycle of `host`.
  CycleGen(const Graph& host, std::vector<EdgeVector> cycles);

  std::uint64_t host_fingerprint() const { return host_; }
  std::size_t size() const { return cycles_.size(); }
  const EdgeVector& operator[](std::size_t i) const { return cycles_[i]; }
  const std::vector<EdgeVector>& cycles() const { return cycles_; }
  std::size_t rank() const { return rows_.size(); }

  // Indices A (ascending) with sum of cycles[A] == target. Generators that
  // were dependent at insertion time never appear.
  std::vector<std::size_t> decompose(const Graph& host, const EdgeVector& target) const;

  // Hash of the host and of every member, in order.
  std::uint64_t fingerprint() const;

 private:
  struct Row {
    boost::dynamic_bitset<std::uint64_t> bits;
    boost::dynamic_bitset<std::uint64_t> combo;  // over generator indices
  };

  std::uint64_t host_ = 0;
  std::vector<EdgeVector> cycles_;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;  // edge id -> row, or -1
};

// One fundamental cycle per non-tree edge of the BFS tree rooted at 0,
// in edge-id order. Throws InputError for disconnected graphs.
CycleGen fundamental_basis(const Graph& g);

bool is_generating(const CycleGen& gen, const Graph& g);

// Every two vertices of the cycle `o` (a cycle of `host`) are adjacent in g_plus.
bool is_chordal_cycle(const Graph& host, const EdgeVector& o, const Graph& g_plus);

struct SeparatingCycle {
  std::size_t generator_index;
  EdgeVector cycle;
  std::size_t e2_crossings;  // edges shared with x_side_cut_edges, always odd
};

// Edges joining s2 to the component of g \ (s1 ∪ s2) containing x.
EdgeVector x_side_cut_edges(const Graph& g, const VertexSet& s1, const VertexSet& s2, VertexId x);

// Given a minimal cutset S = s1 ∪ s2 between x and y and a generating set,
// returns a generator meeting both parts that shares an odd number of edges
// with x_side_cut_edges(g, s1, s2, x).
// Follows the path-sum construction: P1 avoids s2, P2 avoids s1, and
// P1 + P2 is decomposed over the generators.
SeparatingCycle separating_cycle_witness(const Graph& g, const CycleGen& gen, const VertexSet& s1, const VertexSet& s2,
                                         VertexId x, VertexId y);

}  // namespace boundarykit
