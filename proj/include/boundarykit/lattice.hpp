#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "boundarykit/cycle_space.hpp"
#include "boundarykit/graph.hpp"

namespace boundarykit {

// plain: Z^d nearest neighbours. star: L-infinity distance 1 (king moves).
// plus: plain plus both diagonals of every unit 2-face.
enum class Flavor { plain, star, plus };

std::string to_string(Flavor f);
Flavor parse_flavor(std::string_view s);

// The box {1,...,n}^d. Vertex ids enumerate coordinates with the first
// axis varying fastest, so id order is colexicographic coordinate order.
struct BoxSpec {
  int d = 2;
  int n = 1;
  Flavor flavor = Flavor::plain;

  // Throws InputError when d < 1, n < 1, n^d too large, or plus with d < 2.
  void validate() const;
  int vertex_count() const;
  BoxSpec with_flavor(Flavor f) const { return BoxSpec{d, n, f}; }

  VertexId id_of(const Coord& c) const;
  Coord coord_of(VertexId v) const;
  bool contains(const Coord& c) const;

  friend bool operator==(const BoxSpec&, const BoxSpec&) = default;
};

// "z{d}:{n}:{plain|star|plus}", e.g. "z2:5:star".
BoxSpec parse_box_spec(std::string_view text);
std::string to_string(const BoxSpec& spec);

Graph build_box(const BoxSpec& spec);

// One 4-cycle per axis-aligned unit 2-face, over build_box(spec) with the
// plain flavor. Requires d >= 2.
std::vector<EdgeVector> basic_four_cycles(const BoxSpec& spec);

// For an edge e of the star box missing from the plain box: the shortest
// cycle through e whose other edges are plain and lie in the unit cube
// spanned by e. Ties go to the smallest vertex-id sequence starting at the
// smaller endpoint. The result is an edge vector of pair.g_plus.
EdgeVector oe_cycle(const GraphPair& pair, Edge e);

// oe_cycle for every edge of g_plus \ g.
std::map<Edge, EdgeVector> oe_cycle_map(const GraphPair& pair);

// Box graphs with one extra vertex joined to every surface vertex; stands
// in for the single end of Z^d.
struct ApexGraph {
  GraphPair pair;
  VertexId apex = -1;
  VertexSet shell;
};

// Apex gets the all-zero coordinate label and the largest id.
Graph add_apex(const Graph& box, VertexSet* shell_out = nullptr);
ApexGraph with_apex(const GraphPair& pair);

// L-infinity distance from a box vertex to the complement of the box in
// Z^d: 1 on the surface, 2 one layer in, and so on.
int surface_margin(const BoxSpec& spec, const Coord& c);

}  // namespace boundarykit
