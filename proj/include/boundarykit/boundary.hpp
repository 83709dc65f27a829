#pragma once

#include <optional>
#include <utility>

#include <json.hpp>

#include "boundarykit/graph.hpp"

namespace boundarykit {

// Naming follows the pair (g, g_prime): adjacency to c is measured in
// g_prime, paths from x run in g and avoid c.

struct BoundaryReport {
  VertexSet boundary;
  VertexSet visible;
  VertexSet outer_visible;
  // Components of `visible` in the probe graph; 0 only when visible is empty.
  int component_count = 0;
  // Smallest-id vertex, and the smallest vertex outside its component.
  std::optional<std::pair<VertexId, VertexId>> witness_disconnect;

  bool visible_connected() const { return component_count <= 1; }
};

// Vertices outside c with a g_prime-neighbour in c.
VertexSet outer_boundary(const Graph& g_prime, const VertexSet& c);

// Outer boundary vertices joined to x by a g-path disjoint from c.
VertexSet visible_boundary(const Graph& g, const Graph& g_prime, const VertexSet& c, VertexId x);

// Visible boundary vertices v reachable from x by a g-path avoiding c whose
// inner vertices all avoid the visible boundary. x itself qualifies when it
// lies in the visible boundary.
VertexSet outer_visible_boundary(const Graph& g, const Graph& g_prime, const VertexSet& c, VertexId x);

BoundaryReport full_report(const Graph& g, const Graph& g_prime, const Graph& probe, const VertexSet& c, VertexId x);

// The same three sets with c and its complement exchanged: vertices of c
// with a g_prime-neighbour outside c, those g_prime-adjacent to the
// component of x in g \ c, and (since every path from x stays outside c
// until its final step) the outer-visible inner set equals the visible one.
// Components are counted in `probe`.
BoundaryReport inner_report(const Graph& g, const Graph& g_prime, const Graph& probe, const VertexSet& c, VertexId x);
BoundaryReport inner_boundary_variants(const Graph& g, const Graph& g_prime, const VertexSet& c, VertexId x);

// {"boundary":[...],"visible":[...],"outer_visible":[...],"components":k,"witness":[[..],[..]]?}
nlohmann::json report_to_json(const Graph& host, const BoundaryReport& report);

}  // namespace boundarykit
