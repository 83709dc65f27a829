#pragma once

#include <json.hpp>

#include "boundarykit/graph.hpp"

namespace boundarykit {

// {"vertices": N, "edges": [[u,v],...], "labels": [[x1,...,xd],...]?}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Coordinate tuples when the host is labeled, otherwise sorted ids.
nlohmann::json vertex_set_to_json(const Graph& host, const VertexSet& s);
nlohmann::json vertex_to_json(const Graph& host, VertexId v);

// Accepts ids, or coordinate tuples for labeled hosts.
VertexId vertex_from_json(const Graph& host, const nlohmann::json& j);
VertexSet vertex_set_from_json(const Graph& host, const nlohmann::json& j);

// {"g": <graph>, "extra_plus_edges": [[u,v],...]}
GraphPair graph_pair_from_json(const nlohmann::json& j);

}  // namespace boundarykit
