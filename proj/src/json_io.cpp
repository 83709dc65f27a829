#include "boundarykit/json_io.hpp"

#include <string>

namespace boundarykit {

using nlohmann::json;

namespace {

Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw InputError("edge must be a pair of integer ids, got " + j.dump());
  }
  return Edge{j[0].get<int>(), j[1].get<int>()};
}

std::vector<Edge> edges_from_json(const json& j) {
  if (!j.is_array()) throw InputError("edge list must be an array");
  std::vector<Edge> edges;
  edges.reserve(j.size());
  for (const auto& e : j) edges.push_back(edge_from_json(e));
  return edges;
}

Coord coord_from_json(const json& j) {
  if (!j.is_array()) throw InputError("coordinate must be an array, got " + j.dump());
  Coord c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("coordinate entries must be integers, got " + j.dump());
    c.push_back(x.get<int>());
  }
  return c;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json out = {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
  if (g.has_labels()) out["labels"] = g.labels();
  return out;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer()) {
    throw InputError("graph: missing integer field \"vertices\"");
  }
  if (!j.contains("edges")) throw InputError("graph: missing field \"edges\"");
  std::vector<Coord> labels;
  if (j.contains("labels") && !j["labels"].is_null()) {
    if (!j["labels"].is_array()) throw InputError("graph: \"labels\" must be an array");
    for (const auto& l : j["labels"]) labels.push_back(coord_from_json(l));
  }
  auto edges = edges_from_json(j["edges"]);
  return Graph(j["vertices"].get<int>(), edges, std::move(labels));
}

json vertex_to_json(const Graph& host, VertexId v) {
  if (host.has_labels()) return host.label(v);
  return v;
}

json vertex_set_to_json(const Graph& host, const VertexSet& s) {
  json out = json::array();
  for (VertexId v : s.members()) out.push_back(vertex_to_json(host, v));
  return out;
}

VertexId vertex_from_json(const Graph& host, const json& j) {
  if (j.is_number_integer()) {
    VertexId v = j.get<int>();
    host.require_valid(v);
    return v;
  }
  if (j.is_array()) {
    if (!host.has_labels()) throw InputError("coordinate vertex given for an unlabeled graph: " + j.dump());
    auto id = host.find_label(coord_from_json(j));
    if (!id) throw InputError("no vertex with coordinates " + j.dump());
    return *id;
  }
  throw InputError("vertex must be an id or a coordinate tuple, got " + j.dump());
}

VertexSet vertex_set_from_json(const Graph& host, const json& j) {
  if (!j.is_array()) throw InputError("vertex set must be a JSON array");
  VertexSet s = host.empty_set();
  for (const auto& v : j) s.insert(vertex_from_json(host, v));
  return s;
}

GraphPair graph_pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("g")) throw InputError("graph pair: missing field \"g\"");
  Graph g = graph_from_json(j["g"]);
  std::vector<Edge> plus_edges = g.edges();
  if (j.contains("extra_plus_edges")) {
    auto extra = edges_from_json(j["extra_plus_edges"]);
    plus_edges.insert(plus_edges.end(), extra.begin(), extra.end());
  }
  Graph g_plus(g.vertex_count(), plus_edges, g.labels());
  return GraphPair::make(std::move(g), std::move(g_plus));
}

}  // namespace boundarykit
