#include <doctest.h>

#include "boundarykit/graph.hpp"
#include "boundarykit/harness.hpp"
#include "boundarykit/json_io.hpp"
#include "boundarykit/lattice.hpp"
#include "oracles.hpp"

using namespace boundarykit;

namespace {

Graph path3() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  return Graph(3, edges);
}

Graph four_cycle() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return Graph(4, edges);
}

VertexId at(const Graph& g, Coord c) { return *g.find_label(c); }

VertexSet coords_set(const Graph& g, const std::vector<Coord>& cs) {
  VertexSet s = g.empty_set();
  for (const auto& c : cs) s.insert(at(g, c));
  return s;
}

}  // namespace

TEST_CASE("graph construction validates simplicity and labels") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(2, loop), InputError);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, dup), InputError);
  const std::vector<Edge> range{{0, 5}};
  CHECK_THROWS_AS(Graph(2, range), InputError);
  const std::vector<Edge> none;
  CHECK_THROWS_AS(Graph(2, none, {{1}, {1}}), InputError);
  CHECK_THROWS_AS(Graph(2, none, {{1}}), InputError);

  Graph g = four_cycle();
  CHECK(g.edge_count() == 4);
  for (EdgeId id = 0; id < g.edge_count(); ++id) CHECK(g.edge_id(g.edge(id).u, g.edge(id).v) == id);
  CHECK(g.neighbors(0) == std::vector<VertexId>{1, 3});
  CHECK(g.adjacent(3, 0));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("graph pair requires containment and equal labels") {
  Graph plain = build_box({2, 3, Flavor::plain});
  Graph star = build_box({2, 3, Flavor::star});
  CHECK_NOTHROW(GraphPair::make(plain, star));
  CHECK_THROWS_AS(GraphPair::make(star, plain), InputError);
  CHECK_THROWS_AS(GraphPair::make(plain, build_box({2, 4, Flavor::star})), InputError);
}

TEST_CASE("component_of") {
  Graph p = path3();
  SUBCASE("separator") { CHECK(component_of(p, 0, p.make_set(std::vector<VertexId>{1})).members() == std::vector<VertexId>{0}); }
  SUBCASE("connected") { CHECK(component_of(p, 0, p.empty_set()).count() == 3); }
  SUBCASE("errors") {
    CHECK_THROWS_AS(component_of(p, 7, p.empty_set()), InputError);
    CHECK_THROWS_AS(component_of(p, 1, p.make_set(std::vector<VertexId>{1})), InputError);
  }
  SUBCASE("4x4 grid split by a full column, against flood fill") {
    Graph g = build_box({2, 4, Flavor::plain});
    std::vector<Coord> column{{3, 1}, {3, 2}, {3, 3}, {3, 4}};
    VertexSet forbidden = coords_set(g, column);
    VertexSet got = component_of(g, at(g, {1, 1}), forbidden);

    std::set<Coord> cells;
    for (int x = 1; x <= 4; ++x) {
      for (int y = 1; y <= 4; ++y) {
        if (x != 3) cells.insert({x, y});
      }
    }
    std::set<Coord> expected = oracle::grid_flood(cells, {1, 1});
    CHECK(expected.size() == 8);
    std::set<Coord> got_coords;
    for (VertexId v : got.members()) got_coords.insert(g.label(v));
    CHECK(got_coords == expected);
  }
}

TEST_CASE("is_connected_in on plain and star lattices") {
  Graph plain = build_box({2, 3, Flavor::plain});
  Graph star = build_box({2, 3, Flavor::star});
  VertexSet pair = coords_set(plain, {{3, 2}, {2, 3}});
  CHECK_FALSE(is_connected_in(plain, pair));
  CHECK(is_connected_in(star, pair));
  VertexSet cross = coords_set(plain, {{1, 2}, {3, 2}, {2, 1}, {2, 3}});
  CHECK_FALSE(is_connected_in(plain, cross));
  CHECK(component_count(plain, cross) == 4);
  CHECK(is_connected_in(plain, plain.empty_set()));
  CHECK(is_connected_in(plain, coords_set(plain, {{1, 1}})));
}

TEST_CASE("is_cutset") {
  Graph c4 = four_cycle();
  VertexSet target = c4.make_set(std::vector<VertexId>{2});
  CHECK(is_cutset(c4, c4.make_set(std::vector<VertexId>{1, 3}), 0, target));
  CHECK_FALSE(is_cutset(c4, c4.make_set(std::vector<VertexId>{1}), 0, target));
  CHECK_THROWS_AS(is_cutset(c4, c4.make_set(std::vector<VertexId>{0}), 0, target), InputError);
  CHECK_THROWS_AS(is_cutset(c4, c4.make_set(std::vector<VertexId>{2}), 0, target), InputError);

  SUBCASE("5x5 star ring around the centre, against simple-path enumeration") {
    Graph g = build_box({2, 5, Flavor::plain});
    VertexSet ring = g.empty_set();
    for (int x = 2; x <= 4; ++x) {
      for (int y = 2; y <= 4; ++y) {
        if (x != 3 || y != 3) ring.insert(at(g, {x, y}));
      }
    }
    VertexId centre = at(g, {3, 3});
    VertexSet target = g.make_set(std::vector<VertexId>{centre});
    CHECK(is_cutset(g, ring, at(g, {1, 1}), target));

    auto adj = oracle::adjacency_matrix(g);
    auto off_ring = [&](VertexId v) { return !ring.contains(v); };
    auto reach = oracle::simple_path_endpoints(adj, at(g, {1, 1}), off_ring, off_ring);
    CHECK_FALSE(reach.contains(centre));
  }
}

TEST_CASE("is_minimal_cutset") {
  Graph c4 = four_cycle();
  VertexSet target = c4.make_set(std::vector<VertexId>{2});
  CHECK(is_minimal_cutset(c4, c4.make_set(std::vector<VertexId>{1, 3}), 0, target));

  // Pendant vertex 4 hanging off b = 1.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}};
  Graph pendant(5, edges);
  CHECK_FALSE(is_minimal_cutset(pendant, pendant.make_set(std::vector<VertexId>{1, 3, 4}), 0,
                                pendant.make_set(std::vector<VertexId>{2})));

  SUBCASE("axis neighbours of the 5x5 centre, remove-one-and-retest") {
    Graph g = build_box({2, 5, Flavor::plain});
    VertexSet s = coords_set(g, {{2, 3}, {4, 3}, {3, 2}, {3, 4}});
    VertexId x = at(g, {1, 1});
    VertexSet target = coords_set(g, {{3, 3}});
    CHECK(is_minimal_cutset(g, s, x, target));

    auto adj = oracle::adjacency_matrix(g);
    for (VertexId v : s.members()) {
      auto allowed = [&](VertexId w) { return w == v || !s.contains(w); };
      auto reach = oracle::simple_path_endpoints(adj, x, allowed, allowed);
      CHECK(reach.contains(at(g, {3, 3})));
    }
  }
}

TEST_CASE("traversal properties on random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = random_connected_graph(14, static_cast<int>(seed % 9), seed);
    Rng rng(seed);
    VertexSet forbidden = g.empty_set();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (uniform_below(rng, 3) == 0) forbidden.insert(v);
    }
    VertexSet rest = g.all_vertices() - forbidden;
    int distinct = 0;
    VertexSet covered = g.empty_set();
    for (VertexId v : rest.members()) {
      VertexSet comp = component_of(g, v, forbidden);
      for (VertexId w : comp.members()) CHECK(component_of(g, w, forbidden) == comp);
      if (!covered.contains(v)) {
        ++distinct;
        covered |= comp;
      }
    }
    CHECK(is_connected_in(g, rest) == (distinct <= 1));
    CHECK(component_count(g, rest) == oracle::components(oracle::adjacency_matrix(g), oracle::to_set(rest)));
  }
}

TEST_CASE("minimal cutsets admit a private path through every member") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Graph g = random_connected_graph(12, 6, seed);
    Rng rng(seed * 7);
    // Neighbourhoods of vertex 1 thinned at random; some of them are minimal.
    VertexSet s = g.empty_set();
    for (VertexId v : g.neighbors(1)) {
      if (v != 0 && uniform_below(rng, 4) != 0) s.insert(v);
    }
    if (s.empty() || g.adjacent(0, 1)) continue;
    VertexSet target = g.make_set(std::vector<VertexId>{1});
    if (!is_minimal_cutset(g, s, 0, target)) continue;
    ++checked;
    for (VertexId v : s.members()) {
      VertexSet others = s;
      others.erase(v);
      CHECK(component_of(g, 0, others).contains(1));
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("graph JSON round trip keeps edges and labels") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = random_connected_graph(9, 5, seed);
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.edges() == g.edges());
    CHECK(back.fingerprint() == g.fingerprint());
  }
  Graph box = build_box({2, 3, Flavor::star});
  Graph back = graph_from_json(graph_to_json(box));
  CHECK(back.labels() == box.labels());
  VertexSet s = coords_set(box, {{1, 1}, {2, 3}});
  CHECK(vertex_set_from_json(box, vertex_set_to_json(box, s)) == s);
  CHECK(vertex_set_to_json(box, s).dump() == "[[1,1],[2,3]]");
  CHECK_THROWS_AS(vertex_set_from_json(box, nlohmann::json::parse("[[9,9]]")), InputError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":2,"edges":[[0,0]]})")), InputError);
}
