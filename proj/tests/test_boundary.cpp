#include <doctest.h>

#include "boundarykit/boundary.hpp"
#include "boundarykit/harness.hpp"
#include "boundarykit/lattice.hpp"
#include "oracles.hpp"

using namespace boundarykit;

namespace {

VertexId at(const Graph& g, Coord c) { return *g.find_label(c); }

VertexSet coords_set(const Graph& g, const std::vector<Coord>& cs) {
  VertexSet s = g.empty_set();
  for (const auto& c : cs) s.insert(at(g, c));
  return s;
}

std::set<Coord> coords_of(const Graph& g, const VertexSet& s) {
  std::set<Coord> out;
  for (VertexId v : s.members()) out.insert(g.label(v));
  return out;
}

ApexGraph apex_pair(int n, Flavor prime) {
  BoxSpec spec{2, n, Flavor::plain};
  return with_apex(GraphPair::make(build_box(spec), build_box(spec.with_flavor(prime))));
}

std::set<Coord> block(int lo, int hi) {
  std::set<Coord> out;
  for (int x = lo; x <= hi; ++x) {
    for (int y = lo; y <= hi; ++y) out.insert({x, y});
  }
  return out;
}

void check_against_oracle(const Graph& g, const Graph& gp, const VertexSet& c, VertexId x) {
  auto adj = oracle::adjacency_matrix(g);
  auto adjp = oracle::adjacency_matrix(gp);
  auto cs = oracle::to_set(c);
  CHECK(oracle::to_set(outer_boundary(gp, c)) == oracle::outer_boundary(adjp, cs));
  CHECK(oracle::to_set(visible_boundary(g, gp, c, x)) == oracle::visible(adj, adjp, cs, x));
  CHECK(oracle::to_set(outer_visible_boundary(g, gp, c, x)) == oracle::outer_visible(adj, adjp, cs, x));
}

}  // namespace

TEST_CASE("outer_boundary examples") {
  Graph plain = build_box({2, 5, Flavor::plain});
  Graph star = build_box({2, 5, Flavor::star});
  VertexSet centre = coords_set(plain, {{3, 3}});
  std::set<Coord> ring = block(2, 4);
  ring.erase({3, 3});
  CHECK(coords_of(star, outer_boundary(star, centre)) == ring);
  CHECK(coords_of(plain, outer_boundary(plain, centre)) == std::set<Coord>{{2, 3}, {4, 3}, {3, 2}, {3, 4}});
  CHECK(outer_boundary(plain, plain.all_vertices()).empty());
}

TEST_CASE("visible_boundary examples") {
  SUBCASE("single vertex seen from the apex") {
    ApexGraph a = apex_pair(5, Flavor::plain);
    const Graph& g = a.pair.g;
    VertexSet c = coords_set(g, {{3, 3}});
    CHECK(coords_of(g, visible_boundary(g, g, c, a.apex)) == std::set<Coord>{{2, 3}, {4, 3}, {3, 2}, {3, 4}});
    CHECK(coords_of(g, outer_visible_boundary(g, g, c, a.apex)) == std::set<Coord>{{2, 3}, {4, 3}, {3, 2}, {3, 4}});
    CHECK_THROWS_AS(visible_boundary(g, g, c, at(g, {3, 3})), InputError);
    CHECK_THROWS_AS(outer_visible_boundary(g, g, c, at(g, {3, 3})), InputError);
  }

  SUBCASE("7x7 square ring around (4,4), against flood fill") {
    ApexGraph a = apex_pair(7, Flavor::plain);
    const Graph& g = a.pair.g;
    std::set<Coord> ring_cells = block(3, 5);
    ring_cells.erase({4, 4});
    VertexSet ring = g.empty_set();
    for (const auto& c : ring_cells) ring.insert(at(g, c));

    // Flood over the 49 grid cells outside the ring, starting from the border.
    std::set<Coord> open;
    for (const auto& c : block(1, 7)) {
      if (!ring_cells.contains(c)) open.insert(c);
    }
    std::set<Coord> outside = oracle::grid_flood(open, {1, 1});
    std::set<Coord> expected_apex;
    for (const auto& c : coords_of(g, outer_boundary(g, ring))) {
      if (outside.contains(c)) expected_apex.insert(c);
    }
    CHECK(expected_apex.size() == 12);
    CHECK(coords_of(g, visible_boundary(g, g, ring, a.apex)) == expected_apex);

    // From the enclosed centre only the centre itself is reachable.
    std::set<Coord> inside = oracle::grid_flood(open, {4, 4});
    CHECK(inside == std::set<Coord>{{4, 4}});
    CHECK(coords_of(g, visible_boundary(g, g, ring, at(g, {4, 4}))) == std::set<Coord>{{4, 4}});
  }

  SUBCASE("7x7 vertical domino from the apex") {
    ApexGraph a = apex_pair(7, Flavor::plain);
    const Graph& g = a.pair.g;
    VertexSet c = coords_set(g, {{3, 3}, {3, 4}});
    VertexSet vis = visible_boundary(g, g, c, a.apex);
    CHECK(vis == outer_boundary(g, c));
    CHECK(vis.count() == 6);
    CHECK(outer_visible_boundary(g, g, c, a.apex) == vis);

    ApexGraph b = apex_pair(7, Flavor::star);
    const Graph& star = b.pair.g_plus;
    VertexSet vis_star = visible_boundary(g, star, c, a.apex);
    CHECK(vis_star.count() == 10);
    CHECK(outer_visible_boundary(g, star, c, a.apex) == vis_star);
  }
}

TEST_CASE("outer-visible boundary of the far side equals its boundary when the near side is connected") {
  // 3x3 block c in a 7x7 box with apex. S is the visible boundary from the
  // apex, c2 the apex side of g \ S. Every point of the boundary of c2
  // borders c, so from inside c the whole boundary is outer-visible.
  ApexGraph a = apex_pair(7, Flavor::plain);
  const Graph& g = a.pair.g;
  VertexSet c = g.empty_set();
  for (const auto& cell : block(3, 5)) c.insert(at(g, cell));
  VertexSet s = visible_boundary(g, g, c, a.apex);
  CHECK(s.count() == 12);
  VertexSet c2 = component_of(g, a.apex, s);
  const VertexId y = at(g, {4, 4});
  VertexSet ov = outer_visible_boundary(g, g, c2, y);
  CHECK(ov == outer_boundary(g, c2));
  CHECK(ov == s);
}

TEST_CASE("inner boundary variants") {
  SUBCASE("3x3 block in 5x5") {
    for (Flavor prime : {Flavor::plain, Flavor::star}) {
      ApexGraph a = apex_pair(5, prime);
      const Graph& g = a.pair.g;
      VertexSet c = g.empty_set();
      for (const auto& cell : block(2, 4)) c.insert(at(g, cell));
      BoundaryReport r = inner_boundary_variants(g, a.pair.g_plus, c, a.apex);
      std::set<Coord> ring = block(2, 4);
      ring.erase({3, 3});
      CHECK(coords_of(g, r.boundary) == ring);
      CHECK(r.visible == r.boundary);
      CHECK(r.outer_visible == r.visible);
      CHECK(r.component_count == 1);
    }
  }
  SUBCASE("single vertex") {
    ApexGraph a = apex_pair(5, Flavor::plain);
    const Graph& g = a.pair.g;
    VertexSet c = coords_set(g, {{3, 3}});
    BoundaryReport r = inner_boundary_variants(g, g, c, a.apex);
    CHECK(r.boundary == c);
    CHECK(r.visible == c);
  }
  SUBCASE("enclosed part of c is invisible from outside") {
    // c = ring plus centre: the centre has no neighbour outside c.
    ApexGraph a = apex_pair(7, Flavor::plain);
    const Graph& g = a.pair.g;
    VertexSet c = g.empty_set();
    for (const auto& cell : block(3, 5)) c.insert(at(g, cell));
    BoundaryReport r = inner_boundary_variants(g, g, c, a.apex);
    CHECK(r.boundary.count() == 8);
    CHECK_FALSE(r.boundary.contains(at(g, {4, 4})));
    CHECK(r.visible == r.boundary);
  }
  SUBCASE("x inside c is rejected") {
    ApexGraph a = apex_pair(5, Flavor::plain);
    const Graph& g = a.pair.g;
    VertexSet c = coords_set(g, {{3, 3}});
    CHECK_THROWS_AS(inner_boundary_variants(g, g, c, at(g, {3, 3})), InputError);
  }
}

TEST_CASE("full_report examples") {
  SUBCASE("connected c in the plain box, probed in plus") {
    BoxSpec spec{2, 5, Flavor::plain};
    ApexGraph a = with_apex(GraphPair::make(build_box(spec), build_box(spec.with_flavor(Flavor::plus))));
    const Graph& g = a.pair.g;
    VertexSet c = coords_set(g, {{3, 3}, {4, 3}, {4, 4}});
    BoundaryReport r = full_report(g, g, a.pair.g_plus, c, a.apex);
    CHECK(r.component_count == 1);
    CHECK_FALSE(r.witness_disconnect.has_value());
  }
  SUBCASE("star-connected c with star adjacency, probed in plain") {
    ApexGraph a = apex_pair(5, Flavor::star);
    const Graph& g = a.pair.g;
    VertexSet c = coords_set(g, {{3, 3}, {4, 4}});
    BoundaryReport r = full_report(g, a.pair.g_plus, g, c, a.apex);
    CHECK(r.visible.count() == 12);
    CHECK(r.component_count == 1);
  }
  SUBCASE("plain probe splits the neighbours of a single vertex") {
    Graph g = build_box({2, 5, Flavor::plain});
    VertexSet c = coords_set(g, {{3, 3}});
    BoundaryReport r = full_report(g, g, g, c, at(g, {1, 1}));
    CHECK(r.component_count == 4);
    REQUIRE(r.witness_disconnect.has_value());
    CHECK(g.label(r.witness_disconnect->first) == Coord{3, 2});
    CHECK(g.label(r.witness_disconnect->second) == Coord{2, 3});
    auto j = report_to_json(g, r);
    CHECK(j["components"] == 4);
    CHECK(j["witness"].dump() == "[[3,2],[2,3]]");
  }
  SUBCASE("plain probe on a corner vertex") {
    Graph g = build_box({2, 3, Flavor::plain});
    BoundaryReport r = full_report(g, g, g, g.make_set(std::vector<VertexId>{at(g, {1, 1})}), at(g, {3, 3}));
    CHECK(r.component_count == 2);
  }
  SUBCASE("empty visible set") {
    const std::vector<Edge> edges{{0, 1}, {2, 3}};
    Graph g(4, edges);
    BoundaryReport none = full_report(g, g, g, g.make_set(std::vector<VertexId>{0}), 2);
    CHECK(none.boundary.count() == 1);
    CHECK(none.visible.empty());
    CHECK(none.component_count == 0);
    CHECK(none.visible_connected());
  }
}

TEST_CASE("x adjacent to c sees itself") {
  Graph g = build_box({2, 4, Flavor::plain});
  VertexSet c = coords_set(g, {{2, 2}});
  const VertexId x = at(g, {2, 3});
  CHECK(visible_boundary(g, g, c, x).contains(x));
  CHECK(outer_visible_boundary(g, g, c, x).contains(x));
}

TEST_CASE("boundary invariants on sampled sets") {
  ApexGraph a = apex_pair(6, Flavor::star);
  const Graph& g = a.pair.g;
  const Graph& star = a.pair.g_plus;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Graph& host = seed % 2 == 0 ? g : star;
    VertexSet c = sample_connected_subset(host, 1 + static_cast<int>(seed % 10), seed);
    if (c.contains(a.apex)) continue;
    Rng rng(seed);
    VertexId x = a.apex;
    if (seed % 3 == 0) {
      auto outside = (g.all_vertices() - c).members();
      x = outside[uniform_below(rng, outside.size())];
    }
    for (const Graph* gp : {&g, &star}) {
      VertexSet b = outer_boundary(*gp, c);
      VertexSet vis = visible_boundary(g, *gp, c, x);
      VertexSet ov = outer_visible_boundary(g, *gp, c, x);
      CHECK(ov.is_subset_of(vis));
      CHECK(vis.is_subset_of(b));
      VertexSet comp = component_of(g, x, c);
      for (VertexId x2 : comp.members()) {
        if (x2 % 5 == 0) CHECK(visible_boundary(g, *gp, c, x2) == vis);
      }
      BoundaryReport r = full_report(g, *gp, g, c, x);
      CHECK(r.witness_disconnect.has_value() == (r.component_count > 1));
      if (!b.empty() && !vis.empty()) CHECK(r.component_count >= 1);
    }
  }
}

TEST_CASE("boundary operators agree with the path-enumeration oracle") {
  SUBCASE("3x3 box with apex") {
    for (Flavor prime : {Flavor::plain, Flavor::star}) {
      ApexGraph a = apex_pair(3, prime);
      const Graph& g = a.pair.g;
      for_each_connected_subset(a.pair.g_plus, 4, [&](const std::vector<VertexId>& members) {
        if (std::find(members.begin(), members.end(), a.apex) != members.end()) return;
        VertexSet c = g.make_set(members);
        check_against_oracle(g, a.pair.g_plus, c, a.apex);
        check_against_oracle(g, a.pair.g_plus, c, *(g.all_vertices() - c).first());
      });
    }
  }
  SUBCASE("random pairs") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      Graph g = random_connected_graph(11, 4, seed);
      Rng rng(seed);
      std::vector<Edge> plus_edges = g.edges();
      for (int k = 0; k < 6; ++k) {
        VertexId u = static_cast<VertexId>(uniform_below(rng, 11));
        VertexId v = static_cast<VertexId>(uniform_below(rng, 11));
        if (u != v && !g.adjacent(u, v)) plus_edges.push_back(make_edge(u, v));
      }
      std::sort(plus_edges.begin(), plus_edges.end());
      plus_edges.erase(std::unique(plus_edges.begin(), plus_edges.end()), plus_edges.end());
      Graph gp(11, plus_edges);
      VertexSet c = sample_connected_subset(gp, 1 + static_cast<int>(seed % 5), seed);
      auto outside = (g.all_vertices() - c).members();
      check_against_oracle(g, gp, c, outside[uniform_below(rng, outside.size())]);
    }
  }
}
