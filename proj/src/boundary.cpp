#include "boundarykit/boundary.hpp"

#include "boundarykit/json_io.hpp"

namespace boundarykit {

namespace {

void check_pair_args(const Graph& g, const Graph& g_prime, const VertexSet& c, VertexId x) {
  if (g.vertex_count() != g_prime.vertex_count()) throw InputError("boundary: graphs have different vertex counts");
  if (c.universe() != static_cast<std::size_t>(g.vertex_count())) throw InputError("boundary: set has wrong universe");
  g.require_valid(x);
  if (c.contains(x)) throw InputError("boundary: x lies in c");
}

void fill_components(const Graph& probe, BoundaryReport& report) {
  report.component_count = component_count(probe, report.visible);
  if (report.component_count > 1) {
    VertexId first = *report.visible.first();
    VertexSet outside = probe.all_vertices() - report.visible;
    VertexSet others = report.visible - component_of(probe, first, outside);
    report.witness_disconnect = std::make_pair(first, *others.first());
  }
}

}  // namespace

VertexSet outer_boundary(const Graph& g_prime, const VertexSet& c) {
  VertexSet out = g_prime.empty_set();
  for (VertexId v : c.members()) {
    g_prime.require_valid(v);
    for (VertexId w : g_prime.neighbors(v)) {
      if (!c.contains(w)) out.insert(w);
    }
  }
  return out;
}

VertexSet visible_boundary(const Graph& g, const Graph& g_prime, const VertexSet& c, VertexId x) {
  check_pair_args(g, g_prime, c, x);
  return outer_boundary(g_prime, c) & component_of(g, x, c);
}

VertexSet outer_visible_boundary(const Graph& g, const Graph& g_prime, const VertexSet& c, VertexId x) {
  check_pair_args(g, g_prime, c, x);
  const VertexSet visible = visible_boundary(g, g_prime, c, x);

  // Vertices reachable from x through vertices outside c and outside the
  // visible boundary; x is always a valid start.
  VertexSet blocked = c | visible;
  VertexSet reached = g.empty_set();
  reached.insert(x);
  std::vector<VertexId> stack{x};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!reached.contains(w) && !blocked.contains(w)) {
        reached.insert(w);
        stack.push_back(w);
      }
    }
  }

  VertexSet out = g.empty_set();
  for (VertexId v : visible.members()) {
    if (v == x) {
      out.insert(v);
      continue;
    }
    for (VertexId w : g.neighbors(v)) {
      if (reached.contains(w)) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

BoundaryReport full_report(const Graph& g, const Graph& g_prime, const Graph& probe, const VertexSet& c, VertexId x) {
  check_pair_args(g, g_prime, c, x);
  if (probe.vertex_count() != g.vertex_count()) throw InputError("boundary: probe graph has a different vertex count");
  BoundaryReport report;
  report.boundary = outer_boundary(g_prime, c);
  report.visible = visible_boundary(g, g_prime, c, x);
  report.outer_visible = outer_visible_boundary(g, g_prime, c, x);
  fill_components(probe, report);
  return report;
}

BoundaryReport inner_report(const Graph& g, const Graph& g_prime, const Graph& probe, const VertexSet& c, VertexId x) {
  check_pair_args(g, g_prime, c, x);
  if (probe.vertex_count() != g.vertex_count()) throw InputError("boundary: probe graph has a different vertex count");
  const VertexSet complement = g.all_vertices() - c;
  const VertexSet x_side = component_of(g, x, c);

  BoundaryReport report;
  report.boundary = outer_boundary(g_prime, complement);
  report.visible = outer_boundary(g_prime, x_side) & c;
  report.outer_visible = report.visible;
  fill_components(probe, report);
  return report;
}

BoundaryReport inner_boundary_variants(const Graph& g, const Graph& g_prime, const VertexSet& c, VertexId x) {
  return inner_report(g, g_prime, g, c, x);
}

nlohmann::json report_to_json(const Graph& host, const BoundaryReport& report) {
  nlohmann::json out = {
      {"boundary", vertex_set_to_json(host, report.boundary)},
      {"visible", vertex_set_to_json(host, report.visible)},
      {"outer_visible", vertex_set_to_json(host, report.outer_visible)},
      {"components", report.component_count},
  };
  if (report.witness_disconnect) {
    out["witness"] = {vertex_to_json(host, report.witness_disconnect->first),
                      vertex_to_json(host, report.witness_disconnect->second)};
  }
  return out;
}

}  // namespace boundarykit
