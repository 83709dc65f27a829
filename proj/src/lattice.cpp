#include "boundarykit/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace boundarykit {

namespace {

constexpr long kMaxBoxVertices = 1L << 24;

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("box spec: bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

// All vertices of the box in id order.
std::vector<Coord> box_coords(const BoxSpec& spec) {
  std::vector<Coord> out;
  const int count = spec.vertex_count();
  out.reserve(static_cast<std::size_t>(count));
  for (VertexId v = 0; v < count; ++v) out.push_back(spec.coord_of(v));
  return out;
}

int stride(const BoxSpec& spec, int axis) {
  int s = 1;
  for (int i = 0; i < axis; ++i) s *= spec.n;
  return s;
}

using CoordIndex = std::map<Coord, VertexId>;

CoordIndex index_labels(const Graph& g) {
  CoordIndex idx;
  for (VertexId v = 0; v < g.vertex_count(); ++v) idx.emplace(g.label(v), v);
  return idx;
}

EdgeVector oe_cycle_indexed(const GraphPair& pair, Edge e, const CoordIndex& index) {
  const Graph& plain = pair.g;
  const Graph& star = pair.g_plus;
  if (!plain.has_labels()) throw InputError("oe_cycle: graphs carry no coordinates");
  if (!star.adjacent(e.u, e.v)) throw InputError("oe_cycle: edge is not in the star graph");
  if (plain.adjacent(e.u, e.v)) throw InputError("oe_cycle: edge is already a plain edge");

  e = make_edge(e.u, e.v);
  const Coord& from = plain.label(e.u);
  const Coord& to = plain.label(e.v);
  std::vector<int> axes;
  for (std::size_t i = 0; i < from.size(); ++i) {
    int delta = std::abs(from[i] - to[i]);
    if (delta > 1) throw InternalError("oe_cycle: endpoints do not share a unit cube");
    if (delta == 1) axes.push_back(static_cast<int>(i));
  }

  // Every plain path of length |axes| from `from` to `to` flips each
  // differing axis once; enumerate the orders and keep the smallest id
  // sequence among those whose vertices all exist.
  std::vector<VertexId> best;
  std::sort(axes.begin(), axes.end());
  do {
    std::vector<VertexId> walk{e.u};
    Coord cur = from;
    bool ok = true;
    for (int axis : axes) {
      cur[static_cast<std::size_t>(axis)] = to[static_cast<std::size_t>(axis)];
      auto it = index.find(cur);
      if (it == index.end()) {
        ok = false;
        break;
      }
      walk.push_back(it->second);
    }
    if (ok && (best.empty() || walk < best)) best = std::move(walk);
  } while (std::next_permutation(axes.begin(), axes.end()));
  if (best.empty()) throw InternalError("oe_cycle: no plain path inside the unit cube");

  EdgeVector plain_part = EdgeVector::from_walk(plain, best);
  EdgeVector cycle = plain_part.lift(plain, star);
  cycle.flip(*star.edge_id(e.u, e.v));
  if (!is_chordal_cycle(star, cycle, star)) throw InternalError("oe_cycle: constructed cycle is not chordal");
  return cycle;
}

}  // namespace

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::plain: return "plain";
    case Flavor::star: return "star";
    case Flavor::plus: return "plus";
  }
  return "plain";
}

Flavor parse_flavor(std::string_view s) {
  if (s == "plain") return Flavor::plain;
  if (s == "star") return Flavor::star;
  if (s == "plus") return Flavor::plus;
  throw InputError("unknown flavor '" + std::string(s) + "' (expected plain, star or plus)");
}

void BoxSpec::validate() const {
  if (d < 1) throw InputError("box spec: dimension must be at least 1");
  if (n < 1) throw InputError("box spec: side must be at least 1");
  if (flavor == Flavor::plus && d < 2) throw InputError("box spec: plus flavor needs d >= 2");
  long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= n;
    if (total > kMaxBoxVertices) throw InputError("box spec: n^d exceeds the vertex id space");
  }
}

int BoxSpec::vertex_count() const {
  validate();
  int total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  return total;
}

VertexId BoxSpec::id_of(const Coord& c) const {
  if (!contains(c)) throw InputError("coordinate outside the box");
  VertexId id = 0;
  for (int i = d - 1; i >= 0; --i) id = id * n + (c[static_cast<std::size_t>(i)] - 1);
  return id;
}

Coord BoxSpec::coord_of(VertexId v) const {
  Coord c(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    c[static_cast<std::size_t>(i)] = v % n + 1;
    v /= n;
  }
  return c;
}

bool BoxSpec::contains(const Coord& c) const {
  if (c.size() != static_cast<std::size_t>(d)) return false;
  return std::all_of(c.begin(), c.end(), [this](int x) { return x >= 1 && x <= n; });
}

BoxSpec parse_box_spec(std::string_view text) {
  if (text.size() < 2 || text.front() != 'z') throw InputError("box spec must look like z{d}:{n}:{flavor}");
  auto first = text.find(':');
  auto second = text.find(':', first == std::string_view::npos ? first : first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos) {
    throw InputError("box spec must look like z{d}:{n}:{flavor}");
  }
  BoxSpec spec;
  spec.d = parse_int(text.substr(1, first - 1), "dimension");
  spec.n = parse_int(text.substr(first + 1, second - first - 1), "side");
  spec.flavor = parse_flavor(text.substr(second + 1));
  spec.validate();
  return spec;
}

std::string to_string(const BoxSpec& spec) {
  return "z" + std::to_string(spec.d) + ":" + std::to_string(spec.n) + ":" + to_string(spec.flavor);
}

Graph build_box(const BoxSpec& spec) {
  spec.validate();
  const auto coords = box_coords(spec);
  const int count = spec.vertex_count();
  std::vector<Edge> edges;

  auto add_plain = [&](VertexId v, const Coord& c) {
    for (int i = 0; i < spec.d; ++i) {
      if (c[static_cast<std::size_t>(i)] < spec.n) edges.push_back({v, v + stride(spec, i)});
    }
  };

  switch (spec.flavor) {
    case Flavor::plain:
      for (VertexId v = 0; v < count; ++v) add_plain(v, coords[static_cast<std::size_t>(v)]);
      break;
    case Flavor::plus:
      for (VertexId v = 0; v < count; ++v) {
        const Coord& c = coords[static_cast<std::size_t>(v)];
        add_plain(v, c);
        for (int i = 0; i < spec.d; ++i) {
          for (int j = i + 1; j < spec.d; ++j) {
            if (c[static_cast<std::size_t>(i)] == spec.n || c[static_cast<std::size_t>(j)] == spec.n) continue;
            const int si = stride(spec, i);
            const int sj = stride(spec, j);
            edges.push_back({v, v + si + sj});
            edges.push_back({v + si, v + sj});
          }
        }
      }
      break;
    case Flavor::star: {
      // Offsets in {-1,0,1}^d that lead to a larger id.
      std::vector<Coord> offsets;
      Coord off(static_cast<std::size_t>(spec.d), -1);
      while (true) {
        int key = 0;
        for (int i = spec.d - 1; i >= 0; --i) key = key * 3 + off[static_cast<std::size_t>(i)];
        if (key > 0) offsets.push_back(off);
        int k = 0;
        while (k < spec.d && off[static_cast<std::size_t>(k)] == 1) off[static_cast<std::size_t>(k++)] = -1;
        if (k == spec.d) break;
        ++off[static_cast<std::size_t>(k)];
      }
      for (VertexId v = 0; v < count; ++v) {
        const Coord& c = coords[static_cast<std::size_t>(v)];
        for (const Coord& o : offsets) {
          Coord w = c;
          for (std::size_t i = 0; i < w.size(); ++i) w[i] += o[i];
          if (spec.contains(w)) edges.push_back({v, spec.id_of(w)});
        }
      }
      break;
    }
  }
  return Graph(count, edges, coords);
}

std::vector<EdgeVector> basic_four_cycles(const BoxSpec& spec) {
  const BoxSpec plain_spec = spec.with_flavor(Flavor::plain);
  if (spec.d < 2) throw InputError("basic_four_cycles: the cycle space is trivial for d < 2");
  if (spec.flavor != Flavor::plain) throw InputError("basic_four_cycles: expects a plain box spec");
  const Graph g = build_box(plain_spec);

  std::vector<EdgeVector> out;
  for (int i = 0; i < spec.d; ++i) {
    for (int j = i + 1; j < spec.d; ++j) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Coord& c = g.label(v);
        if (c[static_cast<std::size_t>(i)] == spec.n || c[static_cast<std::size_t>(j)] == spec.n) continue;
        const int si = stride(spec, i);
        const int sj = stride(spec, j);
        const std::vector<VertexId> walk{v, v + si, v + si + sj, v + sj, v};
        out.push_back(EdgeVector::from_walk(g, walk));
      }
    }
  }
  return out;
}

EdgeVector oe_cycle(const GraphPair& pair, Edge e) {
  if (!pair.g.has_labels()) throw InputError("oe_cycle: graphs carry no coordinates");
  return oe_cycle_indexed(pair, e, index_labels(pair.g));
}

std::map<Edge, EdgeVector> oe_cycle_map(const GraphPair& pair) {
  if (!pair.g.has_labels()) throw InputError("oe_cycle_map: graphs carry no coordinates");
  const CoordIndex index = index_labels(pair.g);
  std::map<Edge, EdgeVector> out;
  for (const Edge& e : pair.g_plus.edges()) {
    if (!pair.g.adjacent(e.u, e.v)) out.emplace(e, oe_cycle_indexed(pair, e, index));
  }
  return out;
}

Graph add_apex(const Graph& box, VertexSet* shell_out) {
  if (!box.has_labels() || box.vertex_count() == 0) throw InputError("with_apex: graph carries no coordinates");
  const std::size_t d = box.label(0).size();
  Coord lo(d, std::numeric_limits<int>::max());
  Coord hi(d, std::numeric_limits<int>::min());
  for (const Coord& c : box.labels()) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], c[i]);
      hi[i] = std::max(hi[i], c[i]);
    }
  }

  const VertexId apex = box.vertex_count();
  std::vector<Edge> edges = box.edges();
  VertexSet shell(static_cast<std::size_t>(apex) + 1);
  for (VertexId v = 0; v < apex; ++v) {
    const Coord& c = box.label(v);
    bool on_surface = false;
    for (std::size_t i = 0; i < d; ++i) on_surface = on_surface || c[i] == lo[i] || c[i] == hi[i];
    if (on_surface) {
      edges.push_back({v, apex});
      shell.insert(v);
    }
  }
  std::vector<Coord> labels = box.labels();
  labels.push_back(Coord(d, 0));
  if (shell_out) *shell_out = shell;
  return Graph(apex + 1, edges, std::move(labels));
}

ApexGraph with_apex(const GraphPair& pair) {
  ApexGraph out;
  Graph g = add_apex(pair.g, &out.shell);
  Graph g_plus = add_apex(pair.g_plus);
  out.apex = g.vertex_count() - 1;
  out.pair = GraphPair::make(std::move(g), std::move(g_plus));
  return out;
}

int surface_margin(const BoxSpec& spec, const Coord& c) {
  if (!spec.contains(c)) throw InputError("surface_margin: coordinate outside the box");
  int margin = std::numeric_limits<int>::max();
  for (int x : c) margin = std::min({margin, x, spec.n + 1 - x});
  return margin;
}

}  // namespace boundarykit
