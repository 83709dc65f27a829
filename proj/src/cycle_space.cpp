#include "boundarykit/cycle_space.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace boundarykit {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
constexpr auto kNpos = Bits::npos;

}  // namespace

EdgeVector::EdgeVector(const Graph& host)
    : host_(host.fingerprint()), bits_(static_cast<std::size_t>(host.edge_count())) {}

EdgeVector EdgeVector::from_edges(const Graph& host, std::span<const Edge> edges) {
  EdgeVector out(host);
  for (const Edge& e : edges) {
    auto id = host.edge_id(e.u, e.v);
    if (!id) throw InputError("edge [" + std::to_string(e.u) + "," + std::to_string(e.v) + "] not in host graph");
    out.flip(*id);
  }
  return out;
}

EdgeVector EdgeVector::from_walk(const Graph& host, std::span<const VertexId> walk) {
  EdgeVector out(host);
  for (std::size_t i = 1; i < walk.size(); ++i) {
    auto id = host.edge_id(walk[i - 1], walk[i]);
    if (!id) {
      throw InputError("walk step " + std::to_string(walk[i - 1]) + "->" + std::to_string(walk[i]) +
                       " is not an edge");
    }
    out.flip(*id);
  }
  return out;
}

std::vector<EdgeId> EdgeVector::edge_ids() const {
  std::vector<EdgeId> out;
  for (auto i = bits_.find_first(); i != kNpos; i = bits_.find_next(i)) out.push_back(static_cast<EdgeId>(i));
  return out;
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& other) {
  if (host_ != other.host_ || bits_.size() != other.bits_.size()) {
    throw InputError("adding edge vectors of different host graphs");
  }
  bits_ ^= other.bits_;
  return *this;
}

void EdgeVector::require_host(const Graph& host) const {
  if (host_ != host.fingerprint() || bits_.size() != static_cast<std::size_t>(host.edge_count())) {
    throw InputError("edge vector does not belong to the given graph");
  }
}

VertexSet EdgeVector::vertices(const Graph& host) const {
  require_host(host);
  VertexSet out = host.empty_set();
  for (EdgeId id : edge_ids()) {
    out.insert(host.edge(id).u);
    out.insert(host.edge(id).v);
  }
  return out;
}

std::vector<int> EdgeVector::degrees(const Graph& host) const {
  require_host(host);
  std::vector<int> deg(static_cast<std::size_t>(host.vertex_count()), 0);
  for (EdgeId id : edge_ids()) {
    ++deg[static_cast<std::size_t>(host.edge(id).u)];
    ++deg[static_cast<std::size_t>(host.edge(id).v)];
  }
  return deg;
}

bool EdgeVector::all_degrees_even(const Graph& host) const {
  auto deg = degrees(host);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

bool EdgeVector::is_cycle(const Graph& host) const {
  if (empty()) return false;
  auto deg = degrees(host);
  if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) return false;

  // Walk the edge set from one vertex; a single cycle visits every edge.
  auto ids = edge_ids();
  VertexId start = host.edge(ids.front()).u;
  VertexId prev = -1;
  VertexId cur = start;
  std::size_t steps = 0;
  do {
    VertexId next = -1;
    const auto& nbrs = host.neighbors(cur);
    const auto& inc = host.incident_edges(cur);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (contains(inc[i]) && nbrs[i] != prev) {
        next = nbrs[i];
        break;
      }
    }
    if (next < 0) return false;
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != start && steps <= ids.size());
  return cur == start && steps == ids.size();
}

EdgeVector EdgeVector::lift(const Graph& from, const Graph& to) const {
  require_host(from);
  EdgeVector out(to);
  for (EdgeId id : edge_ids()) {
    const Edge& e = from.edge(id);
    auto target = to.edge_id(e.u, e.v);
    if (!target) {
      throw InputError("cannot lift edge [" + std::to_string(e.u) + "," + std::to_string(e.v) + "]");
    }
    out.flip(*target);
  }
  return out;
}

nlohmann::json EdgeVector::to_json(const Graph& host) const {
  require_host(host);
  nlohmann::json out = nlohmann::json::array();
  for (EdgeId id : edge_ids()) {
    const Edge& e = host.edge(id);
    if (host.has_labels()) {
      out.push_back({host.label(e.u), host.label(e.v)});
    } else {
      out.push_back({e.u, e.v});
    }
  }
  return out;
}

CycleGen::CycleGen(const Graph& host, std::vector<EdgeVector> cycles)
    : host_(host.fingerprint()),
      cycles_(std::move(cycles)),
      pivot_row_(static_cast<std::size_t>(host.edge_count()), -1) {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    cycles_[i].require_host(host);
    if (!cycles_[i].is_cycle(host)) throw InputError("generator " + std::to_string(i) + " is not a cycle");

    Row row{cycles_[i].bits(), Bits(cycles_.size())};
    row.combo.set(i);
    for (auto pivot = row.bits.find_first(); pivot != kNpos; pivot = row.bits.find_first()) {
      int r = pivot_row_[pivot];
      if (r < 0) {
        pivot_row_[pivot] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        break;
      }
      row.bits ^= rows_[static_cast<std::size_t>(r)].bits;
      row.combo ^= rows_[static_cast<std::size_t>(r)].combo;
    }
  }
}

std::vector<std::size_t> CycleGen::decompose(const Graph& host, const EdgeVector& target) const {
  if (host.fingerprint() != host_) throw InputError("decompose: generators belong to a different graph");
  target.require_host(host);
  if (!target.all_degrees_even(host)) throw InputError("decompose: target has odd-degree vertices");

  Bits rest = target.bits();
  Bits combo(cycles_.size());
  for (auto pivot = rest.find_first(); pivot != kNpos; pivot = rest.find_first()) {
    int r = pivot_row_[pivot];
    if (r < 0) throw NotInSpan("decompose: target is not in the span of the generators");
    rest ^= rows_[static_cast<std::size_t>(r)].bits;
    combo ^= rows_[static_cast<std::size_t>(r)].combo;
  }

  std::vector<std::size_t> out;
  for (auto i = combo.find_first(); i != kNpos; i = combo.find_next(i)) out.push_back(i);
  return out;
}

std::uint64_t CycleGen::fingerprint() const {
  std::uint64_t h = host_ ^ 0x9e3779b97f4a7c15ULL;
  for (const auto& c : cycles_) {
    for (EdgeId id : c.edge_ids()) h = (h ^ static_cast<std::uint64_t>(id)) * 0x100000001b3ULL;
    h = (h ^ 0xffULL) * 0x100000001b3ULL;
  }
  return h;
}

CycleGen fundamental_basis(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n == 0) return CycleGen(g, {});

  std::vector<VertexId> parent(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<int> depth(n, 0);
  parent[0] = 0;
  std::deque<VertexId> queue{0};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    const auto& nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      VertexId w = nbrs[i];
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = v;
        parent_edge[static_cast<std::size_t>(w)] = g.incident_edges(v)[i];
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  if (std::any_of(parent.begin(), parent.end(), [](VertexId p) { return p < 0; })) {
    throw InputError("fundamental_basis: graph is disconnected");
  }

  std::vector<bool> tree(static_cast<std::size_t>(g.edge_count()), false);
  for (std::size_t v = 1; v < n; ++v) tree[static_cast<std::size_t>(parent_edge[v])] = true;

  std::vector<EdgeVector> cycles;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (tree[static_cast<std::size_t>(id)]) continue;
    EdgeVector cycle(g);
    cycle.flip(id);
    VertexId a = g.edge(id).u;
    VertexId b = g.edge(id).v;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
      cycle.flip(parent_edge[static_cast<std::size_t>(a)]);
      a = parent[static_cast<std::size_t>(a)];
    }
    cycles.push_back(std::move(cycle));
  }
  return CycleGen(g, std::move(cycles));
}

bool is_generating(const CycleGen& gen, const Graph& g) {
  if (gen.host_fingerprint() != g.fingerprint()) throw InputError("is_generating: generators use foreign edges");
  const long expected =
      static_cast<long>(g.edge_count()) - g.vertex_count() + component_count(g, g.all_vertices());
  return static_cast<long>(gen.rank()) == expected;
}

bool is_chordal_cycle(const Graph& host, const EdgeVector& o, const Graph& g_plus) {
  if (!o.is_cycle(host)) throw InputError("is_chordal_cycle: edge set is not a cycle");
  if (g_plus.vertex_count() != host.vertex_count()) throw InputError("is_chordal_cycle: vertex sets differ");
  auto verts = o.vertices(host).members();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g_plus.adjacent(verts[i], verts[j])) return false;
    }
  }
  return true;
}

EdgeVector x_side_cut_edges(const Graph& g, const VertexSet& s1, const VertexSet& s2, VertexId x) {
  VertexSet x_side = component_of(g, x, s1 | s2);
  EdgeVector out(g);
  for (VertexId v : s2.members()) {
    const auto& nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (x_side.contains(nbrs[i])) out.flip(g.incident_edges(v)[i]);
    }
  }
  return out;
}

SeparatingCycle separating_cycle_witness(const Graph& g, const CycleGen& gen, const VertexSet& s1,
                                         const VertexSet& s2, VertexId x, VertexId y) {
  g.require_valid(x);
  g.require_valid(y);
  if (s1.empty() || s2.empty()) throw InputError("witness: both parts of the partition must be nonempty");
  if (s1.intersects(s2)) throw InputError("witness: parts of the partition overlap");
  const VertexSet cut = s1 | s2;
  if (cut.contains(x) || cut.contains(y)) throw InputError("witness: x or y lies in the cutset");
  if (x == y) throw InputError("witness: x and y coincide");
  if (!is_generating(gen, g)) throw InputError("witness: generators do not span the cycle space");
  VertexSet target = g.empty_set();
  target.insert(y);
  if (!is_minimal_cutset(g, cut, x, target)) throw InputError("witness: cutset is not a minimal x-y cutset");

  auto p1 = shortest_path(g, x, y, s2);
  auto p2 = shortest_path(g, x, y, s1);
  if (p1.empty() || p2.empty()) throw InternalError("witness: no path avoiding one part of a minimal cutset");

  EdgeVector sum = EdgeVector::from_walk(g, p1) + EdgeVector::from_walk(g, p2);
  auto summands = gen.decompose(g, sum);
  EdgeVector e2 = x_side_cut_edges(g, s1, s2, x);

  for (std::size_t i : summands) {
    const EdgeVector& o = gen[i];
    if (!o.vertices(g).intersects(s1)) continue;
    std::size_t crossings = o.overlap(e2);
    if (crossings % 2 == 1) return SeparatingCycle{i, o, crossings};
  }
  throw InternalError("witness: no generator meets s1 with an odd number of x-side edges at s2");
}

}  // namespace boundarykit
