#include "mgo/connectivity.hpp"

#include <algorithm>
#include <map>

#include "mgo/flow_net.hpp"

namespace mgo {

namespace {

std::map<std::string, int> vertex_ids(const MultiGraph& g) {
  std::map<std::string, int> idx;
  int i = 0;
  for (const auto& v : g.vertices()) idx[v] = i++;
  return idx;
}

void check_pair(const MultiGraph& g, const std::string& x, const std::string& y) {
  if (!g.has_vertex(x)) throw InputError("unknown vertex '" + x + "'");
  if (!g.has_vertex(y)) throw InputError("unknown vertex '" + y + "'");
  if (x == y) throw InputError("source and target must differ");
}

/// Undirected multigraph as a flow net: per endpoint pair, one arc each way
/// with capacity = multiplicity.
flow::Net undirected_net(const MultiGraph& g, const std::map<std::string, int>& idx) {
  flow::Net net(static_cast<int>(idx.size()));
  std::map<std::pair<int, int>, std::int64_t> caps;
  for (const Edge& e : g.edges()) {
    int a = idx.at(e.u), b = idx.at(e.v);
    caps[{a, b}] += 1;
  }
  for (const auto& [key, cap] : caps) {
    net.add_arc(key.first, key.second, cap);
    net.add_arc(key.second, key.first, cap);
  }
  return net;
}

flow::Net directed_net(const MultiGraph& g, const Orientation& o,
                       const std::map<std::string, int>& idx) {
  flow::Net net(static_cast<int>(idx.size()));
  std::map<std::pair<int, int>, std::int64_t> caps;
  for (const Edge& e : g.edges()) {
    int tail = idx.at(o.tail_of(e)), head = idx.at(o.head_of(e));
    caps[{tail, head}] += 1;
  }
  for (const auto& [key, cap] : caps) net.add_arc(key.first, key.second, cap);
  return net;
}

}  // namespace

int lambda(const MultiGraph& g, const std::string& x, const std::string& y) {
  check_pair(g, x, y);
  auto idx = vertex_ids(g);
  auto net = undirected_net(g, idx);
  return static_cast<int>(net.max_flow(idx.at(x), idx.at(y)));
}

int arc_lambda(const MultiGraph& g, const Orientation& o, const std::string& x,
               const std::string& y) {
  check_pair(g, x, y);
  o.require_total(g);
  auto idx = vertex_ids(g);
  auto net = directed_net(g, o, idx);
  return static_cast<int>(net.max_flow(idx.at(x), idx.at(y)));
}

CutSet min_cut(const MultiGraph& g, const std::string& x, const std::string& y) {
  check_pair(g, x, y);
  auto idx = vertex_ids(g);
  auto net = undirected_net(g, idx);
  std::int64_t value = net.max_flow(idx.at(x), idx.at(y));
  auto side = net.source_side(idx.at(x));
  CutSet cut;
  for (const auto& [v, i] : idx) {
    (side[i] ? cut.side_a : cut.side_b).push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (side[idx.at(e.u)] != side[idx.at(e.v)]) cut.edges.insert(e.id);
  }
  if (static_cast<std::int64_t>(cut.edges.size()) != value) {
    throw Error("internal: min cut witness does not match flow value");
  }
  cut.bond = is_bond(g, cut.edges);
  return cut;
}

bool is_k_edge_connected(const MultiGraph& g, int k) {
  if (k < 0) throw InputError("k must be >= 0");
  if (k == 0 || g.vertex_count() <= 1) return true;
  if (!is_connected(g)) return false;
  // Global edge connectivity = min over u of lambda(v0, u).
  const std::string& v0 = g.vertices().front();
  for (const auto& u : g.vertices()) {
    if (u != v0 && lambda(g, v0, u) < k) return false;
  }
  return true;
}

bool is_bond(const MultiGraph& g, const std::set<std::string>& f) {
  if (f.empty()) return false;
  for (const auto& id : f) {
    if (!g.has_edge(id)) throw InputError("unknown edge id " + id);
  }
  auto before = components(g);
  auto after = components(g, f);
  if (after.size() != before.size() + 1) return false;
  // Identify the two pieces of the split component and demand that f is
  // exactly the boundary between them.
  std::map<std::string, int> piece;
  for (std::size_t i = 0; i < after.size(); ++i) {
    for (const auto& v : after[i]) piece[v] = static_cast<int>(i);
  }
  int pa = -1, pb = -1;
  for (const auto& id : f) {
    const Edge& e = g.edge(id);
    int a = piece.at(e.u), b = piece.at(e.v);
    if (a == b) return false;  // an edge inside one side is redundant
    if (pa < 0) {
      pa = std::min(a, b);
      pb = std::max(a, b);
    } else if (std::min(a, b) != pa || std::max(a, b) != pb) {
      return false;  // edges between different side pairs
    }
  }
  for (const Edge& e : g.edges()) {
    int a = piece.at(e.u), b = piece.at(e.v);
    if (std::min(a, b) == pa && std::max(a, b) == pb && !f.count(e.id)) {
      return false;  // f would not even be a cut between these sides
    }
  }
  return true;
}

std::vector<CutSet> enumerate_bonds(const MultiGraph& g, int max_size,
                                    std::size_t max_vertices) {
  if (max_size < 1) throw InputError("bond size cap must be >= 1");
  if (max_size > kDefaultBondCap + 2) {
    throw BoundError("bond size cap " + std::to_string(max_size) + " exceeds the configured bound");
  }
  if (g.vertex_count() > max_vertices) {
    throw BoundError("bond enumeration refused: " + std::to_string(g.vertex_count()) +
                     " vertices exceed the bound of " + std::to_string(max_vertices));
  }
  std::vector<CutSet> bonds;
  for (const auto& comp : components(g)) {
    if (comp.size() < 2) continue;
    std::vector<std::string> rest(comp.begin() + 1, comp.end());  // comp.front() anchors the other side
    std::size_t n = rest.size();
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      std::set<std::string> side;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1ull << i)) side.insert(rest[i]);
      }
      // Boundary of `side` within this component; anchor is on the other side.
      std::set<std::string> boundary;
      for (const auto& v : side) {
        for (const auto& id : g.incident(v)) {
          if (!side.count(g.other_end(g.edge(id), v))) boundary.insert(id);
        }
      }
      if (boundary.empty() || static_cast<int>(boundary.size()) > max_size) continue;
      MultiGraph inner = g.induced(side);
      if (!is_connected(inner)) continue;
      std::set<std::string> other(comp.begin(), comp.end());
      for (const auto& v : side) other.erase(v);
      if (!is_connected(g.induced(other))) continue;
      CutSet cut;
      cut.edges = boundary;
      cut.side_a.assign(side.begin(), side.end());
      cut.side_b.assign(other.begin(), other.end());
      cut.bond = true;
      bonds.push_back(std::move(cut));
    }
  }
  std::sort(bonds.begin(), bonds.end(), [](const CutSet& a, const CutSet& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return bonds;
}

}  // namespace mgo
