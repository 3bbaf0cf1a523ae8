#include "mgo/topo.hpp"

#include <algorithm>
#include <deque>

#include "mgo/flow_net.hpp"

namespace mgo {

EndCondensation condense(const LazyGraph& g, int inner, int outer) {
  if (inner < 1 || inner >= outer) throw InputError("need 1 <= inner < outer");
  EndCondensation c;
  c.inner = inner;
  c.outer = outer;
  c.outer_ball = g.ball(g.default_roots(), outer);
  c.inner_ball = g.ball(g.default_roots(), inner);
  std::set<std::string> interior(c.inner_ball.graph.vertices().begin(),
                                 c.inner_ball.graph.vertices().end());
  for (const auto& comp : components(c.outer_ball.graph, {}, interior)) {
    EndCondensation::Node node;
    node.component = comp;
    for (const auto& v : comp) {
      if (c.outer_ball.is_boundary(v)) node.gates.push_back(v);
    }
    if (!node.gates.empty()) c.nodes.push_back(std::move(node));
  }
  return c;
}

namespace {

struct CondGraph {
  EndCondensation cond;
  std::map<std::string, int> vidx;   // ball vertex -> node id
  int node_base = 0;                 // condensation nodes start here
  // Adjacency for reachability search: (neighbor, edge id or node marker).
  struct Hop {
    int to;
    std::string edge;  // empty for end-passage hops
  };
  std::vector<std::vector<Hop>> adj;

  int total_nodes() const { return node_base + static_cast<int>(cond.nodes.size()); }
};

CondGraph build(const LazyGraph& g, const Orientation* o, int inner, int outer,
                const std::set<std::string>& forbidden) {
  CondGraph cg;
  cg.cond = condense(g, inner, outer);
  const MultiGraph& ball = cg.cond.outer_ball.graph;
  if (o) o->require_total(ball);
  int i = 0;
  for (const auto& v : ball.vertices()) cg.vidx[v] = i++;
  cg.node_base = i;
  cg.adj.resize(cg.total_nodes());
  for (const Edge& e : ball.edges()) {
    if (forbidden.count(e.id)) continue;
    int ui = cg.vidx.at(e.u), vi = cg.vidx.at(e.v);
    if (o) {
      cg.adj[cg.vidx.at(o->tail_of(e))].push_back({cg.vidx.at(o->head_of(e)), e.id});
    } else {
      cg.adj[ui].push_back({vi, e.id});
      cg.adj[vi].push_back({ui, e.id});
    }
  }
  for (std::size_t n = 0; n < cg.cond.nodes.size(); ++n) {
    int nid = cg.node_base + static_cast<int>(n);
    for (const auto& gate : cg.cond.nodes[n].gates) {
      cg.adj[cg.vidx.at(gate)].push_back({nid, ""});
      cg.adj[nid].push_back({cg.vidx.at(gate), ""});
    }
  }
  return cg;
}

void check_endpoints(const CondGraph& cg, const std::string& x, const std::string& y) {
  if (!cg.cond.inner_ball.graph.has_vertex(x) || cg.cond.outer_ball.is_boundary(x)) {
    throw InputError("'" + x + "' is not an interior vertex at inner radius " +
                     std::to_string(cg.cond.inner));
  }
  if (!cg.cond.inner_ball.graph.has_vertex(y) || cg.cond.outer_ball.is_boundary(y)) {
    throw InputError("'" + y + "' is not an interior vertex at inner radius " +
                     std::to_string(cg.cond.inner));
  }
  if (x == y) throw InputError("source and target must differ");
}

/// BFS path in the condensation graph; a simple path is a valid witness.
bool reach_with_witness(const CondGraph& cg, const std::string& x, const std::string& y,
                        TopoWitness* witness) {
  int s = cg.vidx.at(x), t = cg.vidx.at(y);
  std::vector<int> parent(cg.total_nodes(), -1);
  std::vector<std::string> via(cg.total_nodes());
  std::deque<int> queue{s};
  parent[s] = s;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (const auto& hop : cg.adj[v]) {
      if (parent[hop.to] < 0) {
        parent[hop.to] = v;
        via[hop.to] = hop.edge;
        queue.push_back(hop.to);
      }
    }
  }
  if (parent[t] < 0) return false;
  if (!witness) return true;
  std::vector<std::string> names(cg.total_nodes());
  for (const auto& [name, id] : cg.vidx) names[id] = name;
  std::vector<int> chain;
  for (int v = t; v != s; v = parent[v]) chain.push_back(v);
  chain.push_back(s);
  std::reverse(chain.begin(), chain.end());
  witness->segments.clear();
  witness->nodes.clear();
  PathInGraph seg;
  seg.vertices.push_back(names[chain[0]]);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    int v = chain[i];
    if (v >= cg.node_base) {
      witness->segments.push_back(seg);
      witness->nodes.push_back(v - cg.node_base);
      seg = {};
      continue;
    }
    if (seg.vertices.empty()) {
      seg.vertices.push_back(names[v]);  // fresh segment starts at a gate
      continue;
    }
    seg.vertices.push_back(names[v]);
    seg.edges.push_back(via[v]);
  }
  witness->segments.push_back(seg);
  return true;
}

TopoCutResult cut_result(const LazyGraph& g, const Orientation* o, const std::string& x,
                         const std::string& y, int inner, int outer, int cap) {
  TopoCutResult result;
  for (int r = inner; r < outer; ++r) {
    CondGraph cg = build(g, o, r, outer, {});
    if (r == inner) check_endpoints(cg, x, y);
    const MultiGraph& ball = cg.cond.outer_ball.graph;
    flow::Net net(cg.total_nodes());
    std::map<std::pair<int, int>, std::int64_t> caps;
    for (const Edge& e : ball.edges()) {
      if (o) {
        caps[{cg.vidx.at(o->tail_of(e)), cg.vidx.at(o->head_of(e))}] += 1;
      } else {
        caps[{cg.vidx.at(e.u), cg.vidx.at(e.v)}] += 1;
        caps[{cg.vidx.at(e.v), cg.vidx.at(e.u)}] += 1;
      }
    }
    for (const auto& [key, c] : caps) net.add_arc(key.first, key.second, c);
    for (std::size_t n = 0; n < cg.cond.nodes.size(); ++n) {
      int nid = cg.node_base + static_cast<int>(n);
      for (const auto& gate : cg.cond.nodes[n].gates) {
        net.add_arc(cg.vidx.at(gate), nid, flow::Net::kInf / 4);
        net.add_arc(nid, cg.vidx.at(gate), flow::Net::kInf / 4);
      }
    }
    int value = static_cast<int>(net.max_flow(cg.vidx.at(x), cg.vidx.at(y)));
    result.sweep[r] = value;
    if (r == inner) {
      result.value = value;
      result.cap_exceeded = value > cap;
      if (!result.cap_exceeded) {
        auto side = net.source_side(cg.vidx.at(x));
        for (const Edge& e : ball.edges()) {
          bool crosses;
          if (o) {
            crosses = side[cg.vidx.at(o->tail_of(e))] && !side[cg.vidx.at(o->head_of(e))];
          } else {
            crosses = side[cg.vidx.at(e.u)] != side[cg.vidx.at(e.v)];
          }
          if (crosses) result.cut.insert(e.id);
        }
      }
    }
  }
  result.stable = true;
  for (const auto& [r, v] : result.sweep) result.stable = result.stable && v == result.value;
  return result;
}

}  // namespace

TopoReachResult topo_reach(const LazyGraph& g, const Orientation& o, const std::string& x,
                           const std::string& y, int inner, int outer,
                           const std::set<std::string>& forbidden) {
  TopoReachResult result;
  for (int r = inner; r < outer; ++r) {
    CondGraph cg = build(g, &o, r, outer, forbidden);
    if (r == inner) {
      check_endpoints(cg, x, y);
      result.reachable = reach_with_witness(cg, x, y, &result.witness);
      result.sweep[r] = result.reachable;
    } else {
      result.sweep[r] = reach_with_witness(cg, x, y, nullptr);
    }
  }
  result.stable = true;
  for (const auto& [r, v] : result.sweep) result.stable = result.stable && v == result.reachable;
  return result;
}

TopoCutResult topo_lambda(const LazyGraph& g, const std::string& x, const std::string& y,
                          int inner, int outer, int cap) {
  return cut_result(g, nullptr, x, y, inner, outer, cap);
}

TopoCutResult topo_arc_lambda(const LazyGraph& g, const Orientation& o, const std::string& x,
                              const std::string& y, int inner, int outer, int cap) {
  return cut_result(g, &o, x, y, inner, outer, cap);
}

}  // namespace mgo
