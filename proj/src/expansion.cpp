#include "mgo/expansion.hpp"

#include <algorithm>

#include "mgo/connectivity.hpp"

namespace mgo {

namespace {

std::string ray_vertex_id(const std::string& target, int index) {
  return "(" + target + "," + std::to_string(index) + ")";
}

/// Parallel copies of the ray step leaving index slot `step` (0-based over
/// consecutive ray vertex pairs).
int step_multiplicity(const ExpandedGraph& e, int step) {
  return e.mode == ExpandMode::KRay ? e.l : step + 1;
}

}  // namespace

const std::string& ExpandedGraph::project_vertex(const std::string& carrier_vertex) const {
  auto it = vertex_origin.find(carrier_vertex);
  if (it == vertex_origin.end()) throw InputError("unknown carrier vertex '" + carrier_vertex + "'");
  return it->second;
}

const std::string& ExpandedGraph::ray_vertex(const std::string& target, int index) const {
  auto it = ray_vertices.find(target);
  if (it == ray_vertices.end()) throw InputError("'" + target + "' is not an expanded vertex");
  int base = mode == ExpandMode::KRay ? 0 : 1;
  int slot = index - base;
  if (slot < 0 || slot >= static_cast<int>(it->second.size())) {
    throw InputError("ray index " + std::to_string(index) + " out of range for " + target);
  }
  return it->second[slot];
}

ExpandedGraph expand(const MultiGraph& g, const std::set<std::string>& targets, ExpandMode mode,
                     int l, const std::map<std::string, std::vector<std::string>>* enum_order,
                     const std::map<std::string, int>* ray_len_override) {
  if (mode == ExpandMode::KRay && l < 1) throw InputError("kray expansion needs l >= 1");
  ExpandedGraph out;
  out.origin = g;
  out.targets = targets;
  out.mode = mode;
  out.l = mode == ExpandMode::KRay ? l : 0;

  std::map<std::string, std::vector<std::string>> order;  // target -> E(v) enumeration
  for (const auto& t : targets) {
    if (!g.has_vertex(t)) throw InputError("expand target '" + t + "' not in graph");
    if (g.degree(t) < 2) {
      throw InputError("expand target '" + t + "' has degree " + std::to_string(g.degree(t)) +
                       "; expansion is degenerate below 2");
    }
    if (enum_order && enum_order->count(t)) {
      const auto& given = enum_order->at(t);
      std::set<std::string> expected(g.incident(t).begin(), g.incident(t).end());
      std::set<std::string> got(given.begin(), given.end());
      if (expected != got || given.size() != g.incident(t).size()) {
        throw InputError("enumeration override for '" + t + "' must permute its incident edges");
      }
      order[t] = given;
    } else {
      order[t] = g.incident(t);  // canonical edge-id order
    }
  }

  // Vertices: non-targets carried over, targets replaced by rays.
  int index_base = mode == ExpandMode::KRay ? 0 : 1;
  for (const auto& v : g.vertices()) {
    if (!targets.count(v)) {
      out.carrier.add_vertex(v, g.declared_infinite(v));
      out.vertex_origin[v] = v;
    }
  }
  for (const auto& t : targets) {
    int len = g.degree(t);
    if (ray_len_override && ray_len_override->count(t)) {
      len = std::max(len, ray_len_override->at(t));
    }
    auto& ray = out.ray_vertices[t];
    for (int i = 0; i < len; ++i) {
      std::string id = ray_vertex_id(t, index_base + i);
      out.carrier.add_vertex(id);
      out.vertex_origin[id] = t;
      ray.push_back(id);
    }
    for (int step = 0; step + 1 < len; ++step) {
      int mult = mode == ExpandMode::KRay ? l : step + 1;
      for (int j = 0; j < mult; ++j) {
        out.carrier.add_edge_copy(ray[step], ray[step + 1], j);
        out.ray_edges[t].insert(Edge::make_id(ray[step], ray[step + 1], j));
      }
    }
    const auto& en = order.at(t);
    for (std::size_t i = 0; i < en.size(); ++i) out.attach[t][en[i]] = static_cast<int>(i);
  }

  // Original edges, endpoints moved to their attachment slots.
  std::map<std::pair<std::string, std::string>, int> copy_counter;
  for (const Edge& e : g.edges()) {
    auto endpoint = [&](const std::string& v) -> std::string {
      if (!targets.count(v)) return v;
      return out.ray_vertices.at(v)[out.attach.at(v).at(e.id)];
    };
    std::string a = endpoint(e.u);
    std::string b = endpoint(e.v);
    const std::string& cu = a < b ? a : b;
    const std::string& cv = a < b ? b : a;
    int copy = copy_counter[{cu, cv}]++;
    out.carrier.add_edge_copy(cu, cv, copy);
    std::string cid = Edge::make_id(cu, cv, copy);
    out.carrier_of_origin[e.id] = cid;
    out.origin_of_carrier[cid] = e.id;
    // cu == a means the image of e.u stayed first in canonical order.
    out.endpoint_flipped[e.id] = (cu != a);
  }
  return out;
}

namespace {

/// Appends the ray segment of `t` between enumeration indices `from` and
/// `to` (exclusive of the starting vertex) to path p, avoiding forbidden
/// copies per step.
void append_ray_segment(const ExpandedGraph& e, const std::string& t, int from, int to,
                        const std::set<std::string>& forbidden, PathInGraph& p) {
  if (from == to) return;
  const auto& ray = e.ray_vertices.at(t);
  int base = e.mode == ExpandMode::KRay ? 0 : 1;
  int lo = from - base, hi = to - base;
  int dir = lo < hi ? 1 : -1;
  for (int s = lo; s != hi; s += dir) {
    int step = dir > 0 ? s : s - 1;  // step between ray[step] and ray[step+1]
    const std::string& from_v = ray[s];
    const std::string& to_v = ray[s + dir];
    int mult = step_multiplicity(e, step);
    std::string chosen;
    for (int j = 0; j < mult; ++j) {
      std::string id = Edge::make_id(std::min(from_v, to_v), std::max(from_v, to_v), j);
      if (!forbidden.count(id) && std::find(p.edges.begin(), p.edges.end(), id) == p.edges.end()) {
        chosen = id;
        break;
      }
    }
    if (chosen.empty()) {
      throw InputError("lift_path: every parallel copy of ray step " + from_v + "~" + to_v +
                       " is forbidden");
    }
    p.edges.push_back(chosen);
    p.vertices.push_back(to_v);
  }
}

}  // namespace

PathInGraph lift_path(const ExpandedGraph& e, const PathInGraph& origin_path,
                      const std::set<std::string>& forbidden) {
  validate_path(e.origin, origin_path);
  PathInGraph lifted;
  const auto& ov = origin_path.vertices;
  const auto& oe = origin_path.edges;

  auto attach_index = [&](const std::string& t, const std::string& edge_id) {
    return e.attach.at(t).at(edge_id) + (e.mode == ExpandMode::KRay ? 0 : 1);
  };

  // Starting vertex: targets enter at the attachment slot of their first edge.
  if (ov.size() == 1) {
    lifted.vertices.push_back(e.targets.count(ov[0]) ? e.ray_vertices.at(ov[0]).front() : ov[0]);
    return lifted;
  }
  lifted.vertices.push_back(e.targets.count(ov[0]) ? e.ray_vertex(ov[0], attach_index(ov[0], oe[0]))
                                                   : ov[0]);
  for (std::size_t i = 0; i < oe.size(); ++i) {
    const std::string& cid = e.carrier_of_origin.at(oe[i]);
    if (forbidden.count(cid)) {
      throw InputError("lift_path: original edge image " + cid + " is forbidden");
    }
    const Edge& ce = e.carrier.edge(cid);
    const std::string& cur = lifted.vertices.back();
    lifted.edges.push_back(cid);
    lifted.vertices.push_back(e.carrier.other_end(ce, cur));
    // Walk along the ray of the next origin vertex to the next attachment.
    const std::string& nxt = ov[i + 1];
    if (e.targets.count(nxt) && i + 1 < oe.size()) {
      int here = attach_index(nxt, oe[i]);
      int there = attach_index(nxt, oe[i + 1]);
      append_ray_segment(e, nxt, here, there, forbidden, lifted);
    }
  }
  validate_path(e.carrier, lifted);
  return lifted;
}

ProjectedPath project_path(const ExpandedGraph& e, const PathInGraph& q) {
  validate_path(e.carrier, q);
  ProjectedPath out;
  out.trail.vertices.push_back(e.project_vertex(q.vertices[0]));
  for (std::size_t i = 0; i < q.edges.size(); ++i) {
    if (e.is_ray_edge(q.edges[i])) continue;
    out.trail.edges.push_back(e.origin_of_carrier.at(q.edges[i]));
    out.trail.vertices.push_back(e.project_vertex(q.vertices[i + 1]));
  }
  // Cycle removal: truncate back to the first occurrence on revisit.
  PathInGraph& sp = out.simple_path;
  sp.vertices.push_back(out.trail.vertices[0]);
  for (std::size_t i = 0; i < out.trail.edges.size(); ++i) {
    const std::string& next = out.trail.vertices[i + 1];
    auto seen = std::find(sp.vertices.begin(), sp.vertices.end(), next);
    if (seen != sp.vertices.end()) {
      std::size_t keep = static_cast<std::size_t>(seen - sp.vertices.begin());
      sp.vertices.resize(keep + 1);
      sp.edges.resize(keep);
    } else {
      sp.vertices.push_back(next);
      sp.edges.push_back(out.trail.edges[i]);
    }
  }
  return out;
}

Orientation induce_orientation(const ExpandedGraph& e, const Orientation& carrier_orientation) {
  carrier_orientation.require_total(e.carrier);
  Orientation induced;
  for (const Edge& oe : e.origin.edges()) {
    Dir d = carrier_orientation.dir.at(e.carrier_of_origin.at(oe.id));
    induced.dir[oe.id] = e.endpoint_flipped.at(oe.id) ? flip(d) : d;
  }
  return induced;
}

std::pair<std::string, std::string> connectivity_witness_pair(const ExpandedGraph& e,
                                                              const std::string& u,
                                                              const std::string& v) {
  if (e.mode != ExpandMode::Expanding) {
    throw InputError("connectivity_witness_pair requires an expanding-ray expansion");
  }
  if (u == v) throw InputError("witness pair needs distinct vertices");
  int m = lambda(e.origin, u, v);
  auto lift = [&](const std::string& w) -> std::string {
    if (!e.targets.count(w)) return w;
    const auto& ray = e.ray_vertices.at(w);
    int index = std::max(1, m);  // λ = 0 still needs a representative
    if (index > static_cast<int>(ray.size())) {
      throw BoundError("truncated ray of '" + w + "' has " + std::to_string(ray.size()) +
                       " vertices; witness index " + std::to_string(index) + " requires at least " +
                       std::to_string(index));
    }
    return ray[index - 1];  // expanding rays are 1-based
  };
  return {lift(u), lift(v)};
}

}  // namespace mgo
