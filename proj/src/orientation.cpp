#include "mgo/orientation.hpp"

#include <algorithm>
#include <map>

#include "mgo/connectivity.hpp"
#include "mgo/flow_net.hpp"

namespace mgo {

bool Orientation::total_on(const MultiGraph& g) const {
  for (const Edge& e : g.edges()) {
    if (!dir.count(e.id)) return false;
  }
  return true;
}

void Orientation::require_total(const MultiGraph& g) const {
  for (const Edge& e : g.edges()) {
    if (!dir.count(e.id)) throw InputError("partial orientation: edge " + e.id + " undirected");
  }
}

Orientation Orientation::restricted_to(const MultiGraph& g) const {
  Orientation out;
  for (const Edge& e : g.edges()) {
    auto it = dir.find(e.id);
    if (it != dir.end()) out.dir[e.id] = it->second;
  }
  return out;
}

OrientMode OrientMode::parse(const std::string& text) {
  if (text == "wb") return well_balanced();
  if (text.rfind("karc:", 0) == 0) {
    try {
      int k = std::stoi(text.substr(5));
      if (k >= 1) return k_arc(k);
    } catch (const std::exception&) {
    }
  }
  throw InputError("bad orientation mode '" + text + "' (expected wb or karc:K)");
}

std::string OrientMode::to_string() const {
  return kind == WellBalanced ? "wb" : "karc:" + std::to_string(k);
}

BalanceReport check_well_balanced(const MultiGraph& g, const Orientation& o) {
  o.require_total(g);
  BalanceReport report;
  report.verdict = true;
  std::map<std::pair<std::string, std::string>, int> lam;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      lam[{vs[i], vs[j]}] = lambda(g, vs[i], vs[j]);
    }
  }
  for (const auto& x : vs) {
    for (const auto& y : vs) {
      if (x == y) continue;
      PairBalance pb;
      pb.x = x;
      pb.y = y;
      pb.lambda = x < y ? lam.at({x, y}) : lam.at({y, x});
      pb.arc_lambda = arc_lambda(g, o, x, y);
      pb.target = pb.lambda / 2;
      pb.ok = pb.arc_lambda >= pb.target;
      report.verdict = report.verdict && pb.ok;
      report.pairs.push_back(std::move(pb));
    }
  }
  return report;
}

KArcReport check_k_arc_connected(const MultiGraph& g, const Orientation& o, int k) {
  o.require_total(g);
  if (k < 1) throw InputError("k must be >= 1");
  KArcReport report;
  report.k = k;
  report.verdict = true;
  for (const auto& x : g.vertices()) {
    for (const auto& y : g.vertices()) {
      if (x == y) continue;
      int a = arc_lambda(g, o, x, y);
      if (a < k) {
        report.verdict = false;
        report.failures.push_back({x, y, lambda(g, x, y), a, k, false});
      }
    }
  }
  return report;
}

namespace {

/// DFS-based starting orientation: tree edges away from the root, back
/// edges toward ancestors (strongly connected on 2-edge-connected graphs),
/// parallel copies alternating.
std::map<std::string, Dir> robbins_heuristic(const MultiGraph& g) {
  std::map<std::string, Dir> h;
  std::map<std::string, int> disc;
  int time = 0;
  for (const auto& root : g.vertices()) {
    if (disc.count(root)) continue;
    std::vector<std::pair<std::string, std::size_t>> stack{{root, 0}};
    disc[root] = time++;
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      const auto& inc = g.incident(v);
      if (it >= inc.size()) {
        stack.pop_back();
        continue;
      }
      const Edge& e = g.edge(inc[it++]);
      if (h.count(e.id)) continue;
      const std::string& w = g.other_end(e, v);
      Dir base;
      if (!disc.count(w)) {
        disc[w] = time++;
        base = (v == e.u) ? Dir::uv : Dir::vu;  // tree edge v -> w
        h[e.id] = base;
        stack.push_back({w, 0});
        continue;
      }
      base = (disc[w] < disc[v]) ? ((v == e.u) ? Dir::uv : Dir::vu)   // edge toward ancestor
                                 : ((v == e.u) ? Dir::vu : Dir::uv);  // seen from the ancestor side
      h[e.id] = base;
    }
  }
  // Parallel copies alternate against copy 0.
  for (const Edge& e : g.edges()) {
    if (e.copy > 0) {
      Dir d0 = h.at(Edge::make_id(e.u, e.v, 0));
      h[e.id] = (e.copy % 2 == 0) ? d0 : flip(d0);
    }
  }
  return h;
}

struct SearchState {
  const MultiGraph& g;
  std::vector<std::string> order = {};             // branch order over edge ids
  std::map<std::string, Dir> heuristic = {};       // value order: heuristic first
  std::vector<std::tuple<int, int, int>> demands = {};  // (x idx, y idx, target)
  std::map<std::string, int> vidx = {};
  std::vector<std::pair<int, int>> ends = {};      // per order position: endpoint indices (u,v)
  std::vector<int> assigned = {};                   // -1 unset, 0 uv, 1 vu
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
  std::size_t last_failed = 0;
  bool budget_hit = false;
  bool pruning_enabled = false;  // off while the heuristic dive is untouched

  /// Achievable upper bound on arc_lambda(x,y): oriented edges one way,
  /// unoriented edges both ways.
  bool demands_satisfiable() {
    int n = static_cast<int>(vidx.size());
    for (std::size_t shift = 0; shift < demands.size(); ++shift) {
      std::size_t di = (last_failed + shift) % demands.size();
      auto [xi, yi, target] = demands[di];
      std::map<std::pair<int, int>, std::int64_t> caps;
      for (std::size_t p = 0; p < assigned.size(); ++p) {
        auto [ui, vi] = ends[p];
        if (assigned[p] == 0) {
          caps[{ui, vi}] += 1;
        } else if (assigned[p] == 1) {
          caps[{vi, ui}] += 1;
        } else {
          caps[{ui, vi}] += 1;
          caps[{vi, ui}] += 1;
        }
      }
      flow::Net net(n);
      for (const auto& [key, cap] : caps) net.add_arc(key.first, key.second, cap);
      if (net.max_flow(xi, yi) < target) {
        last_failed = di;
        return false;
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (++nodes > max_nodes) {
      budget_hit = true;
      return false;
    }
    // The full per-pair flow check runs at every leaf; internal nodes only
    // pay for it once some branch has failed (pruning cannot change the
    // result, only the node count).
    if (pruning_enabled || depth == order.size()) {
      if (!demands_satisfiable()) {
        pruning_enabled = true;
        return false;
      }
    }
    if (depth == order.size()) return true;
    const std::string& id = order[depth];
    int first = heuristic.at(id) == Dir::uv ? 0 : 1;
    for (int attempt = 0; attempt < 2; ++attempt) {
      assigned[depth] = first ^ attempt;
      if (search(depth + 1)) return true;
      if (budget_hit) break;
    }
    assigned[depth] = -1;
    return false;
  }
};

}  // namespace

OrientResult orient_exact(const MultiGraph& g, OrientMode mode, SearchBudget budget) {
  if (g.edge_count() > budget.max_edges) {
    throw BoundError("orient_exact refused: " + std::to_string(g.edge_count()) +
                     " edges exceed the search bound of " + std::to_string(budget.max_edges));
  }
  OrientResult result;
  const auto& vs = g.vertices();
  std::map<std::pair<std::string, std::string>, int> lam;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      lam[{vs[i], vs[j]}] = lambda(g, vs[i], vs[j]);
    }
  }
  if (mode.kind == OrientMode::KArc) {
    // Counting obstruction: lambda(x,y) < 2k forbids arc_lambda >= k both ways.
    for (const auto& [key, l] : lam) {
      if (l < 2 * mode.k) {
        result.status = OrientResult::Unsat;
        result.certificate.x = key.first;
        result.certificate.y = key.second;
        result.certificate.cut = min_cut(g, key.first, key.second).edges;
        result.certificate.reason =
            "lambda(" + key.first + "," + key.second + ") = " + std::to_string(l) +
            " < 2k = " + std::to_string(2 * mode.k);
        return result;
      }
    }
  }

  SearchState state{g};
  state.max_nodes = budget.max_nodes;
  int vi = 0;
  for (const auto& v : vs) state.vidx[v] = vi++;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      int l = i < j ? lam.at({vs[i], vs[j]}) : lam.at({vs[j], vs[i]});
      int target = mode.kind == OrientMode::KArc ? mode.k : l / 2;
      if (target > 0) state.demands.push_back({static_cast<int>(i), static_cast<int>(j), target});
    }
  }

  // Branch on edges by decreasing membership frequency across per-pair min
  // cuts, ties by canonical id.
  std::map<std::string, int> freq;
  for (const Edge& e : g.edges()) freq[e.id] = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (lam.at({vs[i], vs[j]}) == 0) continue;
      for (const auto& id : min_cut(g, vs[i], vs[j]).edges) freq[id] += 1;
    }
  }
  for (const Edge& e : g.edges()) state.order.push_back(e.id);
  std::stable_sort(state.order.begin(), state.order.end(),
                   [&](const std::string& a, const std::string& b) {
                     if (freq[a] != freq[b]) return freq[a] > freq[b];
                     return a < b;
                   });
  for (const auto& id : state.order) {
    const Edge& e = g.edge(id);
    state.ends.push_back({state.vidx.at(e.u), state.vidx.at(e.v)});
  }
  state.heuristic = robbins_heuristic(g);
  state.assigned.assign(state.order.size(), -1);

  bool found = state.search(0);
  result.nodes_explored = state.nodes;
  if (state.budget_hit) {
    result.status = OrientResult::Budget;
    return result;
  }
  if (!found) {
    result.status = OrientResult::Unsat;
    // Exhaustive refutation; name the tightest pair as certificate context.
    auto worst = std::min_element(lam.begin(), lam.end(),
                                  [](const auto& a, const auto& b) { return a.second < b.second; });
    if (worst != lam.end()) {
      result.certificate.x = worst->first.first;
      result.certificate.y = worst->first.second;
      result.certificate.cut = min_cut(g, worst->first.first, worst->first.second).edges;
    }
    result.certificate.reason = "search exhausted without a valid orientation";
    return result;
  }
  Orientation o;
  for (std::size_t p = 0; p < state.order.size(); ++p) {
    o.dir[state.order[p]] = state.assigned[p] == 0 ? Dir::uv : Dir::vu;
  }
  // Certify before returning.
  bool ok = mode.kind == OrientMode::KArc ? check_k_arc_connected(g, o, mode.k).verdict
                                          : check_well_balanced(g, o).verdict;
  if (!ok) throw Error("internal: search produced an uncertified orientation");
  result.status = OrientResult::Found;
  result.orientation = std::move(o);
  return result;
}

Orientation orient_eulerian(const MultiGraph& g) {
  for (const auto& v : g.vertices()) {
    if (g.degree(v) % 2 != 0) {
      throw InputError("orient_eulerian: vertex '" + v + "' has odd degree " +
                       std::to_string(g.degree(v)));
    }
  }
  if (!is_connected(g)) throw InputError("orient_eulerian: graph is not connected");
  Orientation o;
  if (g.edge_count() == 0) return o;

  std::set<std::string> used;
  std::map<std::string, std::size_t> next_edge;
  // Hierholzer with splicing; entry edge recorded per stack frame.
  std::vector<std::pair<std::string, std::string>> stack{{g.vertices().front(), ""}};
  std::vector<std::pair<std::string, std::string>> trail;  // (vertex, edge entered by)
  while (!stack.empty()) {
    const std::string v = stack.back().first;
    const auto& inc = g.incident(v);
    std::size_t& it = next_edge[v];
    while (it < inc.size() && used.count(inc[it])) ++it;
    if (it < inc.size()) {
      const Edge& e = g.edge(inc[it]);
      used.insert(e.id);
      stack.push_back({g.other_end(e, v), e.id});
    } else {
      trail.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(trail.begin(), trail.end());
  for (std::size_t i = 1; i < trail.size(); ++i) {
    const Edge& e = g.edge(trail[i].second);
    o.set(e, trail[i - 1].first);
  }
  if (used.size() != g.edge_count()) throw Error("internal: eulerian trail missed edges");
  return o;
}

std::pair<MultiGraph, Orientation> glue(
    const std::vector<std::pair<MultiGraph, Orientation>>& parts) {
  MultiGraph whole;
  Orientation o;
  for (const auto& [part, po] : parts) {
    po.require_total(part);
    for (const auto& v : part.vertices()) whole.add_vertex(v, part.declared_infinite(v));
    for (const Edge& e : part.edges()) {
      if (o.dir.count(e.id)) {
        throw InputError("glue: edge " + e.id + " appears in more than one part");
      }
      whole.add_edge_copy(e.u, e.v, e.copy);
      o.dir[e.id] = po.dir.at(e.id);
    }
  }
  return {std::move(whole), std::move(o)};
}

}  // namespace mgo
