#include "mgo/decomposition.hpp"

#include <algorithm>
#include <map>

#include "mgo/connectivity.hpp"

namespace mgo {

DecompReport verify_decomposition(const Decomposition& d) {
  DecompReport report;
  std::map<std::string, int> hits;
  for (const Edge& e : d.parent.edges()) hits[e.id] = 0;
  for (const auto& part : d.parts) {
    for (const auto& id : part) {
      auto it = hits.find(id);
      if (it == hits.end()) {
        report.foreign.push_back(id);
      } else {
        it->second += 1;
      }
    }
  }
  for (const auto& [id, count] : hits) {
    if (count == 0) report.missing.push_back(id);
    if (count > 1) report.duplicated.push_back(id);
  }
  report.partition_ok =
      report.missing.empty() && report.duplicated.empty() && report.foreign.empty();
  report.all_connected = true;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    std::set<std::string> known;
    for (const auto& id : d.parts[i]) {
      if (d.parent.has_edge(id)) known.insert(id);
    }
    bool conn = !known.empty() && is_connected(d.parent.restrict_to(known));
    report.part_connected.push_back(conn);
    report.all_connected = report.all_connected && conn;
  }
  return report;
}

namespace {

/// All edge subsets of size <= cap whose removal increases the component
/// count (arbitrary cuts, minimal or not).
std::vector<std::set<std::string>> enumerate_cuts(const MultiGraph& g, int cap,
                                                  std::size_t max_edges = 20) {
  if (g.edge_count() > max_edges) {
    throw BoundError("strict cut enumeration refused: " + std::to_string(g.edge_count()) +
                     " edges exceed the bound of " + std::to_string(max_edges));
  }
  std::vector<std::string> ids;
  for (const Edge& e : g.edges()) ids.push_back(e.id);
  std::size_t base = components(g).size();
  std::vector<std::set<std::string>> cuts;
  std::vector<std::size_t> pick;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      std::set<std::string> f;
      for (auto i : pick) f.insert(ids[i]);
      if (components(g, f).size() > base) cuts.push_back(std::move(f));
    }
    if (static_cast<int>(pick.size()) == cap) return;
    for (std::size_t i = start; i < ids.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return cuts;
}

}  // namespace

BondFaithReport verify_bond_faithful(const Decomposition& d, int cap, bool strict_cuts) {
  BondFaithReport report;
  report.cap = cap;
  report.strict_cuts = strict_cuts;
  // (a) part bonds must be parent bonds.
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    MultiGraph part = d.part_graph(i);
    for (const CutSet& bond : enumerate_bonds(part, cap)) {
      if (!is_bond(d.parent, bond.edges)) {
        report.violations.push_back({BondViolation::PartBondNotParentBond, i, bond.edges});
      }
    }
  }
  // (b) parent bonds (or cuts, strictly) must live inside a single part.
  auto inside_one_part = [&](const std::set<std::string>& f) {
    for (const auto& part : d.parts) {
      if (std::includes(part.begin(), part.end(), f.begin(), f.end())) return true;
    }
    return false;
  };
  for (const CutSet& bond : enumerate_bonds(d.parent, cap)) {
    if (!inside_one_part(bond.edges)) {
      report.violations.push_back({BondViolation::ParentBondSplit, 0, bond.edges});
    }
  }
  if (strict_cuts) {
    for (const auto& cut : enumerate_cuts(d.parent, cap)) {
      if (!inside_one_part(cut)) {
        report.violations.push_back({BondViolation::ParentCutSplit, 0, cut});
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

namespace {

struct PathSearch {
  const MultiGraph& g;
  const std::string& goal;
  std::size_t budget;
  std::vector<PathInGraph> found = {};
  PathInGraph current = {};
  std::set<std::string> on_path = {};

  void run(const std::string& v) {
    if (found.size() >= budget) return;
    if (v == goal) {
      found.push_back(current);
      return;
    }
    for (const auto& id : g.incident(v)) {
      const std::string& w = g.other_end(g.edge(id), v);
      if (on_path.count(w)) continue;
      on_path.insert(w);
      current.vertices.push_back(w);
      current.edges.push_back(id);
      run(w);
      current.vertices.pop_back();
      current.edges.pop_back();
      on_path.erase(w);
    }
  }
};

}  // namespace

BreakpointsResult breakpoints(const Decomposition& d, const std::string& x, const std::string& y,
                              int cap, std::size_t max_paths) {
  if (x == y) throw InputError("breakpoints needs distinct endpoints");
  if (!d.parent.has_vertex(x) || !d.parent.has_vertex(y)) throw InputError("unknown endpoint");
  std::map<std::string, int> part_of;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    for (const auto& id : d.parts[i]) part_of[id] = static_cast<int>(i);
  }
  for (const Edge& e : d.parent.edges()) {
    if (!part_of.count(e.id)) throw InputError("decomposition does not cover edge " + e.id);
  }

  int lam_parent = lambda(d.parent, x, y);
  if (lam_parent == 0) throw InputError("no path from " + x + " to " + y);

  PathSearch search{d.parent, y, max_paths};
  search.current.vertices.push_back(x);
  search.on_path.insert(x);
  search.run(x);

  auto segment = [&](const PathInGraph& p) {
    BreakpointsResult r;
    r.path = p;
    r.breakpoints.push_back(x);
    std::vector<std::pair<std::size_t, std::size_t>> runs;  // [from, to) edge ranges
    std::size_t start = 0;
    for (std::size_t i = 1; i <= p.edges.size(); ++i) {
      if (i == p.edges.size() || part_of.at(p.edges[i]) != part_of.at(p.edges[start])) {
        runs.push_back({start, i});
        start = i;
      }
    }
    r.lambda_ok = true;
    for (auto [from, to] : runs) {
      BreakpointSegment seg;
      seg.from = p.vertices[from];
      seg.to = p.vertices[to];
      seg.part = part_of.at(p.edges[from]);
      MultiGraph part = d.part_graph(static_cast<std::size_t>(seg.part));
      seg.lambda_part = lambda(part, seg.from, seg.to);
      seg.lambda_parent = lam_parent;
      seg.ok = seg.lambda_part >= std::min(lam_parent, cap);
      r.lambda_ok = r.lambda_ok && seg.ok;
      r.breakpoints.push_back(seg.to);
      r.segments.push_back(std::move(seg));
    }
    return r;
  };

  auto contiguous_parts = [&](const PathInGraph& p) {
    std::set<int> closed;
    int cur = -1;
    for (const auto& id : p.edges) {
      int part = part_of.at(id);
      if (part != cur) {
        if (closed.count(part)) return false;  // part revisited non-contiguously
        if (cur >= 0) closed.insert(cur);
        cur = part;
      }
    }
    return true;
  };

  BreakpointsResult best;
  bool have_best = false;
  for (const PathInGraph& p : search.found) {
    if (!contiguous_parts(p)) continue;
    BreakpointsResult r = segment(p);
    if (r.lambda_ok) return r;
    if (!have_best) {
      best = std::move(r);
      have_best = true;
    }
  }
  if (have_best) return best;
  if (search.found.empty()) throw InputError("no path from " + x + " to " + y);
  return segment(search.found.front());
}

}  // namespace mgo
