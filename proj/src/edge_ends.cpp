#include "mgo/edge_ends.hpp"

#include <algorithm>

#include "mgo/connectivity.hpp"

namespace mgo {

int EndApprox::escaping_count() const {
  int n = 0;
  for (const auto& c : classes) n += c.escaping ? 1 : 0;
  return n;
}

int EndApprox::class_of(const std::string& v) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::binary_search(classes[i].probe_vertices.begin(), classes[i].probe_vertices.end(), v)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

EndApprox end_classes(const LazyGraph& g, int depth, const std::set<std::string>& cut,
                      int margin) {
  if (depth < 1) throw InputError("end_classes needs depth >= 1");
  if (margin < 0) throw InputError("margin must be >= 0");
  EndApprox out;
  out.family = g.name();
  out.depth = depth;
  out.margin = margin;
  out.cut = cut;
  out.ball = g.ball(g.default_roots(), depth);
  for (const auto& id : cut) {
    if (!out.ball.graph.has_edge(id)) {
      throw InputError("cut edge " + id + " lies outside ball(" + std::to_string(depth) + ")");
    }
  }
  out.probe = g.ball(g.default_roots(), depth + margin);
  for (const auto& comp : components(out.probe.graph, cut)) {
    EndApprox::Class cls;
    cls.probe_vertices = comp;
    for (const auto& v : comp) {
      if (out.ball.graph.has_vertex(v)) cls.vertices.push_back(v);
      if (out.probe.is_boundary(v)) cls.escaping = true;
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

bool refines(const EndApprox& fine, const EndApprox& coarse) {
  if (fine.family != coarse.family || fine.depth != coarse.depth) return false;
  if (!std::includes(fine.cut.begin(), fine.cut.end(), coarse.cut.begin(), coarse.cut.end())) {
    return false;
  }
  for (const auto& fc : fine.classes) {
    int target = -1;
    for (const auto& v : fc.probe_vertices) {
      int c = coarse.class_of(v);
      if (c < 0) return false;
      if (target < 0) target = c;
      if (c != target) return false;  // fine class straddles coarse classes
    }
  }
  return true;
}

EmbedReport check_embedding(const LazyGraph& h, const LazyGraph& g, int depth, int cap,
                            int margin) {
  EmbedReport report;
  Ball hb = h.ball(h.default_roots(), depth);
  Ball gb = g.ball(g.default_roots(), depth);
  report.subgraph_ok = true;
  for (const Edge& e : hb.graph.edges()) {
    if (!gb.graph.has_edge(e.id)) report.subgraph_ok = false;
  }
  if (!report.subgraph_ok) {
    throw InputError("'" + h.name() + "' is not a subgraph of '" + g.name() +
                     "' at depth " + std::to_string(depth));
  }

  // (a) bond-faithfulness evidence at this resolution.
  std::vector<CutSet> h_bonds = enumerate_bonds(hb.graph, cap, 4096);
  report.bond_faithful_ok = true;
  for (const CutSet& bond : h_bonds) {
    if (!is_bond(gb.graph, bond.edges)) {
      report.bond_faithful_ok = false;
      report.bond_violations.push_back(bond.edges);
    }
  }

  // (b) separation transfer: separators that split escaping h-classes must
  // split their images. Candidates: singletons and the h-bonds found above.
  std::vector<std::set<std::string>> candidates;
  for (const Edge& e : hb.graph.edges()) candidates.push_back({e.id});
  for (const CutSet& bond : h_bonds) candidates.push_back(bond.edges);
  report.classes_injective = true;
  for (const auto& f : candidates) {
    EndApprox ha = end_classes(h, depth, f, margin);
    if (ha.escaping_count() < 2) continue;
    EndApprox ga = end_classes(g, depth, f, margin);
    // Representative per escaping h-class: its smallest probe-boundary vertex.
    std::vector<std::pair<std::string, int>> reps;  // (rep, g-class)
    for (const auto& cls : ha.classes) {
      if (!cls.escaping) continue;
      std::string rep;
      for (const auto& v : cls.probe_vertices) {
        if (ha.probe.is_boundary(v)) {
          rep = v;
          break;
        }
      }
      reps.push_back({rep, ga.class_of(rep)});
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        if (reps[i].second == reps[j].second) {
          report.classes_injective = false;
          report.merges.push_back({f, reps[i].first, reps[j].first, reps[i].second});
        }
      }
    }
  }
  report.pass = report.bond_faithful_ok && report.classes_injective;
  return report;
}

int vertex_separation_components(const LazyGraph& g, int depth, int inner_radius) {
  if (inner_radius >= depth) throw InputError("inner radius must be smaller than depth");
  Ball outer = g.ball(g.default_roots(), depth);
  Ball inner = g.ball(g.default_roots(), inner_radius);
  std::set<std::string> removed(inner.graph.vertices().begin(), inner.graph.vertices().end());
  return static_cast<int>(components(outer.graph, {}, removed).size());
}

}  // namespace mgo
