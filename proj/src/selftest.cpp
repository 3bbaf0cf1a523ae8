#include "mgo/selftest.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mgo/connectivity.hpp"
#include "mgo/decomposition.hpp"
#include "mgo/edge_ends.hpp"
#include "mgo/expansion.hpp"
#include "mgo/flimit.hpp"
#include "mgo/json_io.hpp"
#include "mgo/oracle.hpp"
#include "mgo/orientation.hpp"
#include "mgo/rng.hpp"
#include "mgo/topo.hpp"

namespace mgo {

namespace {

CriterionResult result(int number, const std::string& name, bool pass, const std::string& detail) {
  return {number, name, pass, detail};
}

std::string counts(int ok, int total) {
  return std::to_string(ok) + "/" + std::to_string(total) + " checks";
}

std::string pick_vertex(Rng& rng, const MultiGraph& g) {
  const auto& vs = g.vertices();
  return vs[static_cast<std::size_t>(rng.below(static_cast<int>(vs.size())))];
}

std::string max_degree_vertex(const MultiGraph& g) {
  std::string hub = g.vertices().front();
  for (const auto& v : g.vertices()) {
    if (g.degree(v) > g.degree(hub)) hub = v;
  }
  return hub;
}

/// Integer-indexed component scan for hot loops (criterion 4 and 9).
struct FastComponents {
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge idx)
  std::map<std::string, int> vid;
  std::map<std::string, int> eid;
  std::vector<bool> boundary;

  explicit FastComponents(const Ball& ball) {
    const MultiGraph& g = ball.graph;
    int i = 0;
    for (const auto& v : g.vertices()) vid[v] = i++;
    adj.resize(g.vertex_count());
    boundary.assign(g.vertex_count(), false);
    for (const auto& v : ball.boundary) boundary[static_cast<std::size_t>(vid.at(v))] = true;
    int e = 0;
    for (const Edge& ed : g.edges()) {
      eid[ed.id] = e;
      adj[static_cast<std::size_t>(vid.at(ed.u))].push_back({vid.at(ed.v), e});
      adj[static_cast<std::size_t>(vid.at(ed.v))].push_back({vid.at(ed.u), e});
      ++e;
    }
  }

  /// Number of components touching the boundary after deleting `removed`.
  int escaping_components(const std::vector<int>& removed) const {
    std::vector<bool> cut(eid.size(), false);
    for (int e : removed) cut[static_cast<std::size_t>(e)] = true;
    std::vector<int> seen(adj.size(), 0);
    std::vector<int> stack;
    int escaping = 0;
    for (int s = 0; s < static_cast<int>(adj.size()); ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      bool escapes = false;
      stack.assign(1, s);
      seen[static_cast<std::size_t>(s)] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (boundary[static_cast<std::size_t>(v)]) escapes = true;
        for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
          if (cut[static_cast<std::size_t>(e)] || seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
      if (escapes) ++escaping;
    }
    return escaping;
  }
};

// ---- criteria ------------------------------------------------------------

CriterionResult c01_oracle_soundness(std::uint64_t seed) {
  Rng rng(seed ^ 0x01);
  int ok = 0, total = 0;
  for (int i = 0; i < 200; ++i) {
    MultiGraph g = gen::random_multigraph(rng, 8);
    Orientation o;
    for (const Edge& e : g.edges()) o.dir[e.id] = rng.coin() ? Dir::uv : Dir::vu;
    std::string x = pick_vertex(rng, g);
    std::string y = pick_vertex(rng, g);
    if (x == y) y = x == g.vertices().front() ? g.vertices().back() : g.vertices().front();
    ++total;
    bool lam_ok = lambda(g, x, y) == oracle::lambda_bruteforce(g, x, y);
    bool arc_ok = arc_lambda(g, o, x, y) == oracle::arc_packing_bruteforce(g, o, x, y);
    if (lam_ok && arc_ok) ++ok;
  }
  return result(1, "oracle-soundness", ok == total, counts(ok, total));
}

CriterionResult c02_karc_orientability(std::uint64_t seed) {
  Rng rng(seed ^ 0x02);
  int ok = 0, total = 0;
  for (int k : {1, 2}) {
    for (int i = 0; i < 50; ++i) {
      MultiGraph g = gen::random_2k_edge_connected(rng, k, 24);
      ++total;
      OrientResult r = orient_exact(g, OrientMode::k_arc(k));
      if (r.status == OrientResult::Found && check_k_arc_connected(g, r.orientation, k).verdict) {
        ++ok;
      }
    }
  }
  return result(2, "karc-orientability", ok == total, counts(ok, total) + ", zero UNSAT");
}

CriterionResult c03_eulerian(std::uint64_t seed) {
  Rng rng(seed ^ 0x03);
  int ok = 0, total = 0;
  for (int i = 0; i < 100; ++i) {
    MultiGraph g = gen::random_connected_even(rng, 12);
    ++total;
    if (check_well_balanced(g, orient_eulerian(g)).verdict) ++ok;
  }
  return result(3, "eulerian-well-balanced", ok == total, counts(ok, total));
}

CriterionResult c04_kray_connectivity(std::uint64_t seed) {
  Rng rng(seed ^ 0x04);
  int ok = 0, total = 0;
  for (int k : {1, 2}) {
    for (int i = 0; i < 25; ++i) {
      MultiGraph g = gen::random_2k_edge_connected(rng, k, 14);
      std::string hub = max_degree_vertex(g);
      if (g.degree(hub) < 2) continue;
      ExpandedGraph e = expand(g, {hub}, ExpandMode::KRay, 2 * k);
      Ball carrier;  // FastComponents wants a Ball; no boundary here
      carrier.graph = e.carrier;
      FastComponents fast(carrier);
      int m = static_cast<int>(e.carrier.edge_count());
      // all candidate removals of size < 2k
      std::vector<std::vector<int>> candidates;
      for (int a = 0; a < m; ++a) {
        if (k >= 1) candidates.push_back({a});
        if (2 * k > 2) {
          for (int b = a + 1; b < m; ++b) {
            candidates.push_back({a, b});
            for (int c = b + 1; c < m; ++c) candidates.push_back({a, b, c});
          }
        }
      }
      if (candidates.size() > 500) {
        std::vector<std::vector<int>> sampled;
        for (int s = 0; s < 500; ++s) {
          sampled.push_back(candidates[static_cast<std::size_t>(
              rng.below(static_cast<int>(candidates.size())))]);
        }
        candidates = std::move(sampled);
      }
      ++total;
      bool all_connected = true;
      int base = fast.escaping_components({});  // = number of components, no boundary
      for (const auto& f : candidates) {
        // with no boundary flags, count components via escaping==0; reuse scan
        std::vector<bool> cut(e.carrier.edge_count(), false);
        (void)base;
        std::set<std::string> removed;
        for (int idx : f) removed.insert(e.carrier.edges()[static_cast<std::size_t>(idx)].id);
        if (components(e.carrier, removed).size() != 1) {
          all_connected = false;
          break;
        }
      }
      if (all_connected) ++ok;
    }
  }
  return result(4, "kray-expansion-connectivity", ok == total, counts(ok, total));
}

CriterionResult c05_lambda_preservation(std::uint64_t seed) {
  Rng rng(seed ^ 0x05);
  int ok = 0, total = 0;
  for (int i = 0; i < 50; ++i) {
    MultiGraph g = gen::random_2k_edge_connected(rng, 1, 12);
    std::string hub = max_degree_vertex(g);
    if (g.degree(hub) < 2) continue;
    ExpandedGraph e = expand(g, {hub}, ExpandMode::Expanding);
    bool instance_ok = true;
    // witness equality against the flow oracle on every pair involving the hub
    for (const auto& v : g.vertices()) {
      if (v == hub) continue;
      auto [h2, v2] = connectivity_witness_pair(e, hub, v);
      if (lambda(e.carrier, h2, v2) != lambda(g, hub, v)) instance_ok = false;
    }
    // monotonicity over sampled preimage pairs
    const auto& ray = e.ray_vertices.at(hub);
    for (int s = 0; s < 20; ++s) {
      std::string v = pick_vertex(rng, g);
      if (v == hub) continue;
      const std::string& pre = ray[static_cast<std::size_t>(rng.below(static_cast<int>(ray.size())))];
      if (lambda(e.carrier, pre, v) > lambda(g, hub, v)) instance_ok = false;
    }
    ++total;
    if (instance_ok) ++ok;
  }
  return result(5, "expanding-ray-lambda-preservation", ok == total, counts(ok, total));
}

CriterionResult c06_induced_orientation(std::uint64_t seed) {
  Rng rng(seed ^ 0x06);
  int ok = 0, total = 0;
  int guard = 0;
  while (total < 30 && guard++ < 300) {
    MultiGraph g = gen::random_2k_edge_connected(rng, 1, 10);
    std::string hub = max_degree_vertex(g);
    if (g.degree(hub) < 2) continue;
    ExpandedGraph e = expand(g, {hub}, ExpandMode::Expanding);
    if (e.carrier.edge_count() > 24) continue;
    ++total;
    OrientResult r = orient_exact(e.carrier, OrientMode::well_balanced());
    if (r.status != OrientResult::Found) continue;
    Orientation induced = induce_orientation(e, r.orientation);
    if (check_well_balanced(g, induced).verdict) ++ok;
  }
  return result(6, "induced-orientation-chain", ok == total && total == 30, counts(ok, total));
}

CriterionResult c07_gluing(std::uint64_t seed) {
  Rng rng(seed ^ 0x07);
  int ok = 0, total = 0;
  for (int k : {1, 2}) {
    for (int i = 0; i < 15; ++i) {
      Decomposition d = gen::random_block_chain(rng, k);
      if (!verify_decomposition(d).partition_ok) continue;
      std::vector<std::pair<MultiGraph, Orientation>> oriented;
      bool parts_ok = true;
      for (std::size_t p = 0; p < d.parts.size(); ++p) {
        MultiGraph part = d.part_graph(p);
        OrientResult r = orient_exact(part, OrientMode::k_arc(k));
        if (r.status != OrientResult::Found) {
          parts_ok = false;
          break;
        }
        oriented.push_back({part, r.orientation});
      }
      ++total;
      if (!parts_ok) continue;
      auto [whole, o] = glue(oriented);
      if (whole == d.parent && check_k_arc_connected(d.parent, o, k).verdict) ++ok;
    }
  }
  return result(7, "decomposition-gluing", ok == total && total == 30, counts(ok, total));
}

CriterionResult c08_bond_faithful(std::uint64_t) {
  Decomposition fig;
  fig.parent = MultiGraph::parse("e w a 1\ne w b 1\ne a b 1\ne w c 1\ne w d 1\ne c d 1\n");
  fig.parts = {{"a-w-0", "b-w-0", "a-b-0"}, {"c-w-0", "d-w-0", "c-d-0"}};
  BondFaithReport good = verify_bond_faithful(fig, 3);

  Decomposition k4;
  k4.parent = MultiGraph::parse("e a b 1\ne a c 1\ne a d 1\ne b c 1\ne b d 1\ne c d 1\n");
  k4.parts = {{"a-b-0", "b-c-0", "c-d-0", "a-d-0"}, {"a-c-0", "b-d-0"}};
  BondFaithReport bad = verify_bond_faithful(k4, 2);

  bool witness_ok = !bad.pass && !bad.violations.empty();
  for (const auto& v : bad.violations) {
    if (v.kind == BondViolation::PartBondNotParentBond && is_bond(k4.parent, v.witness)) {
      witness_ok = false;  // the witness must certify the failure
    }
  }
  bool pass = good.pass && witness_ok;
  return result(8, "bond-faithfulness-verdicts", pass,
                std::string("figure-eight ") + (good.pass ? "pass" : "FAIL") + ", K4 " +
                    (!bad.pass ? "fail as expected with " +
                                     std::to_string(bad.violations.size()) + " witnesses"
                               : "UNEXPECTED PASS"));
}

CriterionResult c09_edge_end_example(std::uint64_t seed) {
  Rng rng(seed ^ 0x09);
  auto fam = make_family("cubic_tree_plus_root:10");
  int margin = 2;
  bool all_one = true;
  long tested = 0;
  for (int depth = 4; depth <= 7; ++depth) {
    Ball window = fam->ball(depth);
    Ball probe = fam->ball(depth + margin);
    FastComponents fast(probe);
    std::vector<int> window_edges;
    for (const Edge& e : window.graph.edges()) window_edges.push_back(fast.eid.at(e.id));
    int m = static_cast<int>(window_edges.size());
    // exhaustive |F| <= 2
    for (int a = 0; a < m && all_one; ++a) {
      if (fast.escaping_components({window_edges[static_cast<std::size_t>(a)]}) != 1) {
        all_one = false;
      }
      ++tested;
      for (int b = a + 1; b < m; ++b) {
        if (fast.escaping_components({window_edges[static_cast<std::size_t>(a)],
                                      window_edges[static_cast<std::size_t>(b)]}) != 1) {
          all_one = false;
          break;
        }
        ++tested;
      }
    }
    // 200 sampled |F| = 3
    for (int s = 0; s < 200 && all_one; ++s) {
      std::set<int> f;
      while (f.size() < 3) f.insert(window_edges[static_cast<std::size_t>(rng.below(m))]);
      if (fast.escaping_components(std::vector<int>(f.begin(), f.end())) != 1) all_one = false;
      ++tested;
    }
    // spot-check the fast scan against the module operation
    for (int s = 0; s < 5; ++s) {
      std::set<std::string> f;
      while (f.size() < 2) {
        f.insert(window.graph.edges()[static_cast<std::size_t>(rng.below(m))].id);
      }
      std::vector<int> fi;
      for (const auto& id : f) fi.push_back(fast.eid.at(id));
      if (end_classes(*fam, depth, f, margin).escaping_count() != fast.escaping_components(fi)) {
        all_one = false;
      }
    }
  }
  // vertex-end contrast: literal deletion of r stays at 3 components while
  // the matched-resolution separator count strictly grows
  bool contrast = true;
  int prev = 0;
  for (int depth = 4; depth <= 7; ++depth) {
    if (vertex_separation_components(*fam, depth, 0) != 3) contrast = false;
    int scaled = vertex_separation_components(*fam, depth, depth - 2);
    if (scaled <= prev) contrast = false;
    prev = scaled;
  }
  return result(9, "one-edge-end-example", all_one && contrast,
                std::to_string(tested) + " cuts, all single-class; vertex-end counts grow");
}

CriterionResult c10_embedding_contrast(std::uint64_t) {
  auto grid = make_family("grid");
  auto dray = make_family("double_ray");
  EmbedReport bad = check_embedding(*dray, *grid, 4, 2);
  EmbedReport good = check_embedding(*grid, *grid, 4, 2);
  bool pass = !bad.bond_faithful_ok && !bad.classes_injective && !bad.merges.empty() &&
              good.pass;
  return result(10, "bond-faithful-embedding-contrast", pass,
                std::string("double-ray: bond-faithfulness ") +
                    (bad.bond_faithful_ok ? "PASSED unexpectedly" : "fails") + ", " +
                    std::to_string(bad.merges.size()) + " merges; grid-in-grid " +
                    (good.pass ? "embeds" : "FAILS"));
}

CriterionResult c11_ladder_example(std::uint64_t seed) {
  Rng rng(seed ^ 0x0b);
  auto fam = make_family("one_way_ladder");
  Ball outer = fam->ball(8);
  Orientation o = preset_orientation("ladder_example", outer);
  bool pass = arc_lambda(outer.graph, o, "a:0", "b:0") == 0;
  TopoReachResult main = topo_reach(*fam, o, "a:0", "b:0", 3, 8);
  pass = pass && main.reachable && main.stable;
  for (int r = 3; r <= 7; ++r) pass = pass && main.sweep.at(r);
  std::vector<std::string> interior{"a:0", "a:1", "a:2", "b:0", "b:1", "b:2"};
  int sampled = 0;
  while (sampled < 20) {
    const std::string& x = rng.pick(interior);
    const std::string& y = rng.pick(interior);
    if (x == y) continue;
    ++sampled;
    TopoReachResult r = topo_reach(*fam, o, x, y, 3, 8);
    pass = pass && r.reachable;
  }
  return result(11, "ladder-topological-reachability", pass,
                "arc 0, topo reach stable over inner radii 3..7, 20 sampled pairs");
}

CriterionResult c12_prop56(std::uint64_t seed) {
  Rng rng(seed ^ 0x0c);
  int ok = 0, total = 0;
  int made = 0, guard = 0;
  while (made < 50 && guard++ < 500) {
    MultiGraph g = gen::random_multigraph(rng, 8);
    if (!is_connected(g) || g.vertex_count() < 2) continue;
    ++made;
    auto fixed = make_fixed_family(g, "fixed");
    int saturate = static_cast<int>(g.vertex_count());
    bool graph_ok = true;
    for (const auto& x : g.vertices()) {
      for (const auto& y : g.vertices()) {
        if (x >= y) continue;
        TopoCutResult t = topo_lambda(*fixed, x, y, saturate, saturate + 1, 1000);
        if (t.value != lambda(g, x, y)) graph_ok = false;
      }
    }
    ++total;
    if (graph_ok) ++ok;
  }
  return result(12, "finite-topological-equality", ok == total && total == 50, counts(ok, total));
}

CriterionResult c13_flimit_example(std::uint64_t) {
  auto fam = make_family("k_column_ladder:4");
  int window_depth = 4, count = 12, tail = 6;
  Ball window = fam->ball(window_depth);
  MultiGraph carrier = fam->ball(count + 1).graph;
  std::vector<PathInGraph> paths;
  std::vector<GraphSnapshot> snaps;
  for (int n = 0; n < count; ++n) {
    paths.push_back(ladder_path_preset("four_column", carrier, n));
    snaps.push_back(GraphSnapshot::of_path(carrier, paths.back()));
  }
  StableLimit lim = stable_limit(window, snaps, tail);
  bool membership = true;
  for (char col : {'a', 'b', 'c', 'd'}) {
    for (int k = 0; k < window_depth; ++k) {
      std::string rail = Edge::make_id(std::string(1, col) + ":" + std::to_string(k),
                                       std::string(1, col) + ":" + std::to_string(k + 1), 0);
      membership = membership &&
                   lim.edge_status.at(rail).membership == Membership::StablyIn;
    }
  }
  membership =
      membership && lim.edge_status.at("b:0-c:0-0").membership == Membership::StablyIn;
  for (int k = 0; k <= window_depth; ++k) {
    std::string ab = Edge::make_id("a:" + std::to_string(k), "b:" + std::to_string(k), 0);
    std::string cd = Edge::make_id("c:" + std::to_string(k), "d:" + std::to_string(k), 0);
    membership = membership && lim.edge_status.at(ab).membership == Membership::StablyOut &&
                 lim.edge_status.at(cd).membership == Membership::StablyOut;
  }
  DegreeReport degrees = check_path_limit_degrees(lim, "a:0", "d:0");
  LimitOrder ord = build_limit_order(lim, paths, *fam, 2);
  TopologicalPathSeq seq = extract_topological_path(ord, lim);
  bool extraction = seq.segments.size() == 2 && seq.markers.size() == 1 &&
                    seq.segments[0].vertices.front() == "a:0" &&
                    seq.segments[0].vertices.back() == "a:4" &&
                    seq.segments[1].vertices.front() == "d:4" &&
                    seq.segments[1].vertices.back() == "d:0" &&
                    ord.gaps.size() == 2 &&
                    ord.gaps[0].end_class == ord.gaps[1].end_class;
  bool pass = membership && degrees.pass && extraction;
  return result(13, "four-column-path-limit", pass,
                std::string("membership ") + (membership ? "ok" : "FAIL") + ", degrees " +
                    (degrees.pass ? "ok" : "FAIL") + ", extraction " +
                    (extraction ? "contracts the b/c cycle" : "FAIL"));
}

CriterionResult c14_pipeline(std::uint64_t) {
  SearchBudget budget;
  budget.max_edges = 96;
  bool pass = true;
  std::ostringstream detail;
  struct Case {
    const char* family;
    OrientMode mode;
  } cases[] = {{"one_way_ladder", OrientMode::well_balanced()},
               {"doubled_ladder", OrientMode::k_arc(2)}};
  for (const auto& c : cases) {
    auto fam = make_family(c.family);
    PipelineResult r = orient_pipeline(*fam, 4, 13, c.mode, budget);
    if (!r.stabilized) {
      pass = false;
      detail << c.family << ": did not stabilize; ";
      continue;
    }
    // stable window orientation agrees with the deepest exhaustion
    for (const auto& [id, d] : r.window_orientation.dir) {
      if (r.outer_orientation.dir.at(id) != d) pass = false;
    }
    int checked = 0;
    bool bound_ok = true, stable_ok = true;
    for (const auto& x : r.window.interior()) {
      for (const auto& y : r.window.interior()) {
        if (x == y) continue;
        int lam = lambda(r.outer_ball.graph, x, y);
        TopoCutResult t = topo_arc_lambda(*fam, r.outer_orientation, x, y, 5, 13, 1000);
        if (t.value < lam / 2) bound_ok = false;
        if (!t.stable) stable_ok = false;
        ++checked;
      }
    }
    pass = pass && bound_ok && stable_ok;
    detail << c.family << ": " << checked << " pairs, bound " << (bound_ok ? "ok" : "FAIL")
           << ", stability " << (stable_ok ? "ok" : "FAIL") << "; ";
  }
  return result(14, "orientation-pipeline-topological-bound", pass, detail.str());
}

std::vector<CriterionResult> run_fourteen(std::uint64_t seed) {
  return {
      c01_oracle_soundness(seed), c02_karc_orientability(seed), c03_eulerian(seed),
      c04_kray_connectivity(seed), c05_lambda_preservation(seed),
      c06_induced_orientation(seed), c07_gluing(seed),      c08_bond_faithful(seed),
      c09_edge_end_example(seed), c10_embedding_contrast(seed), c11_ladder_example(seed),
      c12_prop56(seed),           c13_flimit_example(seed), c14_pipeline(seed),
  };
}

nlohmann::json criteria_json(const std::vector<CriterionResult>& criteria) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : criteria) {
    arr.push_back({{"number", c.number}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return arr;
}

}  // namespace

SelftestReport run_paper_suite(std::uint64_t seed, std::ostream* progress) {
  SelftestReport report;
  report.seed = seed;
  report.criteria = run_fourteen(seed);
  if (progress) {
    for (const auto& c : report.criteria) {
      *progress << (c.pass ? "[PASS] " : "[FAIL] ") << c.number << " " << c.name << ": "
                << c.detail << "\n";
    }
  }
  // Criterion 15: a rerun with the same seed must reproduce the report
  // byte for byte.
  std::string first = criteria_json(report.criteria).dump();
  std::string second = criteria_json(run_fourteen(seed)).dump();
  CriterionResult det =
      result(15, "deterministic-reports", first == second,
             first == second ? "rerun reproduced the report byte-identically"
                             : "rerun DIVERGED");
  if (progress) {
    *progress << (det.pass ? "[PASS] " : "[FAIL] ") << det.number << " " << det.name << ": "
              << det.detail << "\n";
  }
  report.criteria.push_back(det);
  report.all_pass = true;
  for (const auto& c : report.criteria) report.all_pass = report.all_pass && c.pass;
  return report;
}

nlohmann::json selftest_to_json(const SelftestReport& report) {
  return {{"suite", "paper"},
          {"seed", report.seed},
          {"all_pass", report.all_pass},
          {"criteria", criteria_json(report.criteria)}};
}

}  // namespace mgo
