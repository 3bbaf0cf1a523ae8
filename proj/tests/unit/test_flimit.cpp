#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgo/connectivity.hpp"
#include "mgo/flimit.hpp"
#include "mgo/topo.hpp"

using namespace mgo;

namespace {

Ball synthetic_window(const MultiGraph& g) {
  Ball b;
  b.graph = g;
  b.roots = {g.vertices().front()};
  b.depth = 0;
  b.family = "synthetic";
  return b;
}

/// Snapshots of the four-column walk P_n for n = 0..count-1.
std::vector<GraphSnapshot> four_column_snaps(const MultiGraph& carrier, int count) {
  std::vector<GraphSnapshot> snaps;
  for (int n = 0; n < count; ++n) {
    snaps.push_back(GraphSnapshot::of_path(carrier, ladder_path_preset("four_column", carrier, n)));
  }
  return snaps;
}

}  // namespace

TEST_CASE("constant sequences stabilize immediately") {
  MultiGraph g = MultiGraph::parse("e a b 1\ne b c 1\n");
  Ball w = synthetic_window(g);
  PathInGraph p{{"a", "b", "c"}, {"a-b-0", "b-c-0"}};
  std::vector<GraphSnapshot> seq(6, GraphSnapshot::of_path(g, p));
  StableLimit lim = stable_limit(w, seq, 3);
  for (const auto& [v, st] : lim.vertex_status) {
    CHECK(st.membership == Membership::StablyIn);
    CHECK(st.stabilized_at == 0);
  }
  CHECK(lim.limit_graph() == g);
  CHECK(lim.oscillating().empty());
}

TEST_CASE("alternating membership is oscillating, never resolved") {
  MultiGraph g = MultiGraph::parse("e a b 1\n");
  Ball w = synthetic_window(g);
  std::vector<GraphSnapshot> seq;
  for (int n = 0; n < 8; ++n) {
    GraphSnapshot s;
    s.vertices = {"a", "b"};
    if (n % 2 == 0) {
      s.edges = {"a-b-0"};
      s.dir["a-b-0"] = Dir::uv;
    }
    seq.push_back(s);
  }
  StableLimit lim = stable_limit(w, seq, 4);
  CHECK(lim.edge_status.at("a-b-0").membership == Membership::Oscillating);
  CHECK_FALSE(lim.oscillating().empty());
}

TEST_CASE("direction flips are tracked separately from membership") {
  MultiGraph g = MultiGraph::parse("e a b 1\n");
  Ball w = synthetic_window(g);
  std::vector<GraphSnapshot> seq;
  for (int n = 0; n < 8; ++n) {
    GraphSnapshot s;
    s.vertices = {"a", "b"};
    s.edges = {"a-b-0"};
    s.dir["a-b-0"] = n % 2 == 0 ? Dir::uv : Dir::vu;
    seq.push_back(s);
  }
  StableLimit lim = stable_limit(w, seq, 4);
  CHECK(lim.edge_status.at("a-b-0").membership == Membership::StablyIn);
  CHECK(lim.dir_status.at("a-b-0").membership == Membership::Oscillating);
}

TEST_CASE("four-column ladder limit matches the predicted membership") {
  auto fam = make_family("k_column_ladder:4");
  int window_depth = 4, count = 12, tail = 6;
  Ball window = fam->ball(window_depth);
  MultiGraph carrier = fam->ball(count + 1).graph;
  StableLimit lim = stable_limit(window, four_column_snaps(carrier, count), tail);

  // columns stably-in below the window depth
  for (char col : {'a', 'b', 'c', 'd'}) {
    for (int k = 0; k < window_depth; ++k) {
      std::string rail = Edge::make_id(std::string(1, col) + ":" + std::to_string(k),
                                       std::string(1, col) + ":" + std::to_string(k + 1), 0);
      CAPTURE(rail);
      CHECK(lim.edge_status.at(rail).membership == Membership::StablyIn);
    }
  }
  // the base crossing b:0-c:0 is stably-in; per-n rungs are stably-out
  CHECK(lim.edge_status.at("b:0-c:0-0").membership == Membership::StablyIn);
  for (int k = 0; k <= window_depth; ++k) {
    std::string ab = Edge::make_id("a:" + std::to_string(k), "b:" + std::to_string(k), 0);
    std::string cd = Edge::make_id("c:" + std::to_string(k), "d:" + std::to_string(k), 0);
    CHECK(lim.edge_status.at(ab).membership == Membership::StablyOut);
    CHECK(lim.edge_status.at(cd).membership == Membership::StablyOut);
    // the a:0-d:0-free crossings b-c above the base are also gone
    if (k > 0) {
      std::string bc = Edge::make_id("b:" + std::to_string(k), "c:" + std::to_string(k), 0);
      CHECK(lim.edge_status.at(bc).membership == Membership::StablyOut);
    }
  }
  // directions: a ascends, b descends
  CHECK(lim.stable_dir.at("a:0-a:1-0") == Dir::uv);
  CHECK(lim.stable_dir.at(Edge::make_id("b:1", "b:0", 0)) ==
        (Edge::make_id("b:1", "b:0", 0) == "b:0-b:1-0" ? Dir::vu : Dir::uv));
}

TEST_CASE("four-column ladder degree discipline") {
  auto fam = make_family("k_column_ladder:4");
  Ball window = fam->ball(4);
  MultiGraph carrier = fam->ball(13).graph;
  StableLimit lim = stable_limit(window, four_column_snaps(carrier, 12), 6);
  DegreeReport r = check_path_limit_degrees(lim, "a:0", "d:0");
  CHECK(r.pass);
  for (const auto& e : r.entries) {
    if (e.vertex == "a:0") {
      CHECK(e.degree == 1);
      CHECK(e.out_degree == 1);
      CHECK(e.in_degree == 0);
    }
    if (e.vertex == "d:0") {
      CHECK(e.degree == 1);
      CHECK(e.in_degree == 1);
    }
    if (e.vertex == "b:0" || e.vertex == "c:0") {
      CHECK(e.degree == 2);
      CHECK(e.in_degree == 1);
      CHECK(e.out_degree == 1);
    }
  }
}

TEST_CASE("oscillating edges are excluded from degree counts") {
  MultiGraph g = MultiGraph::parse("e a b 1\ne b c 1\ne b d 1\n");
  Ball w = synthetic_window(g);
  std::vector<GraphSnapshot> seq;
  for (int n = 0; n < 8; ++n) {
    PathInGraph p = n % 2 == 0 ? PathInGraph{{"a", "b", "c"}, {"a-b-0", "b-c-0"}}
                               : PathInGraph{{"a", "b", "d"}, {"a-b-0", "b-d-0"}};
    seq.push_back(GraphSnapshot::of_path(g, p));
  }
  StableLimit lim = stable_limit(w, seq, 4);
  CHECK(lim.edge_status.at("b-c-0").membership == Membership::Oscillating);
  DegreeReport r = check_path_limit_degrees(lim, "a", "c");
  CHECK(r.pass);  // b is oscillation-adjacent, not a degree violation
  bool excluded = false;
  for (const auto& e : r.entries) {
    if (e.vertex == "b") {
      CHECK(e.role == "oscillation-adjacent");
      CHECK_FALSE(e.checked);
      excluded = true;
    }
  }
  CHECK(excluded);
}

TEST_CASE("four-column order: columns with two gaps on one end class") {
  auto fam = make_family("k_column_ladder:4");
  Ball window = fam->ball(4);
  MultiGraph carrier = fam->ball(13).graph;
  std::vector<PathInGraph> paths;
  for (int n = 0; n < 12; ++n) paths.push_back(ladder_path_preset("four_column", carrier, n));
  std::vector<GraphSnapshot> snaps;
  for (const auto& p : paths) snaps.push_back(GraphSnapshot::of_path(carrier, p));
  StableLimit lim = stable_limit(window, snaps, 6);
  LimitOrder ord = build_limit_order(lim, paths, *fam, 2);
  CHECK(ord.total);
  REQUIRE(ord.gaps.size() == 2);
  CHECK(ord.gaps[0].assignable);
  CHECK(ord.gaps[1].assignable);
  CHECK(ord.gaps[0].end_class == ord.gaps[1].end_class);  // the ladder's single end
  CHECK(ord.end_node_count == 1);
  // order runs a:0 ... a:4 | gap | b:4 ... b:0, b:0-c:0, c:0 ... c:4 | gap | d:4 ... d:0
  CHECK(ord.elements.front() == "a:0");
  CHECK(ord.elements.back() == "d:0");
  CHECK(ord.elements[ord.gaps[0].after] == "a:4");
  CHECK(ord.elements[ord.gaps[0].after + 1] == "b:4");
  CHECK(ord.elements[ord.gaps[1].after] == "c:4");
}

TEST_CASE("extraction contracts the infinite cycle between the gaps") {
  auto fam = make_family("k_column_ladder:4");
  Ball window = fam->ball(4);
  MultiGraph carrier = fam->ball(13).graph;
  std::vector<PathInGraph> paths;
  for (int n = 0; n < 12; ++n) paths.push_back(ladder_path_preset("four_column", carrier, n));
  std::vector<GraphSnapshot> snaps;
  for (const auto& p : paths) snaps.push_back(GraphSnapshot::of_path(carrier, p));
  StableLimit lim = stable_limit(window, snaps, 6);
  LimitOrder ord = build_limit_order(lim, paths, *fam, 2);
  TopologicalPathSeq seq = extract_topological_path(ord, lim);
  REQUIRE(seq.segments.size() == 2);
  REQUIRE(seq.markers.size() == 1);
  CHECK(seq.start == "a:0");
  CHECK(seq.end == "d:0");
  CHECK(seq.segments[0].vertices.front() == "a:0");
  CHECK(seq.segments[0].vertices.back() == "a:4");
  CHECK(seq.segments[1].vertices.front() == "d:4");
  CHECK(seq.segments[1].vertices.back() == "d:0");
  // idempotence
  CHECK(extract_topological_path(seq) == seq);
}

TEST_CASE("two-column out-and-back keeps its single through-end passage") {
  auto fam = make_family("one_way_ladder");
  Ball window = fam->ball(4);
  MultiGraph carrier = fam->ball(13).graph;
  std::vector<PathInGraph> paths;
  std::vector<GraphSnapshot> snaps;
  for (int n = 0; n < 12; ++n) {
    paths.push_back(ladder_path_preset("out_and_back", carrier, n));
    snaps.push_back(GraphSnapshot::of_path(carrier, paths.back()));
  }
  StableLimit lim = stable_limit(window, snaps, 6);
  LimitOrder ord = build_limit_order(lim, paths, *fam, 2);
  REQUIRE(ord.gaps.size() == 1);
  CHECK(ord.gaps[0].assignable);
  TopologicalPathSeq seq = extract_topological_path(ord, lim);
  CHECK(seq.segments.size() == 2);
  CHECK(seq.markers.size() == 1);
  CHECK(seq.start == "a:0");
  CHECK(seq.end == "b:0");
  CHECK(extract_topological_path(seq) == seq);
}

TEST_CASE("gapless finite order extracts to the path itself") {
  MultiGraph g = MultiGraph::parse("e a b 1\ne b c 1\n");
  Ball w = synthetic_window(g);
  PathInGraph p{{"a", "b", "c"}, {"a-b-0", "b-c-0"}};
  std::vector<PathInGraph> paths(6, p);
  std::vector<GraphSnapshot> snaps(6, GraphSnapshot::of_path(g, p));
  StableLimit lim = stable_limit(w, snaps, 3);
  auto fixed = make_fixed_family(g, "finite");
  LimitOrder ord = build_limit_order(lim, paths, *fixed, 2);
  CHECK(ord.total);
  CHECK(ord.gaps.empty());
  TopologicalPathSeq seq = extract_topological_path(ord, lim);
  CHECK(seq.segments.size() == 1);
  CHECK(seq.markers.empty());
  CHECK(seq.segments[0] == p);
}

TEST_CASE("pipeline stabilizes on the one-way ladder") {
  auto fam = make_family("one_way_ladder");
  SearchBudget budget;
  budget.max_edges = 96;
  PipelineResult r = orient_pipeline(*fam, 4, 13, OrientMode::well_balanced(), budget);
  CHECK(r.stabilized);
  CHECK(r.oscillating_edges.empty());
  CHECK(r.window_orientation.total_on(r.window.graph));
  // the stabilized window orientation agrees with the deepest exhaustion
  for (const auto& [id, d] : r.window_orientation.dir) {
    CHECK(r.outer_orientation.dir.at(id) == d);
  }
}

TEST_CASE("pipeline on a finite family reduces to orient_exact") {
  auto fam = make_family("cycle:6");
  PipelineResult r = orient_pipeline(*fam, 3, 8, OrientMode::well_balanced());
  CHECK(r.stabilized);
  Ball full = fam->ball(8);
  CHECK(full.boundary.empty());  // saturated
  OrientResult direct = orient_exact(full.graph, OrientMode::well_balanced());
  REQUIRE(direct.status == OrientResult::Found);
  CHECK(r.outer_orientation == direct.orientation);
  for (const auto& [id, d] : r.window_orientation.dir) {
    CHECK(direct.orientation.dir.at(id) == d);
  }
}

TEST_CASE("pipeline enforces its budget") {
  auto fam = make_family("one_way_ladder");
  SearchBudget tiny;
  tiny.max_edges = 10;
  CHECK_THROWS_AS(orient_pipeline(*fam, 4, 10, OrientMode::well_balanced(), tiny), BoundError);
}

TEST_CASE("order respects incidence on sampled path limits") {
  auto fam = make_family("one_way_ladder");
  Ball window = fam->ball(3);
  MultiGraph carrier = fam->ball(11).graph;
  std::vector<PathInGraph> paths;
  std::vector<GraphSnapshot> snaps;
  for (int n = 0; n < 10; ++n) {
    paths.push_back(ladder_path_preset("out_and_back", carrier, n));
    snaps.push_back(GraphSnapshot::of_path(carrier, paths.back()));
  }
  StableLimit lim = stable_limit(window, snaps, 5);
  LimitOrder ord = build_limit_order(lim, paths, *fam, 2);
  // every stable edge's order neighbors are its endpoints
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < ord.elements.size(); ++i) at[ord.elements[i]] = i;
  for (const auto& id : lim.stable_edges()) {
    if (!at.count(id)) continue;
    const Edge& e = lim.window.graph.edge(id);
    auto lohi = std::minmax(at.at(e.u), at.at(e.v));
    CHECK(lohi.first + 1 == at.at(id));
    CHECK(at.at(id) + 1 == lohi.second);
  }
}

TEST_CASE("pseudo-ultrafilter mode can resolve oscillation, seed-dependently") {
  // alternating membership: the cofinite-stabilization limit reports
  // oscillation; a subsequence selection may resolve it either way, which
  // is exactly why the mode is fenced off from acceptance checks
  MultiGraph g = MultiGraph::parse("e a b 1\n");
  Ball w = synthetic_window(g);
  std::vector<GraphSnapshot> seq;
  for (int n = 0; n < 24; ++n) {
    GraphSnapshot s;
    s.vertices = {"a", "b"};
    if (n % 2 == 0) {
      s.edges = {"a-b-0"};
      s.dir["a-b-0"] = Dir::uv;
    }
    seq.push_back(s);
  }
  StableLimit plain = stable_limit(w, seq, 12);
  CHECK(plain.edge_status.at("a-b-0").membership == Membership::Oscillating);
  bool resolved_somewhere = false;
  bool disagreement = false;
  std::vector<Membership> outcomes;
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull, 6ull, 7ull, 8ull}) {
    StableLimit pseudo = stable_limit_pseudo(w, seq, 12, seed);
    Membership m = pseudo.edge_status.at("a-b-0").membership;
    outcomes.push_back(m);
    if (m != Membership::Oscillating) resolved_somewhere = true;
  }
  for (const auto& m : outcomes) {
    if (m != outcomes.front()) disagreement = true;
  }
  CHECK(resolved_somewhere);
  // determinism per seed
  StableLimit again = stable_limit_pseudo(w, seq, 12, 3);
  CHECK(again.edge_status.at("a-b-0").membership ==
        stable_limit_pseudo(w, seq, 12, 3).edge_status.at("a-b-0").membership);
  (void)disagreement;  // seeds may agree; resolution alone shows the dependence
}

TEST_CASE("extracted segments run along the stable orientation") {
  auto fam = make_family("k_column_ladder:4");
  Ball window = fam->ball(4);
  MultiGraph carrier = fam->ball(13).graph;
  std::vector<PathInGraph> paths;
  std::vector<GraphSnapshot> snaps;
  for (int n = 0; n < 12; ++n) {
    paths.push_back(ladder_path_preset("four_column", carrier, n));
    snaps.push_back(GraphSnapshot::of_path(carrier, paths.back()));
  }
  StableLimit lim = stable_limit(window, snaps, 6);
  TopologicalPathSeq seq = extract_topological_path(build_limit_order(lim, paths, *fam), lim);
  for (const auto& s : seq.segments) {
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
      const Edge& e = lim.window.graph.edge(s.edges[i]);
      const std::string& tail = lim.stable_dir.at(e.id) == Dir::uv ? e.u : e.v;
      CHECK(tail == s.vertices[i]);
    }
  }
}
