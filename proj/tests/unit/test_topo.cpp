#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgo/connectivity.hpp"
#include "mgo/rng.hpp"
#include "mgo/topo.hpp"

using namespace mgo;

TEST_CASE("condensation of the one-way ladder has one escaping node") {
  auto fam = make_family("one_way_ladder");
  EndCondensation c = condense(*fam, 3, 8);
  REQUIRE(c.nodes.size() == 1);
  CHECK_FALSE(c.nodes[0].gates.empty());
  for (const auto& gate : c.nodes[0].gates) CHECK(c.outer_ball.is_boundary(gate));
}

TEST_CASE("ladder example: arc-unreachable but topologically reachable") {
  auto fam = make_family("one_way_ladder");
  Ball outer = fam->ball(8);
  Orientation o = preset_orientation("ladder_example", outer);
  // plain directed reachability from a:0 to b:0 fails: nothing leaves
  // the a-column against the rungs
  CHECK(arc_lambda(outer.graph, o, "a:0", "b:0") == 0);
  TopoReachResult r = topo_reach(*fam, o, "a:0", "b:0", 3, 8);
  CHECK(r.reachable);
  CHECK(r.stable);
  for (int inner = 3; inner <= 7; ++inner) CHECK(r.sweep.at(inner));
  // the witness passes through the single end: out along a, back along b
  REQUIRE(r.witness.segments.size() == 2);
  CHECK(r.witness.nodes == std::vector<int>{0});
  CHECK(r.witness.segments[0].vertices.front() == "a:0");
  CHECK(r.witness.segments[1].vertices.back() == "b:0");
}

TEST_CASE("ladder example: every ordered interior pair is topo-reachable") {
  auto fam = make_family("one_way_ladder");
  Ball outer = fam->ball(8);
  Orientation o = preset_orientation("ladder_example", outer);
  std::vector<std::string> interior{"a:0", "a:1", "a:2", "b:0", "b:1", "b:2"};
  for (const auto& x : interior) {
    for (const auto& y : interior) {
      if (x == y) continue;
      TopoReachResult r = topo_reach(*fam, o, x, y, 3, 8);
      CAPTURE(x);
      CAPTURE(y);
      CHECK(r.reachable);
      CHECK(r.stable);
    }
  }
}

TEST_CASE("forbidden edges can sever the only return column") {
  auto fam = make_family("one_way_ladder");
  Ball outer = fam->ball(8);
  Orientation o = preset_orientation("ladder_example", outer);
  // cutting the b-column's return rail below the inner radius blocks a->b:0
  TopoReachResult r = topo_reach(*fam, o, "a:0", "b:0", 3, 8, {"b:0-b:1-0"});
  CHECK_FALSE(r.reachable);
}

TEST_CASE("one-way directed ray: entering the end is possible, leaving is not") {
  auto fam = make_family("k_ray:1");
  Ball outer = fam->ball(9);
  Orientation o = preset_orientation("outward", outer);
  TopoReachResult fwd = topo_reach(*fam, o, "r:0", "r:2", 3, 9);
  CHECK(fwd.reachable);
  TopoReachResult back = topo_reach(*fam, o, "r:2", "r:0", 3, 9);
  CHECK_FALSE(back.reachable);
  CHECK(back.stable);  // false at every inner radius
}

TEST_CASE("boundary endpoints are rejected") {
  auto fam = make_family("one_way_ladder");
  Ball outer = fam->ball(5);
  Orientation o = preset_orientation("ladder_example", outer);
  CHECK_THROWS_AS(topo_reach(*fam, o, "a:0", "a:5", 3, 5), InputError);
  CHECK_THROWS_AS(topo_reach(*fam, o, "a:4", "a:4", 3, 5), InputError);
}

TEST_CASE("topo_lambda equals lambda when nothing escapes") {
  // binary_tree ball minus nothing... use a finite-looking region: the
  // quarter grid's deep interior pairs still see escaping components, so
  // instead compare against lambda on the ladder where the annulus keeps
  // both columns connected: topo_lambda(a:0, b:0) there is lambda + end routes.
  // The genuinely finite case: a family ball that covers the whole graph
  // cannot exist for infinite families, so emulate with forbidden-free
  // finite checks through random graphs in the acceptance suite; here check
  // the single-ray cut example instead.
  auto ray = make_family("k_ray:1");
  TopoCutResult r = topo_lambda(*ray, "r:0", "r:3", 4, 9);
  CHECK(r.value == 1);
  CHECK_FALSE(r.cap_exceeded);
  CHECK(r.cut.size() == 1);
  CHECK(r.stable);
}

TEST_CASE("oriented topological connectivity dominates arc connectivity") {
  auto fam = make_family("one_way_ladder");
  Ball outer = fam->ball(8);
  Orientation o = preset_orientation("ladder_example", outer);
  TopoCutResult t = topo_arc_lambda(*fam, o, "a:0", "b:0", 3, 8);
  CHECK(t.value >= 1);
  CHECK(arc_lambda(outer.graph, o, "a:0", "b:0") == 0);
  // a witness separator of matching size is returned
  CHECK(static_cast<int>(t.cut.size()) == t.value);
}

TEST_CASE("undirected topological connectivity on the ladder") {
  auto fam = make_family("one_way_ladder");
  // between a:0 and b:0: the direct rung, the local detour, and the route
  // through the end
  TopoCutResult t = topo_lambda(*fam, "a:0", "b:0", 3, 8);
  CHECK(t.value == lambda(fam->ball(8).graph, "a:0", "b:0"));
  CHECK(t.stable);
}

TEST_CASE("doubled ladder topological cut values are stable across radii") {
  auto fam = make_family("doubled_ladder");
  TopoCutResult t = topo_lambda(*fam, "a:0", "a:1", 3, 7);
  CHECK(t.value == 4);
  CHECK(t.stable);
}

TEST_CASE("cap marking") {
  auto fam = make_family("doubled_ladder");
  TopoCutResult t = topo_lambda(*fam, "a:0", "a:1", 3, 7, 2);
  CHECK(t.value == 4);
  CHECK(t.cap_exceeded);
  CHECK(t.cut.empty());  // witness withheld past the cap
}

TEST_CASE("oriented topological connectivity is at least arc connectivity") {
  // plain oriented paths are themselves topological witnesses
  MultiGraph g = MultiGraph::parse("e a b 2\ne b c 2\ne a c 2\n");
  Orientation o;
  for (const Edge& e : g.edges()) o.dir[e.id] = e.copy == 0 ? Dir::uv : Dir::vu;
  auto fixed = make_fixed_family(g, "fixed");
  int saturate = static_cast<int>(g.vertex_count());
  for (const auto& x : g.vertices()) {
    for (const auto& y : g.vertices()) {
      if (x == y) continue;
      TopoCutResult t = topo_arc_lambda(*fixed, o, x, y, saturate, saturate + 1, 100);
      CHECK(t.value >= arc_lambda(g, o, x, y));
      CHECK(t.value == arc_lambda(g, o, x, y));  // finite: no end routes exist
    }
  }
}
