#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgo/connectivity.hpp"
#include "mgo/expansion.hpp"
#include "mgo/rng.hpp"

using namespace mgo;

namespace {

/// Wheel: hub h joined to rim vertices r0..r{n-1}, rim cycle.
MultiGraph wheel(int n) {
  MultiGraph g;
  for (int i = 0; i < n; ++i) {
    g.add_edges("h", "r" + std::to_string(i), 1);
    g.add_edges("r" + std::to_string(i), "r" + std::to_string((i + 1) % n), 1);
  }
  return g;
}

}  // namespace

TEST_CASE("wheel hub expanded into a 2-ray") {
  MultiGraph g = wheel(4);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2);
  CHECK(e.carrier.vertex_count() == 8);  // 4 rim + 4 ray vertices
  // 4 rim edges + 4 spokes + 3 steps * 2 copies
  CHECK(e.carrier.edge_count() == 14);
  CHECK(e.ray_vertices.at("h").size() == 4);
  CHECK(e.ray_vertices.at("h")[0] == "(h,0)");
  CHECK(e.ray_vertices.at("h")[3] == "(h,3)");
  // spokes attach at their enumeration index
  for (const auto& [edge_id, idx] : e.attach.at("h")) {
    const Edge& ce = e.carrier.edge(e.carrier_of_origin.at(edge_id));
    bool touches = ce.u == e.ray_vertex("h", idx) || ce.v == e.ray_vertex("h", idx);
    CHECK(touches);
  }
  // original-edge bijection is total
  CHECK(e.carrier_of_origin.size() == g.edge_count());
  for (const Edge& oe : g.edges()) CHECK(e.carrier_of_origin.count(oe.id));
}

TEST_CASE("degree-1 targets are degenerate") {
  MultiGraph g = MultiGraph::parse("e a b 1\ne b c 1\n");
  CHECK_THROWS_AS(expand(g, {"a"}, ExpandMode::KRay, 2), InputError);
}

TEST_CASE("expanding mode steps grow 1,2,3") {
  MultiGraph g = MultiGraph::parse("e u v 4\n");
  ExpandedGraph e = expand(g, {"u"}, ExpandMode::Expanding);
  const auto& ray = e.ray_vertices.at("u");
  REQUIRE(ray.size() == 4);
  CHECK(ray[0] == "(u,1)");
  CHECK(ray[3] == "(u,4)");
  CHECK(e.carrier.multiplicity("(u,1)", "(u,2)") == 1);
  CHECK(e.carrier.multiplicity("(u,2)", "(u,3)") == 2);
  CHECK(e.carrier.multiplicity("(u,3)", "(u,4)") == 3);
}

TEST_CASE("lift of a rim-hub-rim path routes along the ray") {
  MultiGraph g = wheel(4);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2);
  // spokes enumerate in canonical order h-r0, h-r1, h-r2, h-r3
  PathInGraph p{{"r0", "h", "r2"}, {"h-r0-0", "h-r2-0"}};
  PathInGraph lifted = lift_path(e, p);
  CHECK(lifted.vertices.front() == "r0");
  CHECK(lifted.vertices.back() == "r2");
  // passes through (h,0), (h,1), (h,2)
  CHECK(std::count(lifted.vertices.begin(), lifted.vertices.end(), "(h,0)") == 1);
  CHECK(std::count(lifted.vertices.begin(), lifted.vertices.end(), "(h,1)") == 1);
  CHECK(std::count(lifted.vertices.begin(), lifted.vertices.end(), "(h,2)") == 1);
}

TEST_CASE("lift is the identity off the targets") {
  MultiGraph g = wheel(4);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2);
  PathInGraph p{{"r0", "r1", "r2"}, {"r0-r1-0", "r1-r2-0"}};
  CHECK(lift_path(e, p) == p);
}

TEST_CASE("lift reroutes around one forbidden ray copy") {
  MultiGraph g = wheel(4);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2);
  PathInGraph p{{"r0", "h", "r2"}, {"h-r0-0", "h-r2-0"}};
  std::string blocked = Edge::make_id("(h,0)", "(h,1)", 0);
  PathInGraph lifted = lift_path(e, p, {blocked});
  CHECK(std::find(lifted.edges.begin(), lifted.edges.end(), blocked) == lifted.edges.end());
  CHECK(std::find(lifted.edges.begin(), lifted.edges.end(),
                  Edge::make_id("(h,0)", "(h,1)", 1)) != lifted.edges.end());
  // blocking both copies of a needed step fails loudly
  CHECK_THROWS_AS(lift_path(e, p,
                            {Edge::make_id("(h,0)", "(h,1)", 0),
                             Edge::make_id("(h,0)", "(h,1)", 1)}),
                  InputError);
}

TEST_CASE("project inverts lift") {
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    MultiGraph g = gen::random_2k_edge_connected(rng, 1, 12);
    // expand the vertex of largest degree
    std::string hub = g.vertices().front();
    for (const auto& v : g.vertices()) {
      if (g.degree(v) > g.degree(hub)) hub = v;
    }
    if (g.degree(hub) < 2) continue;
    ExpandedGraph e = expand(g, {hub}, ExpandMode::KRay, 2);
    const auto& vs = g.vertices();
    for (const auto& x : vs) {
      for (const auto& y : vs) {
        if (x >= y) continue;
        PathInGraph p = shortest_path(g, x, y);
        ProjectedPath back = project_path(e, lift_path(e, p));
        CHECK(back.trail == p);
        CHECK(back.simple_path == p);
      }
    }
  }
}

TEST_CASE("a two-visit expansion path projects to a trail with a cycle removed") {
  MultiGraph g = wheel(4);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2);
  // r0 -> (h,0) -> (h,1) -> r1 -> r2 -> (h,2) -> (h,3) -> r3 visits the ray twice
  PathInGraph q;
  q.vertices = {"r0", "(h,0)", "(h,1)", "r1", "r2", "(h,2)", "(h,3)", "r3"};
  q.edges = {e.carrier_of_origin.at("h-r0-0"), Edge::make_id("(h,0)", "(h,1)", 0),
             e.carrier_of_origin.at("h-r1-0"), "r1-r2-0",
             e.carrier_of_origin.at("h-r2-0"), Edge::make_id("(h,2)", "(h,3)", 0),
             e.carrier_of_origin.at("h-r3-0")};
  ProjectedPath back = project_path(e, q);
  // trail repeats h
  CHECK(std::count(back.trail.vertices.begin(), back.trail.vertices.end(), "h") == 2);
  // extracted path drops the r1-r2 excursion
  validate_path(g, back.simple_path);
  CHECK(back.simple_path.vertices.front() == "r0");
  CHECK(back.simple_path.vertices.back() == "r3");
}

TEST_CASE("a path inside one ray projects to a single vertex") {
  MultiGraph g = wheel(4);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2);
  PathInGraph q;
  q.vertices = {"(h,0)", "(h,1)", "(h,2)"};
  q.edges = {Edge::make_id("(h,0)", "(h,1)", 0), Edge::make_id("(h,1)", "(h,2)", 0)};
  ProjectedPath back = project_path(e, q);
  CHECK(back.trail.edges.empty());
  CHECK(back.simple_path.vertices == std::vector<std::string>{"h"});
}

TEST_CASE("induced orientation restricts along the bijection") {
  MultiGraph g = wheel(4);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2);
  OrientResult r = orient_exact(e.carrier, OrientMode::k_arc(1));
  REQUIRE(r.status == OrientResult::Found);
  Orientation induced = induce_orientation(e, r.orientation);
  CHECK(induced.total_on(g));
  CHECK(check_k_arc_connected(g, induced, 1).verdict);
  // agreement edge by edge through the bijection
  for (const Edge& oe : g.edges()) {
    const Edge& ce = e.carrier.edge(e.carrier_of_origin.at(oe.id));
    const std::string& carrier_tail = r.orientation.tail_of(ce);
    const std::string& origin_tail = induced.tail_of(oe);
    CHECK(e.project_vertex(carrier_tail) == origin_tail);
  }
}

TEST_CASE("witness pair reaches lambda on a parallel bundle") {
  MultiGraph g = MultiGraph::parse("e u v 3\n");
  ExpandedGraph e = expand(g, {"u"}, ExpandMode::Expanding);
  auto [u2, v2] = connectivity_witness_pair(e, "u", "v");
  CHECK(u2 == "(u,3)");
  CHECK(v2 == "v");
  CHECK(lambda(e.carrier, u2, v2) == 3);
  CHECK(lambda(g, "u", "v") == 3);
}

TEST_CASE("witness pair is the identity on unexpanded vertices") {
  MultiGraph g = wheel(5);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::Expanding);
  auto [x, y] = connectivity_witness_pair(e, "r0", "r2");
  CHECK(x == "r0");
  CHECK(y == "r2");
  CHECK(lambda(e.carrier, x, y) == lambda(g, "r0", "r2"));
}

TEST_CASE("wheel hub witness attains the origin lambda") {
  MultiGraph g = wheel(5);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::Expanding);
  for (const auto& v : g.vertices()) {
    if (v == "h") continue;
    auto [h2, v2] = connectivity_witness_pair(e, "h", v);
    CHECK(lambda(e.carrier, h2, v2) == lambda(g, "h", v));
  }
}

TEST_CASE("witness pair requires expanding mode and long enough rays") {
  MultiGraph g = wheel(4);
  ExpandedGraph kray = expand(g, {"h"}, ExpandMode::KRay, 2);
  CHECK_THROWS_AS(connectivity_witness_pair(kray, "h", "r0"), InputError);
  // shrink the ray below the witness index via a ball-style truncated input:
  // 3 parallel edges need (u,3) but a 2-slot override cannot exist, so use
  // a graph whose lambda exceeds a shortened ray. Rays never go below
  // deg(v); build deg 2 with lambda 2 and override length 2: index fits.
  MultiGraph two = MultiGraph::parse("e u v 2\n");
  ExpandedGraph e2 = expand(two, {"u"}, ExpandMode::Expanding);
  auto [a, b] = connectivity_witness_pair(e2, "u", "v");
  CHECK(a == "(u,2)");
}

TEST_CASE("lambda never increases through the projection preimages") {
  Rng rng(43);
  for (int i = 0; i < 15; ++i) {
    MultiGraph g = gen::random_2k_edge_connected(rng, 1, 10);
    std::string hub = g.vertices().front();
    for (const auto& v : g.vertices()) {
      if (g.degree(v) > g.degree(hub)) hub = v;
    }
    ExpandedGraph e = expand(g, {hub}, ExpandMode::Expanding);
    for (const auto& y : g.vertices()) {
      if (y == hub) continue;
      int origin_l = lambda(g, hub, y);
      for (const auto& pre : e.ray_vertices.at(hub)) {
        CHECK(lambda(e.carrier, pre, y) <= origin_l);
      }
    }
  }
}

TEST_CASE("kray ray segments survive deletions below the step multiplicity") {
  MultiGraph g = wheel(4);
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 3);
  // remove any 2 ray edges: every consecutive ray pair stays connected
  std::vector<std::string> ray_ids(e.ray_edges.at("h").begin(), e.ray_edges.at("h").end());
  for (std::size_t i = 0; i < ray_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ray_ids.size(); ++j) {
      std::set<std::string> removed{ray_ids[i], ray_ids[j]};
      MultiGraph cut = e.carrier.induced(
          std::set<std::string>(e.carrier.vertices().begin(), e.carrier.vertices().end()),
          removed);
      CHECK(lambda(cut, "(h,0)", "(h,3)") >= 1);
    }
  }
}

TEST_CASE("kray expansions of 2-edge-connected graphs survive single deletions") {
  // origin 2-edge-connected, kray(2) expansion: any single edge removal
  // leaves every origin-derived pair connected (exhaustive)
  MultiGraph g = wheel(4);
  REQUIRE(is_k_edge_connected(g, 2));
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2);
  for (const Edge& removed : e.carrier.edges()) {
    MultiGraph cut = e.carrier.induced(
        std::set<std::string>(e.carrier.vertices().begin(), e.carrier.vertices().end()),
        {removed.id});
    CHECK(is_connected(cut));
  }
}

TEST_CASE("custom enumeration order changes attachments") {
  MultiGraph g = wheel(4);
  std::map<std::string, std::vector<std::string>> order{
      {"h", {"h-r3-0", "h-r2-0", "h-r1-0", "h-r0-0"}}};
  ExpandedGraph e = expand(g, {"h"}, ExpandMode::KRay, 2, &order);
  CHECK(e.attach.at("h").at("h-r3-0") == 0);
  CHECK(e.attach.at("h").at("h-r0-0") == 3);
  std::map<std::string, std::vector<std::string>> bad{{"h", {"h-r3-0"}}};
  CHECK_THROWS_AS(expand(g, {"h"}, ExpandMode::KRay, 2, &bad), InputError);
}
