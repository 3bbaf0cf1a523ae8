#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mgo/edge_ends.hpp"
#include "mgo/rng.hpp"

using namespace mgo;

TEST_CASE("binary tree minus both root edges: 3 components, 2 escaping") {
  auto fam = make_family("binary_tree");
  EndApprox ea = end_classes(*fam, 5, {"t-t:0-0", "t-t:1-0"});
  CHECK(ea.classes.size() == 3);
  CHECK(ea.escaping_count() == 2);
  // the root is stranded alone
  bool lone_root = false;
  for (const auto& c : ea.classes) {
    if (c.probe_vertices == std::vector<std::string>{"t"}) {
      lone_root = true;
      CHECK_FALSE(c.escaping);
    }
  }
  CHECK(lone_root);
}

TEST_CASE("empty cut on a connected family gives one escaping class") {
  for (const char* spec : {"grid", "one_way_ladder", "binary_tree"}) {
    auto fam = make_family(spec);
    EndApprox ea = end_classes(*fam, 3, {});
    CAPTURE(spec);
    CHECK(ea.classes.size() == 1);
    CHECK(ea.escaping_count() == 1);
    CHECK(ea.classes[0].escaping);
  }
}

TEST_CASE("cuts outside the requested ball are rejected") {
  auto fam = make_family("binary_tree");
  // an edge at depth 5 is outside ball(2)
  CHECK_THROWS_AS(end_classes(*fam, 2, {"t:0000-t:00000-0"}), InputError);
}

TEST_CASE("cubic tree plus root has a single escaping class under small cuts") {
  auto fam = make_family("cubic_tree_plus_root:9");
  // exhaustive singletons and a seeded sample of pairs/triples
  for (int depth : {4, 5}) {
    Ball b = fam->ball(depth);
    std::vector<std::string> ids;
    for (const Edge& e : b.graph.edges()) ids.push_back(e.id);
    for (const auto& id : ids) {
      EndApprox ea = end_classes(*fam, depth, {id});
      CAPTURE(depth);
      CAPTURE(id);
      CHECK(ea.escaping_count() == 1);
    }
    Rng rng(61);
    for (int i = 0; i < 40; ++i) {
      std::set<std::string> f;
      while (f.size() < 3) f.insert(ids[static_cast<std::size_t>(rng.below(static_cast<int>(ids.size())))]);
      EndApprox ea = end_classes(*fam, depth, f);
      CHECK(ea.escaping_count() == 1);
    }
  }
}

TEST_CASE("isolating a window leaf does not fake a second end") {
  // cut a depth-4 leaf's two window edges: the probe reconnects its
  // children to r, so only one class escapes
  auto fam = make_family("cubic_tree_plus_root:9");
  EndApprox ea = end_classes(*fam, 4, {"t:000-t:0000-0", "r-t:0000-0"});
  CHECK(ea.escaping_count() == 1);
}

TEST_CASE("refinement is coherent and escaping counts are monotone") {
  auto grid = make_family("grid");
  std::set<std::string> small{"(0,0)-(0,1)-0"};
  std::set<std::string> big{"(0,0)-(0,1)-0", "(0,0)-(1,0)-0"};
  EndApprox coarse = end_classes(*grid, 3, {});
  EndApprox mid = end_classes(*grid, 3, small);
  EndApprox fine = end_classes(*grid, 3, big);
  CHECK(refines(mid, coarse));
  CHECK(refines(fine, mid));
  CHECK(refines(fine, coarse));
  CHECK_FALSE(refines(coarse, fine));  // wrong direction
  CHECK(coarse.escaping_count() <= mid.escaping_count());
  CHECK(mid.escaping_count() <= fine.escaping_count());
}

TEST_CASE("escaping count never drops when the cut grows") {
  auto fam = make_family("binary_tree");
  Rng rng(67);
  Ball b = fam->ball(4);
  std::vector<std::string> ids;
  for (const Edge& e : b.graph.edges()) ids.push_back(e.id);
  for (int i = 0; i < 30; ++i) {
    std::set<std::string> f;
    int size = rng.range(0, 3);
    while (static_cast<int>(f.size()) < size) {
      f.insert(ids[static_cast<std::size_t>(rng.below(static_cast<int>(ids.size())))]);
    }
    EndApprox base = end_classes(*fam, 4, f);
    std::set<std::string> bigger = f;
    bigger.insert(ids[static_cast<std::size_t>(rng.below(static_cast<int>(ids.size())))]);
    EndApprox refined = end_classes(*fam, 4, bigger);
    CHECK(base.escaping_count() <= refined.escaping_count());
    CHECK(refines(refined, base));
  }
}

TEST_CASE("grid embeds in itself") {
  auto grid = make_family("grid");
  EmbedReport r = check_embedding(*grid, *grid, 4, 2);
  CHECK(r.subgraph_ok);
  CHECK(r.bond_faithful_ok);
  CHECK(r.classes_injective);
  CHECK(r.pass);
}

TEST_CASE("double ray in the grid fails bond-faithfulness and merges classes") {
  auto grid = make_family("grid");
  auto dray = make_family("double_ray");
  EmbedReport r = check_embedding(*dray, *grid, 4, 2);
  CHECK(r.subgraph_ok);
  CHECK_FALSE(r.bond_faithful_ok);  // single h-edges are h-bonds, not g-bonds
  CHECK_FALSE(r.classes_injective);
  CHECK_FALSE(r.pass);
  REQUIRE(!r.merges.empty());
  // the two arms of the double ray land in the grid's single class
  const EmbedMerge& m = r.merges.front();
  CHECK(m.rep_a != m.rep_b);
  CHECK(m.g_class >= 0);
}

TEST_CASE("a ladder column inside the 3-column ladder fails bond-faithfulness") {
  auto ladder = make_family("k_column_ladder:3");
  auto column = make_family("ladder_column:a");
  EmbedReport r = check_embedding(*column, *ladder, 4, 2);
  CHECK(r.subgraph_ok);
  CHECK_FALSE(r.bond_faithful_ok);  // single rails are column bonds, not ladder bonds
  CHECK_FALSE(r.pass);
  // a one-way column has a single edge-end, so injectivity is vacuous
  CHECK(r.classes_injective);
}

TEST_CASE("vertex separation count: cubic tree contrast") {
  auto fam = make_family("cubic_tree_plus_root:9");
  // deleting r alone always leaves the 3 subtrees
  CHECK(vertex_separation_components(*fam, 4, 0) == 3);
  CHECK(vertex_separation_components(*fam, 6, 0) == 3);
  // matched-resolution vertex separators: counts double per level
  CHECK(vertex_separation_components(*fam, 4, 2) == 12);
  CHECK(vertex_separation_components(*fam, 5, 3) == 24);
  int prev = 0;
  for (int depth = 4; depth <= 7; ++depth) {
    int count = vertex_separation_components(*fam, depth, depth - 2);
    CHECK(count > prev);
    prev = count;
  }
}

TEST_CASE("embedding success bounds the escaping class counts") {
  // when bond-faithfulness evidence holds, the subgraph cannot show more
  // escaping classes than the host at any tested resolution
  auto grid = make_family("grid");
  for (int depth : {3, 4}) {
    EmbedReport r = check_embedding(*grid, *grid, depth, 2);
    REQUIRE(r.bond_faithful_ok);
    Ball b = grid->ball(depth);
    for (const Edge& e : b.graph.edges()) {
      EndApprox h = end_classes(*grid, depth, {e.id});
      EndApprox g = end_classes(*grid, depth, {e.id});
      CHECK(h.escaping_count() <= g.escaping_count());
    }
  }
}
