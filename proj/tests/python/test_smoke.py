"""Smoke tests for the python bindings."""

import pytest

import mgo

K4 = "e a b 1\ne a c 1\ne a d 1\ne b c 1\ne b d 1\ne c d 1\n"
FIG8 = "e w a 1\ne w b 1\ne a b 1\ne w c 1\ne w d 1\ne c d 1\n"


def test_parse_and_query():
    g = mgo.MultiGraph.parse(K4)
    assert len(g) == 4
    assert g.degree("a") == 3
    assert g.content_hash() == mgo.MultiGraph.parse(g.to_text()).content_hash()


def test_loops_rejected():
    with pytest.raises(mgo.GraphParseError):
        mgo.MultiGraph.parse("e a a 1\n")


def test_lambda_and_cut():
    g = mgo.MultiGraph.parse(K4)
    assert mgo.lam(g, "a", "c") == 3
    assert mgo.lam(g, "a", "c") == mgo.oracle_lambda(g, "a", "c")
    cut = mgo.min_cut(g, "a", "c")
    assert len(cut["edges"]) == 3


def test_orientations():
    g = mgo.MultiGraph.parse(FIG8)
    euler = mgo.orient_eulerian(g)
    assert mgo.check_well_balanced(g, euler)["verdict"]
    exact = mgo.orient_exact(g, "karc:1")
    assert exact["status"] == "found"
    assert mgo.check_k_arc_connected(g, exact["orientation"], 1)
    bridge = mgo.MultiGraph.parse("e a b 1\n")
    unsat = mgo.orient_exact(bridge, "karc:1")
    assert unsat["status"] == "unsat"
    assert unsat["certificate"]["cut"] == ["a-b-0"]


def test_expansion_round_trip():
    g = mgo.MultiGraph.parse("e h r0 1\ne h r1 1\ne h r2 1\ne r0 r1 1\ne r1 r2 1\ne r0 r2 1\n")
    e = mgo.expand(g, ["h"], mode="kray", l=2)
    assert len(e.ray_vertices("h")) == 3
    lifted = mgo.expand(g, ["h"], mode="expanding").witness_pair("h", "r0")
    assert lifted[1] == "r0"
    vs, es = e.lift_path(["r0", "h", "r2"], ["h-r0-0", "h-r2-0"])
    back = e.project_path(vs, es)
    assert back["path_vertices"] == ["r0", "h", "r2"]


def test_families_and_ends():
    fam = mgo.family("cubic_tree_plus_root:8")
    ball = fam.ball(3)
    assert "r" in ball.boundary
    ea = mgo.end_classes(fam, 4, ["r-t:0-0", "r-t:0-1"])
    assert ea["escaping"] == 1
    grid = mgo.family("grid")
    dray = mgo.family("double_ray")
    emb = mgo.check_embedding(dray, grid, depth=4, cap=2)
    assert not emb["pass"]
    assert emb["merges"] > 0


def test_decomposition():
    g = mgo.MultiGraph.parse(FIG8)
    parts = [["a-w-0", "b-w-0", "a-b-0"], ["c-w-0", "d-w-0", "c-d-0"]]
    assert mgo.verify_decomposition(g, parts)["partition_ok"]
    assert mgo.verify_bond_faithful(g, parts, cap=3)["pass"]
    bp = mgo.breakpoints(g, parts, "a", "c")
    assert bp["breakpoints"] == ["a", "w", "c"]
    assert bp["lambda_ok"]


def test_topological_ladder():
    fam = mgo.family("one_way_ladder")
    o = mgo.preset_orientation("ladder_example", fam.ball(8))
    g8 = fam.ball(8).graph
    assert mgo.arc_lam(g8, o, "a:0", "b:0") == 0
    reach = mgo.topo_reach(fam, o, "a:0", "b:0", inner=3, outer=8)
    assert reach["reachable"] and reach["stable"]
    assert reach["ends"] == [0]
    t = mgo.topo_arc_lam(fam, o, "a:0", "b:0", inner=3, outer=8)
    assert t["value"] >= 1


def test_pipeline():
    fam = mgo.family("one_way_ladder")
    r = mgo.orient_pipeline(fam, window=3, upto=9, mode="wb")
    assert r["stabilized"]
    assert r["oscillating"] == []
