#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mgo/lazy.hpp"
#include "mgo/orientation.hpp"

namespace mgo {

/// Finite stand-in for the end regions beyond a window: one node per
/// escaping component of ball(outer) minus the vertices of ball(inner).
/// `gates` are the component's outer-boundary vertices, where entering rays
/// are certified to reach depth `outer` and exiting rays start.
struct EndCondensation {
  Ball outer_ball;
  Ball inner_ball;
  int inner = 0;
  int outer = 0;

  struct Node {
    std::vector<std::string> component;
    std::vector<std::string> gates;
  };
  std::vector<Node> nodes;
};

EndCondensation condense(const LazyGraph& g, int inner, int outer);

/// Alternating directed ball-paths and condensation-node visits: segment i
/// ends at a gate of nodes[i], segment i+1 starts at a(nother) gate of the
/// same node.
struct TopoWitness {
  std::vector<PathInGraph> segments;
  std::vector<int> nodes;  // size = segments.size() - 1
};

struct TopoReachResult {
  bool reachable = false;
  TopoWitness witness;           // for the requested inner radius
  std::map<int, bool> sweep;     // verdict per inner radius in [inner, outer-1]
  bool stable = false;           // all sweep verdicts agree
};

/// Oriented topological reachability at resolution (inner, outer): is there
/// an oriented witness from x to y avoiding `forbidden`? Sound only in the
/// limit; the sweep reports whether the verdict is an artifact of the inner
/// radius.
TopoReachResult topo_reach(const LazyGraph& g, const Orientation& o, const std::string& x,
                           const std::string& y, int inner, int outer,
                           const std::set<std::string>& forbidden = {});

struct TopoCutResult {
  int value = 0;               // exact smallest |F| killing all witnesses
  bool cap_exceeded = false;   // value > cap
  std::set<std::string> cut;   // witness separator (when value <= cap)
  std::map<int, int> sweep;    // value per inner radius
  bool stable = false;
};

/// Topological edge-connectivity at resolution: smallest edge set meeting
/// every topological x-y witness. Computed exactly as a minimum cut of the
/// condensation digraph (end passages uncuttable); `cap` only marks the
/// out-of-range flag.
TopoCutResult topo_lambda(const LazyGraph& g, const std::string& x, const std::string& y,
                          int inner, int outer, int cap = 4);

/// Oriented counterpart over a total orientation of ball(outer).
TopoCutResult topo_arc_lambda(const LazyGraph& g, const Orientation& o, const std::string& x,
                              const std::string& y, int inner, int outer, int cap = 4);

}  // namespace mgo
