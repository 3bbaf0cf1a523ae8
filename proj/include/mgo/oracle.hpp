#pragma once

#include "mgo/graph.hpp"
#include "mgo/orientation.hpp"

namespace mgo::oracle {

/// Brute-force local edge-connectivity: smallest edge subset whose removal
/// separates x from y (BFS connectivity per subset; no flow machinery).
/// Guards at 16 edges. Independent of the Dinic-based path in mgo::lambda.
int lambda_bruteforce(const MultiGraph& g, const std::string& x, const std::string& y);

/// Brute-force directed path packing: maximum number of pairwise
/// arc-disjoint directed x->y paths, by enumerating simple directed paths
/// and backtracking over packings.
int arc_packing_bruteforce(const MultiGraph& g, const Orientation& o, const std::string& x,
                           const std::string& y);

}  // namespace mgo::oracle
