#pragma once

#include <set>
#include <string>
#include <vector>

#include "mgo/graph.hpp"
#include "mgo/orientation.hpp"

namespace mgo {

/// An edge cut with its witnessing side partition. `bond` is set when no
/// proper subset is a cut between the same sides.
struct CutSet {
  std::set<std::string> edges;
  std::vector<std::string> side_a;
  std::vector<std::string> side_b;
  bool bond = false;
};

/// Local edge-connectivity: the maximum number of pairwise edge-disjoint
/// x-y paths, equal to the minimum x-y edge cut. Parallel edges collapse to
/// integer capacities inside the solver. Disconnected pairs give 0; x == y
/// is rejected.
int lambda(const MultiGraph& g, const std::string& x, const std::string& y);

/// Directed counterpart under a total orientation: maximum arc-disjoint
/// directed x -> y paths.
int arc_lambda(const MultiGraph& g, const Orientation& o, const std::string& x,
               const std::string& y);

/// A minimum x-y cut with explicit edge ids, side partition and bond flag.
CutSet min_cut(const MultiGraph& g, const std::string& x, const std::string& y);

/// lambda(x,y) >= k for every pair. k = 0 is vacuous; disconnected graphs
/// fail for k >= 1.
bool is_k_edge_connected(const MultiGraph& g, int k);

/// Exact test: F is a minimal cut of g (removal splits exactly one
/// component in two and F is the full boundary between the two sides).
bool is_bond(const MultiGraph& g, const std::set<std::string>& f);

/// Every bond of size <= max_size, each exactly once, ordered by
/// (size, edge ids). Refuses graphs beyond the enumeration bounds instead
/// of silently truncating.
std::vector<CutSet> enumerate_bonds(const MultiGraph& g, int max_size,
                                    std::size_t max_vertices = 22);

constexpr int kDefaultBondCap = 6;

}  // namespace mgo
