#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mgo/graph.hpp"

namespace mgo {

/// Direction of an edge relative to its canonical endpoint order (u < v).
enum class Dir { uv, vu };

inline Dir flip(Dir d) { return d == Dir::uv ? Dir::vu : Dir::uv; }

/// Total direction assignment keyed by canonical edge id, so it survives a
/// re-parse of its carrier graph.
struct Orientation {
  std::map<std::string, Dir> dir;

  bool total_on(const MultiGraph& g) const;
  /// Throws InputError unless total on g.
  void require_total(const MultiGraph& g) const;

  const std::string& tail_of(const Edge& e) const { return dir.at(e.id) == Dir::uv ? e.u : e.v; }
  const std::string& head_of(const Edge& e) const { return dir.at(e.id) == Dir::uv ? e.v : e.u; }
  void set(const Edge& e, const std::string& tail) { dir[e.id] = (tail == e.u) ? Dir::uv : Dir::vu; }

  /// Restriction to the edges of g.
  Orientation restricted_to(const MultiGraph& g) const;

  bool operator==(const Orientation& o) const = default;
};

struct PairBalance {
  std::string x, y;
  int lambda = 0;      // undirected local edge-connectivity
  int arc_lambda = 0;  // directed, x -> y
  int target = 0;      // floor(lambda/2) for well-balancedness
  bool ok = false;
};

struct BalanceReport {
  bool verdict = false;
  std::vector<PairBalance> pairs;  // all ordered pairs, lexicographic
};

/// Well-balancedness check: verdict true iff arc_lambda(x,y) >= floor(lambda(x,y)/2)
/// for every ordered pair.
BalanceReport check_well_balanced(const MultiGraph& g, const Orientation& o);

struct KArcReport {
  bool verdict = false;
  int k = 0;
  std::vector<PairBalance> failures;  // pairs with arc_lambda < k
};

KArcReport check_k_arc_connected(const MultiGraph& g, const Orientation& o, int k);

/// Target property for orientation search.
struct OrientMode {
  enum Kind { WellBalanced, KArc } kind = WellBalanced;
  int k = 1;  // used by KArc

  static OrientMode well_balanced() { return {WellBalanced, 0}; }
  static OrientMode k_arc(int k) { return {KArc, k}; }
  /// Parses "wb" or "karc:K".
  static OrientMode parse(const std::string& text);
  std::string to_string() const;
};

struct SearchBudget {
  std::size_t max_edges = 24;
  std::uint64_t max_nodes = 4000000;
};

struct UnsatCertificate {
  std::string x, y;
  std::set<std::string> cut;  // a cut too small for the target
  std::string reason;
};

struct OrientResult {
  enum Status { Found, Unsat, Budget } status = Unsat;
  Orientation orientation;       // valid when Found
  UnsatCertificate certificate;  // valid when Unsat
  std::uint64_t nodes_explored = 0;
};

/// Exact backtracking search over edge directions with cut-based pruning.
/// Deterministic: fixed branch order (decreasing min-cut membership, ties by
/// id) and value order (a Robbins-style DFS orientation first, parallel
/// copies alternating). Returned orientations are re-checked before return.
OrientResult orient_exact(const MultiGraph& g, OrientMode mode, SearchBudget budget = {});

/// Orients along a closed Eulerian trail; requires every degree even and g
/// connected. In-degree equals out-degree at every vertex, which makes the
/// result well-balanced.
Orientation orient_eulerian(const MultiGraph& g);

/// Union of edge-disjoint oriented parts. Throws InputError on overlapping
/// edge ids.
std::pair<MultiGraph, Orientation> glue(
    const std::vector<std::pair<MultiGraph, Orientation>>& parts);

}  // namespace mgo
