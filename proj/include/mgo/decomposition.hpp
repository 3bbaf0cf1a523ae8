#pragma once

#include <set>
#include <string>
#include <vector>

#include "mgo/graph.hpp"

namespace mgo {

/// Edge partition of a parent graph into subgraphs (parts reference parent
/// edge ids; part vertices are the endpoints).
struct Decomposition {
  MultiGraph parent;
  std::vector<std::set<std::string>> parts;

  MultiGraph part_graph(std::size_t i) const { return parent.restrict_to(parts.at(i)); }
};

struct DecompReport {
  bool partition_ok = false;
  std::vector<std::string> missing;     // parent edges in no part
  std::vector<std::string> duplicated;  // parent edges in several parts
  std::vector<std::string> foreign;     // part edges not in the parent
  std::vector<bool> part_connected;
  bool all_connected = false;
};

DecompReport verify_decomposition(const Decomposition& d);

struct BondViolation {
  enum Kind { PartBondNotParentBond, ParentBondSplit, ParentCutSplit } kind;
  std::size_t part = 0;            // for PartBondNotParentBond
  std::set<std::string> witness;   // the offending bond/cut
};

struct BondFaithReport {
  bool pass = false;
  int cap = 0;
  bool strict_cuts = false;
  std::vector<BondViolation> violations;
};

/// Checks (a) every bond of every part with size <= cap is a bond of the
/// parent and (b) every parent bond with size <= cap lies inside a single
/// part. With strict_cuts, (b) additionally ranges over arbitrary cuts
/// (edge sets whose removal increases the component count), the literal
/// reading of the decomposition definition.
BondFaithReport verify_bond_faithful(const Decomposition& d, int cap, bool strict_cuts = false);

struct BreakpointSegment {
  std::string from, to;
  int part = -1;
  int lambda_part = 0;    // connectivity of (from,to) inside the part
  int lambda_parent = 0;  // lambda(x,y) in the parent
  bool ok = false;        // lambda_part >= min(lambda_parent, cap)
};

struct BreakpointsResult {
  PathInGraph path;
  std::vector<std::string> breakpoints;  // x = x_0, ..., x_{n+1} = y
  std::vector<BreakpointSegment> segments;
  bool lambda_ok = false;  // all segments ok
};

/// Finds an x-y path whose edges decompose into one contiguous run per
/// part, with lambda_{part}(x_m, x_{m+1}) >= min(lambda_parent(x,y), cap)
/// per segment. Searches simple paths in lexicographic order and returns
/// the first fully satisfying one; otherwise the best candidate with its
/// failing segments flagged.
BreakpointsResult breakpoints(const Decomposition& d, const std::string& x, const std::string& y,
                              int cap = 1 << 20, std::size_t max_paths = 20000);

}  // namespace mgo
