#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mgo/graph.hpp"
#include "mgo/orientation.hpp"

namespace mgo {

enum class ExpandMode { KRay, Expanding };

/// Result of replacing target vertices by truncated rays. Original edges
/// keep their identity through an explicit bijection (carrier ids differ
/// because endpoints move onto ray vertices).
///
/// Ray vertex ids are "(v,i)". KRay mode indexes from 0 with l parallel
/// copies per step; Expanding mode indexes from 1 with the step into (v,n+1)
/// carrying n copies, so the λ-preserving witness vertex (v,m) exists
/// whenever m <= deg(v).
struct ExpandedGraph {
  MultiGraph carrier;
  MultiGraph origin;
  std::set<std::string> targets;
  ExpandMode mode = ExpandMode::KRay;
  int l = 0;  // parallel copies per step in KRay mode

  std::map<std::string, std::vector<std::string>> ray_vertices;  // target -> ids, index order
  std::map<std::string, std::set<std::string>> ray_edges;        // target -> ray edge ids
  std::map<std::string, std::string> carrier_of_origin;          // origin edge -> carrier edge
  std::map<std::string, std::string> origin_of_carrier;          // carrier edge -> origin edge
  std::map<std::string, bool> endpoint_flipped;                  // origin edge id -> canonical order flipped
  std::map<std::string, std::map<std::string, int>> attach;      // target -> origin edge -> enumeration index
  std::map<std::string, std::string> vertex_origin;              // carrier vertex -> origin vertex (π)

  bool is_ray_edge(const std::string& carrier_edge_id) const {
    return !origin_of_carrier.count(carrier_edge_id);
  }
  /// π on vertices: ray vertices project to their target, others to themselves.
  const std::string& project_vertex(const std::string& carrier_vertex) const;
  /// Carrier ray vertex of `target` at enumeration index i.
  const std::string& ray_vertex(const std::string& target, int index) const;
};

/// Replaces each target vertex by a truncated ray with exactly deg(v) ray
/// vertices (or ray_len_override[v] when given, never less than deg(v)),
/// attaching the i-th incident edge at ray index i. Enumeration of E(v)
/// defaults to canonical edge-id order; enum_order overrides per target.
/// Targets of degree < 2 are rejected as degenerate.
ExpandedGraph expand(const MultiGraph& g, const std::set<std::string>& targets, ExpandMode mode,
                     int l = 2,
                     const std::map<std::string, std::vector<std::string>>* enum_order = nullptr,
                     const std::map<std::string, int>* ray_len_override = nullptr);

/// Lifts an origin path: original edges mapped through the bijection, ray
/// segments inserted between attachment indices. Ray steps route around
/// `forbidden` parallel copies; throws InputError when a needed step has no
/// free copy (explicit routing failure).
PathInGraph lift_path(const ExpandedGraph& e, const PathInGraph& origin_path,
                      const std::set<std::string>& forbidden = {});

struct ProjectedPath {
  PathInGraph trail;        // may repeat vertices (origin trail)
  PathInGraph simple_path;  // cycles removed
};

/// Drops ray edges, maps ray vertices through π, extracts a simple path
/// from the resulting trail.
ProjectedPath project_path(const ExpandedGraph& e, const PathInGraph& q);

/// Restriction of a total carrier orientation along the original-edge
/// bijection.
Orientation induce_orientation(const ExpandedGraph& e, const Orientation& carrier_orientation);

/// Connectivity witness pair: (u,m) with m = lambda(origin,u,v) for expanded
/// endpoints (clipped identity for unexpanded ones). Throws BoundError when
/// a truncated ray is too short to contain index m, naming the needed
/// length. Expanding mode only.
std::pair<std::string, std::string> connectivity_witness_pair(const ExpandedGraph& e,
                                                              const std::string& u,
                                                              const std::string& v);

}  // namespace mgo
