#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mgo/graph.hpp"
#include "mgo/orientation.hpp"

namespace mgo {

/// Finite window of a lazy family: the induced graph on the exhaustion set
/// V_n, plus boundary markers on vertices whose family degree exceeds their
/// degree in the window.
struct Ball {
  MultiGraph graph;
  std::vector<std::string> roots;
  int depth = 0;
  std::set<std::string> boundary;
  std::string family;

  bool is_boundary(const std::string& v) const { return boundary.count(v) > 0; }
  /// Vertices of the ball that are not boundary markers.
  std::vector<std::string> interior() const;
};

/// Deterministic generator for an infinite graph family. Two instances with
/// the same name() enumerate identical ids in identical order; the incident
/// enumeration order is part of the family's identity.
class LazyGraph {
 public:
  virtual ~LazyGraph() = default;

  virtual std::string name() const = 0;
  virtual bool has_vertex(const std::string& id) const = 0;
  /// False for vertices of declared infinite degree (members of V_*).
  virtual bool finite_degree(const std::string&) const { return true; }
  /// Incident edges e^v_i in enumeration order. For declared-infinite
  /// vertices this is the enumeration within the family's internal
  /// truncation.
  virtual std::vector<Edge> incident(const std::string& v) const = 0;
  virtual std::vector<std::string> default_roots() const = 0;

  /// Exhaustion window V_0 = roots, V_{n+1} = V_n ∪ N(V_n), induced graph,
  /// boundary flags. Families with infinite-degree vertices override this
  /// with their canonical finite exhaustion. Throws BoundError past
  /// edge_cap.
  virtual Ball ball(const std::vector<std::string>& roots, int depth,
                    std::int64_t edge_cap = kDefaultEdgeCap) const;
  Ball ball(int depth) const { return ball(default_roots(), depth); }

  static constexpr std::int64_t kDefaultEdgeCap = 1000000;

 protected:
  Ball finish_ball(std::set<std::string> verts, const std::vector<std::string>& roots, int depth,
                   std::int64_t edge_cap = kDefaultEdgeCap) const;
};

/// Families:
///   one_way_ladder            columns a,b; rails and rungs, mult 1
///   doubled_ladder            one_way_ladder with every edge doubled
///   k_column_ladder:C         C columns a,b,c,...; adjacent-column rungs
///   ladder_column:C:I         column I of k_column_ladder:C (subgraph ids)
///   grid                      quarter grid on (x,y), x,y >= 0
///   double_ray                the L-shaped double ray inside grid (subgraph ids)
///   k_ray:K                   ray with K parallel copies per step
///   expanding_ray             n-th step carries n parallel copies
///   cubic_tree_plus_root      cubic tree T plus an edge r-v for every v (example
///                             family with one infinite-degree vertex r)
///   binary_tree               rooted tree, two children everywhere
///   cycle:N                   finite N-cycle (balls saturate)
/// Parameters follow after ':'.
std::unique_ptr<LazyGraph> make_family(const std::string& spec);

/// Wraps a finite multigraph as a (saturating) lazy family, so window and
/// condensation machinery applies to finite inputs too.
std::unique_ptr<LazyGraph> make_fixed_family(MultiGraph g, std::string name = "fixed");

/// Oriented path presets over ladder balls.
///   "four_column"  up column a to level n, across, down b to the base,
///                  across, up c to level n, across, down d
///   "out_and_back" up column a to level n, across, down b
PathInGraph ladder_path_preset(const std::string& preset, const MultiGraph& carrier, int n);

/// Named orientation presets over a family ball.
///   "ladder_example"  (ladders) a-rails outward, b-rails inward, rungs from b to a
///   "outward"         every edge from lower BFS layer to higher (ties by id toward
///                     the lexicographically larger endpoint)
Orientation preset_orientation(const std::string& preset, const Ball& ball);

}  // namespace mgo
