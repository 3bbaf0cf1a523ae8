#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mgo/lazy.hpp"
#include "mgo/orientation.hpp"

namespace mgo {

/// One member of a subgraph/orientation sequence, restricted to a window.
struct GraphSnapshot {
  std::set<std::string> vertices;
  std::set<std::string> edges;
  std::map<std::string, Dir> dir;  // optional; traversal direction for paths

  static GraphSnapshot of_path(const MultiGraph& carrier, const PathInGraph& p);
  static GraphSnapshot of_orientation(const MultiGraph& window, const Orientation& o);
};

enum class Membership { StablyIn, StablyOut, Oscillating };

struct ElementStatus {
  Membership membership = Membership::Oscillating;
  int stabilized_at = 0;  // smallest N with constant membership on [N, end)
};

/// Cofinite-stabilization limit of a sequence over a fixed window: the
/// checkable fragment of an ultrafilter limit. Elements constant from
/// tail_start onward are classified; everything else is reported
/// oscillating, never resolved by fiat.
struct StableLimit {
  Ball window;
  int seq_len = 0;
  int tail_start = 0;
  std::map<std::string, ElementStatus> vertex_status;
  std::map<std::string, ElementStatus> edge_status;
  std::map<std::string, ElementStatus> dir_status;  // stably-in edges only
  std::map<std::string, Dir> stable_dir;            // direction-stable edges

  std::vector<std::string> stable_vertices() const;
  std::vector<std::string> stable_edges() const;
  std::vector<std::string> oscillating() const;
  /// Graph of stably-in vertices and edges.
  MultiGraph limit_graph() const;
  Orientation limit_orientation() const;
};

StableLimit stable_limit(const Ball& window, const std::vector<GraphSnapshot>& seq,
                         int tail_start);

/// Experimental pseudo-ultrafilter mode: a seeded priority over indices
/// selects a deterministic subsequence (roughly half) and the stable limit
/// is taken along it. Elements oscillating in the full sequence may resolve
/// here, and the resolution depends on the seed; the acceptance suite never
/// uses this mode.
StableLimit stable_limit_pseudo(const Ball& window, const std::vector<GraphSnapshot>& seq,
                                int tail_start, std::uint64_t seed);

struct DegreeEntry {
  std::string vertex;
  int degree = 0;
  int in_degree = 0;
  int out_degree = 0;
  std::string role;  // "start", "end", "interior", "window-boundary", "oscillation-adjacent"
  bool checked = false;
  bool ok = false;
};

struct DegreeReport {
  bool pass = false;
  std::vector<DegreeEntry> entries;
  std::vector<std::string> violations;
};

/// Degree discipline of a u-v path limit: endpoints degree 1 (out/in only),
/// interior degree 2 with in = out = 1. Vertices adjacent to oscillating
/// edges and window-boundary vertices are excluded from the exact demand
/// and reported as such.
DegreeReport check_path_limit_degrees(const StableLimit& lim, const std::string& u,
                                      const std::string& v);

struct LimitGap {
  std::size_t after = 0;  // gap follows elements[after]
  int end_class = -1;     // condensation node at the window resolution
  bool assignable = false;
  std::string exit_vertex;   // first beyond-window vertex of the left flank
  std::string entry_vertex;  // last beyond-window vertex of the right flank
};

/// Position order ≺ over the stable elements of a path limit, with gap
/// detection and per-gap end assignment.
struct LimitOrder {
  std::vector<std::string> elements;  // vertices and edges, stabilized order
  bool total = false;
  std::vector<std::string> unstable_positions;
  std::vector<LimitGap> gaps;
  int end_node_count = 0;
};

LimitOrder build_limit_order(const StableLimit& lim, const std::vector<PathInGraph>& paths,
                             const LazyGraph& family, int margin = 2);

/// Alternating finite directed path segments and end-class markers.
struct TopologicalPathSeq {
  std::vector<PathInGraph> segments;
  std::vector<int> markers;  // size = segments.size() - 1
  std::string start, end;

  bool operator==(const TopologicalPathSeq& o) const = default;
};

/// Contracts each maximal stretch between two gaps assigned the same end
/// class to a single marker (outermost-first over the finite gap list).
/// Throws InputError when a gap carries no assignable end class.
TopologicalPathSeq extract_topological_path(const LimitOrder& ord, const StableLimit& lim);

/// Re-applies the contraction rules to an already-extracted sequence;
/// identity on valid outputs.
TopologicalPathSeq extract_topological_path(const TopologicalPathSeq& seq);

struct PipelineResult {
  Ball window;
  Ball outer_ball;
  std::vector<int> depths;
  StableLimit limit;
  bool stabilized = false;
  Orientation window_orientation;  // stable directions when stabilized
  Orientation outer_orientation;   // orientation of the deepest exhaustion ball
  std::vector<std::string> oscillating_edges;
};

/// Orients every exhaustion ball ball(n), n in [window_depth, upto], with
/// orient_exact(mode) and takes the stable limit of the orientation
/// sequence on the window. Non-stabilization is reported, never resolved.
PipelineResult orient_pipeline(const LazyGraph& g, int window_depth, int upto, OrientMode mode,
                               SearchBudget budget = {});

}  // namespace mgo
