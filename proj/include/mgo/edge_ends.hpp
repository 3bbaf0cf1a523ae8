#pragma once

#include <set>
#include <string>
#include <vector>

#include "mgo/lazy.hpp"

namespace mgo {

/// Component structure of (ball - F) at a resolution (depth, F), probed in
/// a slightly deeper ball so that pieces separated only by the window
/// boundary are recognized as one class. The count of escaping classes
/// upper-bounds the number of edge-end classes F can distinguish.
struct EndApprox {
  std::string family;
  int depth = 0;
  int margin = 0;  // probe ball depth = depth + margin
  std::set<std::string> cut;

  struct Class {
    std::vector<std::string> vertices;        // restricted to the requested ball
    std::vector<std::string> probe_vertices;  // full component in the probe ball
    bool escaping = false;                    // touches the probe boundary
  };
  std::vector<Class> classes;  // ordered by smallest probe vertex

  Ball ball;   // requested depth
  Ball probe;  // depth + margin

  int escaping_count() const;
  /// Index of the class containing v (searched in probe components).
  int class_of(const std::string& v) const;
};

/// Components of ball(depth) - F with escape flags. F must lie inside the
/// requested ball.
EndApprox end_classes(const LazyGraph& g, int depth, const std::set<std::string>& cut,
                      int margin = 2);

/// Inverse-system coherence between two resolutions at the same depth with
/// coarse.cut ⊆ fine.cut: every fine class must sit inside exactly one
/// coarse class.
bool refines(const EndApprox& fine, const EndApprox& coarse);

struct EmbedMerge {
  std::set<std::string> cut;         // the separator exhibiting the merge
  std::string rep_a, rep_b;          // vertices in distinct h-classes
  int g_class = -1;                  // single g-class both land in
};

struct EmbedReport {
  bool subgraph_ok = false;      // h-ball edges are g-ball edges
  bool bond_faithful_ok = false; // every h-ball bond <= cap is a g-ball bond
  std::vector<std::set<std::string>> bond_violations;
  bool classes_injective = false;
  std::vector<EmbedMerge> merges;
  bool pass = false;
};

/// Embedding evidence at resolution `depth` for h ⊆ g: bond-faithfulness of
/// the h-window inside the g-window, and separation transfer (any separator
/// splitting escaping h-classes must split their images in g). Separators
/// tried: every single h-edge plus every h-bond of size <= cap.
EmbedReport check_embedding(const LazyGraph& h, const LazyGraph& g, int depth, int cap,
                            int margin = 2);

/// Vertex-end contrast: number of components of ball(depth) after deleting
/// all vertices of ball(inner_radius). inner_radius = 0 deletes the roots
/// alone.
int vertex_separation_components(const LazyGraph& g, int depth, int inner_radius);

}  // namespace mgo
