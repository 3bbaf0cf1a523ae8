#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mgo/errors.hpp"

namespace mgo {

/// One parallel copy of an undirected edge. Endpoints are stored in
/// canonical order (u < v lexicographically); `copy` distinguishes
/// parallel copies between the same endpoints.
struct Edge {
  std::string u;
  std::string v;
  int copy = 0;
  std::string id;  // "<u>-<v>-<copy>"

  static std::string make_id(const std::string& a, const std::string& b, int copy);
};

/// Finite undirected multigraph. Parallel edges allowed, loops rejected.
/// Vertices are opaque strings; '-' and whitespace are reserved for the
/// canonical edge-id syntax and refused in vertex ids.
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Parses the textual format: lines `v <id> [inf]`, `e <u> <v> <mult>`,
  /// `#` comments. Throws ParseError with a line number.
  static MultiGraph parse(std::string_view text);

  void add_vertex(const std::string& id, bool declared_infinite = false);
  /// Appends `multiplicity` parallel copies between a and b (order-free).
  void add_edges(const std::string& a, const std::string& b, int multiplicity = 1);
  /// Adds one copy with an explicit copy index (for subgraphs and lazy
  /// windows whose ids must match a parent enumeration).
  void add_edge_copy(const std::string& a, const std::string& b, int copy);

  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const;
  const Edge& edge(const std::string& id) const;

  const std::vector<std::string>& vertices() const;
  const std::vector<Edge>& edges() const;
  std::size_t vertex_count() const { return vertices().size(); }
  std::size_t edge_count() const { return edges().size(); }

  /// Incident edge ids of v in canonical id order (each parallel copy listed).
  const std::vector<std::string>& incident(const std::string& v) const;
  int degree(const std::string& v) const;
  int multiplicity(const std::string& a, const std::string& b) const;
  /// The endpoint of e other than v.
  const std::string& other_end(const Edge& e, const std::string& v) const;

  bool declared_infinite(const std::string& v) const { return infinite_.count(v) > 0; }
  const std::set<std::string>& declared_infinite_set() const { return infinite_; }

  /// Subgraph on the given edge ids (vertices = their endpoints). Parent edge
  /// ids are preserved verbatim, so copy indices need not be contiguous.
  MultiGraph restrict_to(const std::set<std::string>& edge_ids) const;
  /// Subgraph keeping the listed vertices plus edges among them, dropping
  /// also any edge in `removed_edges`.
  MultiGraph induced(const std::set<std::string>& keep_vertices,
                     const std::set<std::string>& removed_edges = {}) const;

  /// Canonical serialization in the textual format (sorted, multiplicities
  /// aggregated). Equal graphs serialize identically.
  std::string to_text() const;
  /// FNV-1a 64-bit hash of to_text(), hex-encoded.
  std::string content_hash() const;

  bool operator==(const MultiGraph& o) const;

 private:
  void add_edge_id(const std::string& a, const std::string& b, int copy);
  void ensure_finalized() const;

  mutable std::vector<std::string> vertices_;  // sorted once finalized
  mutable std::map<std::string, int> vertex_index_;
  mutable std::vector<Edge> edges_;            // sorted by (u, v, copy) once finalized
  mutable std::map<std::string, int> edge_index_;
  mutable std::map<std::string, std::vector<std::string>> incident_;
  mutable bool dirty_ = false;
  std::map<std::pair<std::string, std::string>, int> next_copy_;
  std::set<std::string> infinite_;
};

/// Connected components after deleting the given edges and vertices.
/// Each component is sorted; components ordered by smallest vertex.
std::vector<std::vector<std::string>> components(const MultiGraph& g,
                                                 const std::set<std::string>& removed_edges = {},
                                                 const std::set<std::string>& removed_vertices = {});

bool is_connected(const MultiGraph& g);

/// A path v0 e0 v1 e1 ... (edges.size() + 1 == vertices.size()). A single
/// vertex with no edges is a valid (trivial) path.
struct PathInGraph {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;

  bool trivial() const { return edges.empty(); }
  bool operator==(const PathInGraph& o) const = default;
};

/// Validates incidence and simplicity of p in g; throws InputError.
void validate_path(const MultiGraph& g, const PathInGraph& p, bool require_simple = true);

/// Shortest x-y path by BFS (edge choices in canonical id order). Throws
/// InputError when disconnected.
PathInGraph shortest_path(const MultiGraph& g, const std::string& x, const std::string& y);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace mgo
