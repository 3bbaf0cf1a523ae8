#include "mgo/flimit.hpp"

#include <algorithm>

#include "mgo/topo.hpp"

namespace mgo {

GraphSnapshot GraphSnapshot::of_path(const MultiGraph& carrier, const PathInGraph& p) {
  validate_path(carrier, p);
  GraphSnapshot snap;
  snap.vertices.insert(p.vertices.begin(), p.vertices.end());
  snap.edges.insert(p.edges.begin(), p.edges.end());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& e = carrier.edge(p.edges[i]);
    snap.dir[e.id] = (p.vertices[i] == e.u) ? Dir::uv : Dir::vu;
  }
  return snap;
}

GraphSnapshot GraphSnapshot::of_orientation(const MultiGraph& window, const Orientation& o) {
  GraphSnapshot snap;
  for (const auto& v : window.vertices()) snap.vertices.insert(v);
  for (const Edge& e : window.edges()) {
    snap.edges.insert(e.id);
    auto it = o.dir.find(e.id);
    if (it == o.dir.end()) throw InputError("orientation snapshot missing edge " + e.id);
    snap.dir[e.id] = it->second;
  }
  return snap;
}

namespace {

ElementStatus classify(const std::vector<bool>& bits, int tail_start) {
  ElementStatus st;
  int last_flip = 0;
  for (std::size_t n = 1; n < bits.size(); ++n) {
    if (bits[n] != bits[n - 1]) last_flip = static_cast<int>(n);
  }
  if (last_flip <= tail_start) {
    st.membership = bits.back() ? Membership::StablyIn : Membership::StablyOut;
    st.stabilized_at = last_flip;
  } else {
    st.membership = Membership::Oscillating;
    st.stabilized_at = last_flip;
  }
  return st;
}

}  // namespace

StableLimit stable_limit(const Ball& window, const std::vector<GraphSnapshot>& seq,
                         int tail_start) {
  if (seq.empty()) throw InputError("empty sequence");
  if (tail_start < 0 || tail_start + 2 > static_cast<int>(seq.size())) {
    throw InputError("sequence too short for tail start " + std::to_string(tail_start));
  }
  StableLimit lim;
  lim.window = window;
  lim.seq_len = static_cast<int>(seq.size());
  lim.tail_start = tail_start;
  const MultiGraph& w = window.graph;
  for (const auto& v : w.vertices()) {
    std::vector<bool> bits;
    for (const auto& snap : seq) bits.push_back(snap.vertices.count(v) > 0);
    lim.vertex_status[v] = classify(bits, tail_start);
  }
  for (const Edge& e : w.edges()) {
    std::vector<bool> bits;
    for (const auto& snap : seq) bits.push_back(snap.edges.count(e.id) > 0);
    ElementStatus st = classify(bits, tail_start);
    // A stably-in edge needs both endpoints stably-in; the window is an
    // induced subgraph so this only guards inconsistent snapshots.
    lim.edge_status[e.id] = st;
    if (st.membership != Membership::StablyIn) continue;
    std::optional<Dir> last;
    int flip = 0;
    bool saw = false;
    std::vector<std::pair<int, Dir>> present;
    for (std::size_t n = 0; n < seq.size(); ++n) {
      auto it = seq[n].dir.find(e.id);
      if (it == seq[n].dir.end()) continue;
      if (last && *last != it->second) flip = static_cast<int>(n);
      last = it->second;
      saw = true;
    }
    ElementStatus ds;
    if (!saw) {
      ds.membership = Membership::Oscillating;  // present but never directed
    } else if (flip <= tail_start) {
      ds.membership = Membership::StablyIn;
      ds.stabilized_at = flip;
      lim.stable_dir[e.id] = *last;
    } else {
      ds.membership = Membership::Oscillating;
      ds.stabilized_at = flip;
    }
    lim.dir_status[e.id] = ds;
  }
  return lim;
}

StableLimit stable_limit_pseudo(const Ball& window, const std::vector<GraphSnapshot>& seq,
                                int tail_start, std::uint64_t seed) {
  if (seq.size() < 4) throw InputError("sequence too short for pseudo-ultrafilter selection");
  // A filter-style refinement: whenever an element's membership is not
  // constant on the kept index set, a seeded coin picks which side the
  // pseudo-ultrafilter contains, and the index set shrinks to it. What
  // survives is constant on the kept set by construction.
  std::vector<std::size_t> kept;
  for (std::size_t n = static_cast<std::size_t>(tail_start); n < seq.size(); ++n) kept.push_back(n);
  auto refine = [&](const std::string& token, auto member) -> std::optional<bool> {
    bool first = member(kept.front());
    bool constant = true;
    for (std::size_t n : kept) {
      if (member(n) != first) constant = false;
    }
    if (constant) return first;
    bool side = (fnv1a64(std::to_string(seed) + "#" + token) & 1) != 0;
    std::vector<std::size_t> next;
    for (std::size_t n : kept) {
      if (member(n) == side) next.push_back(n);
    }
    if (next.size() < 2) return std::nullopt;  // refinement exhausted the window
    kept = std::move(next);
    return side;
  };

  StableLimit lim;
  lim.window = window;
  lim.seq_len = static_cast<int>(seq.size());
  lim.tail_start = tail_start;
  for (const auto& v : window.graph.vertices()) {
    auto side = refine(v, [&](std::size_t n) { return seq[n].vertices.count(v) > 0; });
    ElementStatus st;
    st.membership = !side ? Membership::Oscillating
                          : (*side ? Membership::StablyIn : Membership::StablyOut);
    st.stabilized_at = static_cast<int>(kept.front());
    lim.vertex_status[v] = st;
  }
  for (const Edge& e : window.graph.edges()) {
    auto side = refine(e.id, [&](std::size_t n) { return seq[n].edges.count(e.id) > 0; });
    ElementStatus st;
    st.membership = !side ? Membership::Oscillating
                          : (*side ? Membership::StablyIn : Membership::StablyOut);
    st.stabilized_at = static_cast<int>(kept.front());
    lim.edge_status[e.id] = st;
    if (st.membership != Membership::StablyIn) continue;
    auto dir_side = refine(e.id + "/dir", [&](std::size_t n) {
      auto it = seq[n].dir.find(e.id);
      return it != seq[n].dir.end() && it->second == Dir::uv;
    });
    ElementStatus ds;
    ds.membership = dir_side ? Membership::StablyIn : Membership::Oscillating;
    ds.stabilized_at = static_cast<int>(kept.front());
    lim.dir_status[e.id] = ds;
    if (dir_side) lim.stable_dir[e.id] = *dir_side ? Dir::uv : Dir::vu;
  }
  return lim;
}

std::vector<std::string> StableLimit::stable_vertices() const {
  std::vector<std::string> out;
  for (const auto& [v, st] : vertex_status) {
    if (st.membership == Membership::StablyIn) out.push_back(v);
  }
  return out;
}

std::vector<std::string> StableLimit::stable_edges() const {
  std::vector<std::string> out;
  for (const auto& [e, st] : edge_status) {
    if (st.membership == Membership::StablyIn) out.push_back(e);
  }
  return out;
}

std::vector<std::string> StableLimit::oscillating() const {
  std::vector<std::string> out;
  for (const auto& [v, st] : vertex_status) {
    if (st.membership == Membership::Oscillating) out.push_back(v);
  }
  for (const auto& [e, st] : edge_status) {
    if (st.membership == Membership::Oscillating) out.push_back(e);
  }
  for (const auto& [e, st] : dir_status) {
    if (st.membership == Membership::Oscillating) out.push_back(e + " (direction)");
  }
  return out;
}

MultiGraph StableLimit::limit_graph() const {
  MultiGraph g;
  for (const auto& v : stable_vertices()) g.add_vertex(v);
  for (const auto& id : stable_edges()) {
    const Edge& e = window.graph.edge(id);
    g.add_edge_copy(e.u, e.v, e.copy);
  }
  return g;
}

Orientation StableLimit::limit_orientation() const {
  Orientation o;
  for (const auto& [e, d] : stable_dir) o.dir[e] = d;
  return o;
}

DegreeReport check_path_limit_degrees(const StableLimit& lim, const std::string& u,
                                      const std::string& v) {
  DegreeReport report;
  report.pass = true;
  MultiGraph limit = lim.limit_graph();
  bool oriented = true;
  for (const auto& id : lim.stable_edges()) {
    if (!lim.stable_dir.count(id)) oriented = false;
  }
  for (const auto& w : limit.vertices()) {
    DegreeEntry entry;
    entry.vertex = w;
    entry.degree = limit.degree(w);
    if (oriented) {
      for (const auto& id : limit.incident(w)) {
        const Edge& e = limit.edge(id);
        Dir d = lim.stable_dir.at(id);
        const std::string& tail = d == Dir::uv ? e.u : e.v;
        (tail == w ? entry.out_degree : entry.in_degree) += 1;
      }
    }
    bool osc_adjacent = false;
    for (const auto& id : lim.window.graph.incident(w)) {
      auto it = lim.edge_status.find(id);
      if (it != lim.edge_status.end() && it->second.membership == Membership::Oscillating) {
        osc_adjacent = true;
      }
    }
    if (osc_adjacent) {
      entry.role = "oscillation-adjacent";
    } else if (lim.window.is_boundary(w)) {
      entry.role = "window-boundary";
    } else if (w == u) {
      entry.role = "start";
      entry.checked = true;
      entry.ok = entry.degree == 1 && (!oriented || (entry.out_degree == 1 && entry.in_degree == 0));
    } else if (w == v) {
      entry.role = "end";
      entry.checked = true;
      entry.ok = entry.degree == 1 && (!oriented || (entry.in_degree == 1 && entry.out_degree == 0));
    } else {
      entry.role = "interior";
      entry.checked = true;
      entry.ok = entry.degree == 2 && (!oriented || (entry.in_degree == 1 && entry.out_degree == 1));
    }
    if (entry.checked && !entry.ok) {
      report.pass = false;
      report.violations.push_back(w + " (" + entry.role + "): degree " +
                                  std::to_string(entry.degree) + ", in " +
                                  std::to_string(entry.in_degree) + ", out " +
                                  std::to_string(entry.out_degree));
    }
    report.entries.push_back(std::move(entry));
  }
  // Degree bound applies to every stable vertex, boundary or not.
  for (const auto& entry : report.entries) {
    if (!entry.checked && entry.role == "window-boundary" && entry.degree > 2) {
      report.pass = false;
      report.violations.push_back(entry.vertex + ": degree " + std::to_string(entry.degree) +
                                  " exceeds the path-limit bound of 2");
    }
  }
  return report;
}

namespace {

/// Positions of window elements along one path: vertex i at 2i, edge i at
/// 2i+1; absent elements get -1.
std::map<std::string, long> position_map(const PathInGraph& p) {
  std::map<std::string, long> pos;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) pos[p.vertices[i]] = 2 * static_cast<long>(i);
  for (std::size_t i = 0; i < p.edges.size(); ++i) pos[p.edges[i]] = 2 * static_cast<long>(i) + 1;
  return pos;
}

}  // namespace

LimitOrder build_limit_order(const StableLimit& lim, const std::vector<PathInGraph>& paths,
                             const LazyGraph& family, int margin) {
  if (static_cast<int>(paths.size()) != lim.seq_len) {
    throw InputError("path sequence length differs from the limit's sequence");
  }
  LimitOrder ord;
  std::vector<std::string> elems = lim.stable_vertices();
  for (const auto& e : lim.stable_edges()) elems.push_back(e);

  // Rank per tail index; elements with a constant rank are ordered.
  std::vector<std::map<std::string, long>> tail_pos;
  for (int n = lim.tail_start; n < lim.seq_len; ++n) {
    tail_pos.push_back(position_map(paths[static_cast<std::size_t>(n)]));
  }
  for (const auto& el : elems) {
    for (const auto& pm : tail_pos) {
      if (!pm.count(el)) {
        throw InputError("stable element " + el + " missing from a tail path");
      }
    }
  }
  auto ranks_at = [&](const std::map<std::string, long>& pm) {
    std::vector<std::string> sorted = elems;
    std::sort(sorted.begin(), sorted.end(),
              [&](const std::string& a, const std::string& b) { return pm.at(a) < pm.at(b); });
    std::map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = i;
    return rank;
  };
  auto base_rank = ranks_at(tail_pos.front());
  std::set<std::string> unstable;
  for (std::size_t t = 1; t < tail_pos.size(); ++t) {
    auto r = ranks_at(tail_pos[t]);
    for (const auto& el : elems) {
      if (r.at(el) != base_rank.at(el)) unstable.insert(el);
    }
  }
  ord.unstable_positions.assign(unstable.begin(), unstable.end());
  ord.total = unstable.empty();
  std::vector<std::string> ordered;
  for (const auto& el : elems) {
    if (!unstable.count(el)) ordered.push_back(el);
  }
  std::sort(ordered.begin(), ordered.end(), [&](const std::string& a, const std::string& b) {
    return base_rank.at(a) < base_rank.at(b);
  });
  ord.elements = ordered;

  // Incidence coherence: a stable edge must sit between its endpoints.
  std::map<std::string, std::size_t> final_index;
  for (std::size_t i = 0; i < ord.elements.size(); ++i) final_index[ord.elements[i]] = i;
  for (const auto& id : lim.stable_edges()) {
    if (!final_index.count(id)) continue;
    const Edge& e = lim.window.graph.edge(id);
    if (!final_index.count(e.u) || !final_index.count(e.v)) continue;
    std::size_t pe = final_index[id];
    auto lohi = std::minmax(final_index[e.u], final_index[e.v]);
    if (!(lohi.first + 1 == pe && pe + 1 == lohi.second)) {
      throw Error("limit order violates edge/endpoint adjacency at " + id);
    }
  }

  // Gaps: adjacent ordered elements that are not path-adjacent on the tail.
  // Saturated windows (finite families) have no condensation and no ends.
  std::optional<EndCondensation> cond;
  if (lim.window.depth >= 1 && !lim.window.boundary.empty()) {
    cond = condense(family, lim.window.depth, lim.window.depth + margin);
  }
  ord.end_node_count = cond ? static_cast<int>(cond->nodes.size()) : 0;
  auto node_of = [&](const std::string& vertex) {
    if (!cond) return -1;
    for (std::size_t n = 0; n < cond->nodes.size(); ++n) {
      if (std::binary_search(cond->nodes[n].component.begin(), cond->nodes[n].component.end(),
                             vertex)) {
        return static_cast<int>(n);
      }
    }
    return -1;
  };
  for (std::size_t i = 0; i + 1 < ord.elements.size(); ++i) {
    long d_last = tail_pos.back().at(ord.elements[i + 1]) - tail_pos.back().at(ord.elements[i]);
    if (d_last <= 1) continue;
    LimitGap gap;
    gap.after = i;
    // Flanks: walk the final tail path between the two elements.
    const PathInGraph& p = paths.back();
    const auto& pm = tail_pos.back();
    long lo = pm.at(ord.elements[i]), hi = pm.at(ord.elements[i + 1]);
    int exit_node = -2, entry_node = -2;
    for (long q = lo + 2; q < hi; q += 2) {
      const std::string& w = p.vertices[static_cast<std::size_t>(q / 2)];
      if (!lim.window.graph.has_vertex(w)) {
        int node = node_of(w);
        if (exit_node == -2) {
          exit_node = node;
          gap.exit_vertex = w;
        }
        entry_node = node;
        gap.entry_vertex = w;
      }
    }
    gap.assignable = exit_node >= 0 && exit_node == entry_node;
    gap.end_class = gap.assignable ? exit_node : -1;
    ord.gaps.push_back(std::move(gap));
  }
  return ord;
}

TopologicalPathSeq extract_topological_path(const LimitOrder& ord, const StableLimit& lim) {
  if (!ord.total) throw InputError("limit order has unstable positions; cannot extract");
  for (std::size_t gi = 0; gi < ord.gaps.size(); ++gi) {
    if (!ord.gaps[gi].assignable) {
      throw InputError("gap " + std::to_string(gi) + " (after '" +
                       ord.elements[ord.gaps[gi].after] +
                       "') has no assignable end class; tails do not converge at this resolution");
    }
  }
  // Blocks of elements between gaps, as alternating vertex/edge paths.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [from, to) element ranges
  std::size_t start = 0;
  TopologicalPathSeq raw;
  for (const auto& gap : ord.gaps) {
    blocks.push_back({start, gap.after + 1});
    raw.markers.push_back(gap.end_class);
    start = gap.after + 1;
  }
  blocks.push_back({start, ord.elements.size()});
  for (const auto& [from, to] : blocks) {
    PathInGraph p;
    for (std::size_t i = from; i < to; ++i) {
      const std::string& el = ord.elements[i];
      if (lim.window.graph.has_vertex(el)) {
        p.vertices.push_back(el);
      } else {
        p.edges.push_back(el);
      }
    }
    if (p.vertices.size() != p.edges.size() + 1) {
      throw Error("block between gaps is not an alternating path");
    }
    validate_path(lim.window.graph, p);
    // Stable directions must point along the order.
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      auto dir = lim.stable_dir.find(p.edges[i]);
      if (dir == lim.stable_dir.end()) continue;
      const Edge& e = lim.window.graph.edge(p.edges[i]);
      const std::string& tail = dir->second == Dir::uv ? e.u : e.v;
      if (tail != p.vertices[i]) {
        throw Error("segment runs against the stable orientation at " + e.id);
      }
    }
    raw.segments.push_back(std::move(p));
  }
  raw.start = raw.segments.front().vertices.front();
  raw.end = raw.segments.back().vertices.back();
  return extract_topological_path(raw);
}

TopologicalPathSeq extract_topological_path(const TopologicalPathSeq& seq) {
  if (seq.segments.size() != seq.markers.size() + 1 || seq.segments.empty()) {
    throw InputError("malformed topological path sequence");
  }
  // Outermost-first: from each marker, jump to the last marker of the same
  // end class; the stretch between them contracts into one marker.
  TopologicalPathSeq out;
  out.start = seq.start;
  out.end = seq.end;
  out.segments.push_back(seq.segments.front());
  std::size_t m = 0;
  while (m < seq.markers.size()) {
    int cls = seq.markers[m];
    std::size_t last = m;
    for (std::size_t j = seq.markers.size(); j-- > m;) {
      if (seq.markers[j] == cls) {
        last = j;
        break;
      }
    }
    out.markers.push_back(cls);
    out.segments.push_back(seq.segments[last + 1]);
    m = last + 1;
  }
  // Injectivity at resolution: no vertex repeats across the kept segments.
  std::set<std::string> seen;
  for (const auto& s : out.segments) {
    for (const auto& v : s.vertices) {
      if (!seen.insert(v).second) {
        throw Error("topological path repeats vertex " + v + " across segments");
      }
    }
  }
  return out;
}

PipelineResult orient_pipeline(const LazyGraph& g, int window_depth, int upto, OrientMode mode,
                               SearchBudget budget) {
  if (window_depth < 1 || upto < window_depth) throw InputError("need 1 <= window_depth <= upto");
  PipelineResult result;
  result.window = g.ball(g.default_roots(), window_depth);
  std::vector<GraphSnapshot> snaps;
  for (int d = window_depth; d <= upto; ++d) {
    result.depths.push_back(d);
    Ball bd = g.ball(g.default_roots(), d);
    if (bd.graph.edge_count() > budget.max_edges) {
      throw BoundError("exhaustion ball at depth " + std::to_string(d) + " has " +
                       std::to_string(bd.graph.edge_count()) + " edges, beyond the search budget");
    }
    OrientResult r = orient_exact(bd.graph, mode, budget);
    if (r.status == OrientResult::Budget) {
      throw BoundError("orientation search budget exhausted at exhaustion depth " +
                       std::to_string(d));
    }
    if (r.status == OrientResult::Unsat) {
      throw InputError("exhaustion ball at depth " + std::to_string(d) +
                       " admits no orientation for mode " + mode.to_string() + ": " +
                       r.certificate.reason);
    }
    snaps.push_back(
        GraphSnapshot::of_orientation(result.window.graph, r.orientation));
    if (d == upto) {
      result.outer_ball = std::move(bd);
      result.outer_orientation = std::move(r.orientation);
    }
  }
  int tail_start = std::max(0, static_cast<int>(snaps.size()) - 4);
  result.limit = stable_limit(result.window, snaps, tail_start);
  result.stabilized = true;
  for (const Edge& e : result.window.graph.edges()) {
    auto it = result.limit.dir_status.find(e.id);
    if (it == result.limit.dir_status.end() ||
        it->second.membership != Membership::StablyIn) {
      result.stabilized = false;
      result.oscillating_edges.push_back(e.id);
    }
  }
  if (result.stabilized) result.window_orientation = result.limit.limit_orientation();
  return result;
}

}  // namespace mgo
