#include "mgo/rng.hpp"

#include <algorithm>

#include "mgo/connectivity.hpp"

namespace mgo::gen {

namespace {

std::string vname(int i) { return "v" + std::to_string(i); }

/// Adds a cycle through the listed vertices (a 2-cycle is a parallel pair).
void add_cycle(MultiGraph& g, const std::vector<std::string>& cycle) {
  if (cycle.size() == 2) {
    g.add_edges(cycle[0], cycle[1], 2);
    return;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    g.add_edges(cycle[i], cycle[(i + 1) % cycle.size()], 1);
  }
}

std::vector<std::string> shuffled_names(Rng& rng, int count, int pool) {
  std::vector<int> ids(pool);
  for (int i = 0; i < pool; ++i) ids[i] = i;
  for (int i = pool - 1; i > 0; --i) std::swap(ids[i], ids[rng.below(i + 1)]);
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(vname(ids[i]));
  return out;
}

}  // namespace

MultiGraph random_multigraph(Rng& rng, int max_edges) {
  MultiGraph g;
  int nv = rng.range(2, 6);
  for (int i = 0; i < nv; ++i) g.add_vertex(vname(i));
  int ne = rng.range(1, max_edges);
  for (int i = 0; i < ne; ++i) {
    int a = rng.below(nv);
    int b = rng.below(nv - 1);
    if (b >= a) ++b;
    g.add_edges(vname(a), vname(b), 1);
  }
  return g;
}

MultiGraph random_connected_even(Rng& rng, int max_vertices) {
  MultiGraph g;
  int nv = rng.range(3, max_vertices);
  std::vector<std::string> pool;
  for (int i = 0; i < nv; ++i) pool.push_back(vname(i));
  int cycles = rng.range(1, 3);
  std::vector<std::string> used;
  for (int c = 0; c < cycles; ++c) {
    int len = rng.range(2, std::min(nv, 6));
    std::vector<std::string> cyc;
    if (c > 0) cyc.push_back(rng.pick(used));  // overlap keeps it connected
    while (static_cast<int>(cyc.size()) < len) {
      const std::string& v = rng.pick(pool);
      if (std::find(cyc.begin(), cyc.end(), v) == cyc.end()) cyc.push_back(v);
    }
    add_cycle(g, cyc);
    for (const auto& v : cyc) {
      if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    }
  }
  return g;
}

MultiGraph random_2k_edge_connected(Rng& rng, int k, int max_edges) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    MultiGraph g;
    if (k == 1) {
      int nv = rng.range(2, 8);
      if (nv == 2) {
        g.add_edges(vname(0), vname(1), rng.range(2, 4));
      } else {
        add_cycle(g, shuffled_names(rng, nv, nv));
        int extras = rng.below(std::max(1, max_edges - nv));
        for (int i = 0; i < extras && static_cast<int>(g.edge_count()) < max_edges; ++i) {
          int a = rng.below(nv);
          int b = rng.below(nv - 1);
          if (b >= a) ++b;
          g.add_edges(vname(a), vname(b), 1);
        }
      }
    } else {
      int style = rng.below(3);
      if (style == 0) {
        // Doubled 2-edge-connected base.
        int nv = rng.range(3, std::min(8, max_edges / 2 - 1));
        auto cyc = shuffled_names(rng, nv, nv);
        MultiGraph base;
        add_cycle(base, cyc);
        int extras = rng.below(2);
        for (int i = 0; i < extras; ++i) {
          int a = rng.below(nv);
          int b = rng.below(nv - 1);
          if (b >= a) ++b;
          base.add_edges(vname(a), vname(b), 1);
        }
        for (const Edge& e : base.edges()) {
          if (e.copy == 0) g.add_edges(e.u, e.v, 2 * base.multiplicity(e.u, e.v));
        }
      } else if (style == 1) {
        // Circulant C_n(1,2): 4-regular, 4-edge-connected.
        int n = rng.range(5, std::min(9, max_edges / 2));
        for (int i = 0; i < n; ++i) {
          g.add_edges(vname(i), vname((i + 1) % n), 1);
          g.add_edges(vname(i), vname((i + 2) % n), 1);
        }
      } else {
        // Two vertices, many parallels.
        g.add_edges(vname(0), vname(1), rng.range(4, 6));
      }
    }
    if (static_cast<int>(g.edge_count()) <= max_edges && is_k_edge_connected(g, 2 * k)) return g;
  }
  throw Error("internal: random_2k_edge_connected failed to generate");
}

Decomposition random_block_chain(Rng& rng, int k) {
  Decomposition d;
  int blocks = rng.range(2, 4);
  int next_vertex = 0;
  std::vector<std::string> glue_pool;
  for (int b = 0; b < blocks; ++b) {
    std::vector<std::string> verts;
    if (b > 0) verts.push_back(rng.pick(glue_pool));
    int size = rng.range(3, 4);
    while (static_cast<int>(verts.size()) < size) verts.push_back(vname(next_vertex++));
    MultiGraph block;
    if (k == 1) {
      add_cycle(block, verts);
      if (rng.coin() && verts.size() == 4) block.add_edges(verts[0], verts[2], 1);
    } else {
      for (std::size_t i = 0; i < verts.size(); ++i) {
        block.add_edges(verts[i], verts[(i + 1) % verts.size()], 2);
      }
    }
    // Blocks share at most one vertex, so block-local copy indices cannot
    // collide in the parent.
    std::set<std::string> ids;
    for (const Edge& e : block.edges()) {
      d.parent.add_edge_copy(e.u, e.v, e.copy);
      ids.insert(e.id);
    }
    d.parts.push_back(std::move(ids));
    for (const auto& v : verts) glue_pool.push_back(v);
  }
  return d;
}

}  // namespace mgo::gen
