#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mgo/decomposition.hpp"
#include "mgo/graph.hpp"

namespace mgo {

/// Deterministic RNG wrapper. Draws avoid std::uniform_int_distribution so
/// that identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive
  bool coin() { return (next() & 1) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
  }

 private:
  std::mt19937_64 eng_;
};

namespace gen {

/// Arbitrary small multigraph (possibly disconnected), <= max_edges edges.
MultiGraph random_multigraph(Rng& rng, int max_edges);

/// Connected graph with every degree even (union of overlapping cycles).
MultiGraph random_connected_even(Rng& rng, int max_vertices);

/// 2k-edge-connected multigraph within the given edge budget (verified).
MultiGraph random_2k_edge_connected(Rng& rng, int k, int max_edges);

/// Chain of 2k-edge-connected blocks glued at shared vertices; parts are the
/// block edge sets.
Decomposition random_block_chain(Rng& rng, int k);

}  // namespace gen

}  // namespace mgo
