#pragma once

#include <cstdint>
#include <vector>

namespace mgo::flow {

/// Small Dinic max-flow network over integer node ids. Exact on integral
/// capacities; that is the contract the connectivity oracle relies on.
class Net {
 public:
  explicit Net(int nodes) : head_(nodes, -1) {}

  static constexpr std::int64_t kInf = (1ll << 60);

  /// Adds a directed arc; returns its index (for flow/cut inspection).
  int add_arc(int from, int to, std::int64_t cap);

  std::int64_t max_flow(int s, int t);

  /// After max_flow: nodes reachable from s in the residual network.
  std::vector<bool> source_side(int s) const;

  std::int64_t flow_on(int arc) const { return arcs_[arc].flow; }
  int node_count() const { return static_cast<int>(head_.size()); }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
    std::int64_t flow;
  };

  bool bfs(int s, int t);
  std::int64_t dfs(int v, int t, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace mgo::flow
