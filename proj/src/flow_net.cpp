#include "mgo/flow_net.hpp"

#include <algorithm>
#include <deque>

namespace mgo::flow {

int Net::add_arc(int from, int to, std::int64_t cap) {
  int idx = static_cast<int>(arcs_.size());
  arcs_.push_back({to, head_[from], cap, 0});
  head_[from] = idx;
  arcs_.push_back({from, head_[to], 0, 0});  // residual
  head_[to] = idx + 1;
  return idx;
}

bool Net::bfs(int s, int t) {
  level_.assign(head_.size(), -1);
  std::deque<int> queue{s};
  level_[s] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].cap - arcs_[a].flow > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[v] + 1;
        queue.push_back(arcs_[a].to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t Net::dfs(int v, int t, std::int64_t limit) {
  if (v == t || limit == 0) return limit;
  for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    if (arc.cap - arc.flow > 0 && level_[arc.to] == level_[v] + 1) {
      std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap - arc.flow));
      if (pushed > 0) {
        arc.flow += pushed;
        arcs_[a ^ 1].flow -= pushed;
        return pushed;
      }
    }
  }
  level_[v] = -1;
  return 0;
}

std::int64_t Net::max_flow(int s, int t) {
  std::int64_t total = 0;
  while (bfs(s, t)) {
    iter_ = head_;
    while (std::int64_t pushed = dfs(s, t, kInf)) total += pushed;
  }
  return total;
}

std::vector<bool> Net::source_side(int s) const {
  std::vector<bool> seen(head_.size(), false);
  std::deque<int> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      if (arcs_[a].cap - arcs_[a].flow > 0 && !seen[arcs_[a].to]) {
        seen[arcs_[a].to] = true;
        queue.push_back(arcs_[a].to);
      }
    }
  }
  return seen;
}

}  // namespace mgo::flow
