#include "mgo/oracle.hpp"

#include <algorithm>
#include <deque>

namespace mgo::oracle {

namespace {

bool separated(const MultiGraph& g, const std::string& x, const std::string& y,
               std::uint32_t removed_mask, const std::vector<std::string>& ids) {
  std::set<std::string> removed;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (removed_mask & (1u << i)) removed.insert(ids[i]);
  }
  std::deque<std::string> queue{x};
  std::set<std::string> seen{x};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    if (v == y) return false;
    for (const auto& id : g.incident(v)) {
      if (removed.count(id)) continue;
      const std::string& w = g.other_end(g.edge(id), v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return true;
}

}  // namespace

int lambda_bruteforce(const MultiGraph& g, const std::string& x, const std::string& y) {
  if (x == y) throw InputError("source and target must differ");
  if (g.edge_count() > 16) throw BoundError("lambda_bruteforce limited to 16 edges");
  std::vector<std::string> ids;
  for (const Edge& e : g.edges()) ids.push_back(e.id);
  int best = static_cast<int>(ids.size());
  if (separated(g, x, y, 0, ids)) return 0;
  for (std::uint32_t mask = 1; mask < (1u << ids.size()); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    if (separated(g, x, y, mask, ids)) best = size;
  }
  return best;
}

namespace {

void enumerate_paths(const MultiGraph& g, const Orientation& o, const std::string& v,
                     const std::string& goal, std::vector<std::string>& on_path,
                     std::uint32_t arcs, const std::vector<std::string>& ids,
                     std::vector<std::uint32_t>& out) {
  if (v == goal) {
    out.push_back(arcs);
    return;
  }
  for (const auto& id : g.incident(v)) {
    const Edge& e = g.edge(id);
    if (o.tail_of(e) != v) continue;
    const std::string& w = e.u == v ? e.v : e.u;
    if (std::find(on_path.begin(), on_path.end(), w) != on_path.end()) continue;
    std::size_t bit = std::find(ids.begin(), ids.end(), id) - ids.begin();
    on_path.push_back(w);
    enumerate_paths(g, o, w, goal, on_path, arcs | (1u << bit), ids, out);
    on_path.pop_back();
  }
}

int best_packing(const std::vector<std::uint32_t>& paths, std::size_t from, std::uint32_t used) {
  int best = 0;
  for (std::size_t i = from; i < paths.size(); ++i) {
    if ((paths[i] & used) == 0) {
      best = std::max(best, 1 + best_packing(paths, i + 1, used | paths[i]));
    }
  }
  return best;
}

}  // namespace

int arc_packing_bruteforce(const MultiGraph& g, const Orientation& o, const std::string& x,
                           const std::string& y) {
  if (x == y) throw InputError("source and target must differ");
  if (g.edge_count() > 16) throw BoundError("arc_packing_bruteforce limited to 16 edges");
  o.require_total(g);
  std::vector<std::string> ids;
  for (const Edge& e : g.edges()) ids.push_back(e.id);
  std::vector<std::uint32_t> paths;
  std::vector<std::string> on_path{x};
  enumerate_paths(g, o, x, y, on_path, 0, ids, paths);
  return best_packing(paths, 0, 0);
}

}  // namespace mgo::oracle
