#include "mgo/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <deque>
#include <sstream>
#include <tuple>

namespace mgo {

namespace {

bool valid_vertex_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (c == '-' || c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string Edge::make_id(const std::string& a, const std::string& b, int copy) {
  const std::string& u = a < b ? a : b;
  const std::string& v = a < b ? b : a;
  return u + "-" + v + "-" + std::to_string(copy);
}

void MultiGraph::ensure_finalized() const {
  if (!dirty_) return;
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  vertex_index_.clear();
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_[vertices_[i]] = static_cast<int>(i);
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.u, x.v, x.copy) < std::tie(y.u, y.v, y.copy);
  });
  edge_index_.clear();
  incident_.clear();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    edge_index_[e.id] = static_cast<int>(i);
    incident_[e.u].push_back(e.id);
    incident_[e.v].push_back(e.id);
  }
  dirty_ = false;
}

void MultiGraph::add_vertex(const std::string& id, bool declared_infinite) {
  if (!valid_vertex_id(id)) {
    throw InputError("invalid vertex id '" + id + "' ('-', '#' and whitespace are reserved)");
  }
  vertices_.push_back(id);
  dirty_ = true;
  if (declared_infinite) infinite_.insert(id);
}

void MultiGraph::add_edge_id(const std::string& a, const std::string& b, int copy) {
  const std::string& u = a < b ? a : b;
  const std::string& v = a < b ? b : a;
  edges_.push_back(Edge{u, v, copy, Edge::make_id(u, v, copy)});
  auto key = std::make_pair(u, v);
  auto it = next_copy_.find(key);
  if (it == next_copy_.end() || it->second <= copy) next_copy_[key] = copy + 1;
  dirty_ = true;
}

void MultiGraph::add_edge_copy(const std::string& a, const std::string& b, int copy) {
  if (a == b) throw InputError("loop edge rejected at vertex '" + a + "'");
  if (copy < 0) throw InputError("copy index must be >= 0");
  add_vertex(a);
  add_vertex(b);
  add_edge_id(a, b, copy);
}

void MultiGraph::add_edges(const std::string& a, const std::string& b, int multiplicity) {
  if (a == b) throw InputError("loop edge rejected at vertex '" + a + "'");
  if (multiplicity < 1) throw InputError("multiplicity must be >= 1");
  add_vertex(a);
  add_vertex(b);
  const std::string& u = a < b ? a : b;
  const std::string& v = a < b ? b : a;
  int base = 0;
  if (auto it = next_copy_.find({u, v}); it != next_copy_.end()) base = it->second;
  for (int j = 0; j < multiplicity; ++j) add_edge_id(u, v, base + j);
}

bool MultiGraph::has_vertex(const std::string& id) const {
  ensure_finalized();
  return vertex_index_.count(id) > 0;
}

bool MultiGraph::has_edge(const std::string& id) const {
  ensure_finalized();
  return edge_index_.count(id) > 0;
}

const Edge& MultiGraph::edge(const std::string& id) const {
  ensure_finalized();
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw InputError("unknown edge id " + id);
  return edges_[it->second];
}

const std::vector<std::string>& MultiGraph::vertices() const {
  ensure_finalized();
  return vertices_;
}

const std::vector<Edge>& MultiGraph::edges() const {
  ensure_finalized();
  return edges_;
}

const std::vector<std::string>& MultiGraph::incident(const std::string& v) const {
  static const std::vector<std::string> kEmpty;
  ensure_finalized();
  if (!vertex_index_.count(v)) throw InputError("unknown vertex '" + v + "'");
  auto it = incident_.find(v);
  return it == incident_.end() ? kEmpty : it->second;
}

int MultiGraph::degree(const std::string& v) const {
  return static_cast<int>(incident(v).size());
}

int MultiGraph::multiplicity(const std::string& a, const std::string& b) const {
  ensure_finalized();
  if (!vertex_index_.count(a) || !vertex_index_.count(b)) return 0;
  const std::string& u = a < b ? a : b;
  const std::string& v = a < b ? b : a;
  int count = 0;
  for (const auto& id : incident(u)) {
    const Edge& e = edge(id);
    if (e.u == u && e.v == v) ++count;
  }
  return count;
}

const std::string& MultiGraph::other_end(const Edge& e, const std::string& v) const {
  if (e.u == v) return e.v;
  if (e.v == v) return e.u;
  throw InputError("vertex '" + v + "' is not an endpoint of " + e.id);
}

MultiGraph MultiGraph::parse(std::string_view text) {
  MultiGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    try {
      if (kind == "v") {
        std::string id, flag;
        if (!(ls >> id)) throw ParseError(lineno, "expected vertex id");
        bool inf = false;
        if (ls >> flag) {
          if (flag != "inf") throw ParseError(lineno, "unknown vertex flag '" + flag + "'");
          inf = true;
        }
        g.add_vertex(id, inf);
      } else if (kind == "e") {
        std::string a, b;
        int mult = 0;
        if (!(ls >> a >> b >> mult)) throw ParseError(lineno, "expected 'e <u> <v> <mult>'");
        g.add_edges(a, b, mult);
      } else {
        throw ParseError(lineno, "unknown directive '" + kind + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(lineno, err.what());
    }
  }
  g.ensure_finalized();
  return g;
}

MultiGraph MultiGraph::restrict_to(const std::set<std::string>& edge_ids) const {
  MultiGraph sub;
  for (const auto& id : edge_ids) {
    const Edge& e = edge(id);
    sub.add_vertex(e.u, declared_infinite(e.u));
    sub.add_vertex(e.v, declared_infinite(e.v));
    sub.add_edge_id(e.u, e.v, e.copy);
  }
  return sub;
}

MultiGraph MultiGraph::induced(const std::set<std::string>& keep_vertices,
                               const std::set<std::string>& removed_edges) const {
  MultiGraph sub;
  for (const auto& v : keep_vertices) {
    if (!has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
    sub.add_vertex(v, declared_infinite(v));
  }
  for (const auto& e : edges()) {
    if (keep_vertices.count(e.u) && keep_vertices.count(e.v) && !removed_edges.count(e.id)) {
      sub.add_edge_id(e.u, e.v, e.copy);
    }
  }
  return sub;
}

std::string MultiGraph::to_text() const {
  ensure_finalized();
  std::ostringstream out;
  for (const auto& v : vertices_) {
    out << "v " << v;
    if (infinite_.count(v)) out << " inf";
    out << "\n";
  }
  std::size_t i = 0;
  while (i < edges_.size()) {
    std::size_t j = i;
    while (j < edges_.size() && edges_[j].u == edges_[i].u && edges_[j].v == edges_[i].v) ++j;
    out << "e " << edges_[i].u << " " << edges_[i].v << " " << (j - i) << "\n";
    i = j;
  }
  return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string MultiGraph::content_hash() const {
  std::uint64_t h = fnv1a64(to_text());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool MultiGraph::operator==(const MultiGraph& o) const {
  return to_text() == o.to_text();
}

std::vector<std::vector<std::string>> components(const MultiGraph& g,
                                                 const std::set<std::string>& removed_edges,
                                                 const std::set<std::string>& removed_vertices) {
  std::set<std::string> seen(removed_vertices.begin(), removed_vertices.end());
  std::vector<std::vector<std::string>> comps;
  for (const auto& start : g.vertices()) {
    if (seen.count(start)) continue;
    std::vector<std::string> comp;
    std::deque<std::string> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      std::string v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const auto& id : g.incident(v)) {
        if (removed_edges.count(id)) continue;
        const std::string& w = g.other_end(g.edge(id), v);
        if (!seen.count(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool is_connected(const MultiGraph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

void validate_path(const MultiGraph& g, const PathInGraph& p, bool require_simple) {
  if (p.vertices.empty()) throw InputError("empty path");
  if (p.vertices.size() != p.edges.size() + 1) throw InputError("path shape mismatch");
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& e = g.edge(p.edges[i]);
    const std::string& a = p.vertices[i];
    const std::string& b = p.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      throw InputError("edge " + e.id + " does not join " + a + " and " + b);
    }
  }
  if (require_simple) {
    std::set<std::string> seen(p.vertices.begin(), p.vertices.end());
    if (seen.size() != p.vertices.size()) throw InputError("path repeats a vertex");
  }
}

PathInGraph shortest_path(const MultiGraph& g, const std::string& x, const std::string& y) {
  if (!g.has_vertex(x) || !g.has_vertex(y)) throw InputError("unknown endpoint");
  std::map<std::string, std::pair<std::string, std::string>> parent;  // v -> (prev vertex, edge)
  std::deque<std::string> queue{x};
  std::set<std::string> seen{x};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    if (v == y) break;
    for (const auto& id : g.incident(v)) {
      const std::string& w = g.other_end(g.edge(id), v);
      if (!seen.count(w)) {
        seen.insert(w);
        parent[w] = {v, id};
        queue.push_back(w);
      }
    }
  }
  if (x != y && !parent.count(y)) throw InputError("no path from " + x + " to " + y);
  PathInGraph p;
  p.vertices.push_back(y);
  std::string cur = y;
  while (cur != x) {
    auto [prev, eid] = parent.at(cur);
    p.edges.push_back(eid);
    p.vertices.push_back(prev);
    cur = prev;
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

}  // namespace mgo
