#include "mgo/lazy.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

namespace mgo {

std::vector<std::string> Ball::interior() const {
  std::vector<std::string> out;
  for (const auto& v : graph.vertices()) {
    if (!boundary.count(v)) out.push_back(v);
  }
  return out;
}

Ball LazyGraph::finish_ball(std::set<std::string> verts, const std::vector<std::string>& roots,
                            int depth, std::int64_t edge_cap) const {
  Ball b;
  b.roots = roots;
  b.depth = depth;
  b.family = name();
  std::int64_t edge_count = 0;
  for (const auto& v : verts) {
    b.graph.add_vertex(v, !finite_degree(v));
    bool boundary = !finite_degree(v);
    for (const Edge& e : incident(v)) {
      const std::string& w = (e.u == v) ? e.v : e.u;
      if (!verts.count(w)) {
        boundary = true;
      } else if (v == e.u) {
        if (++edge_count > edge_cap) {
          throw BoundError("family " + name() + " enumeration exceeds the edge cap of " +
                           std::to_string(edge_cap));
        }
        b.graph.add_edge_copy(e.u, e.v, e.copy);
      }
    }
    if (boundary) b.boundary.insert(v);
  }
  return b;
}

Ball LazyGraph::ball(const std::vector<std::string>& roots, int depth,
                     std::int64_t edge_cap) const {
  if (depth < 0) throw InputError("ball depth must be >= 0");
  if (roots.empty()) throw InputError("ball needs at least one root");
  std::set<std::string> verts;
  std::vector<std::string> frontier;
  for (const auto& r : roots) {
    if (!has_vertex(r)) throw InputError("unknown root '" + r + "' in family " + name());
    if (verts.insert(r).second) frontier.push_back(r);
  }
  std::int64_t degree_sum = 0;
  for (int layer = 0; layer < depth && !frontier.empty(); ++layer) {
    std::set<std::string> next;
    for (const auto& v : frontier) {
      auto inc = incident(v);
      degree_sum += static_cast<std::int64_t>(inc.size());
      if (degree_sum / 2 > edge_cap) {
        throw BoundError("family " + name() + " enumeration exceeds the edge cap of " +
                         std::to_string(edge_cap));
      }
      for (const Edge& e : inc) {
        const std::string& w = (e.u == v) ? e.v : e.u;
        if (!verts.count(w)) next.insert(w);
      }
    }
    frontier.assign(next.begin(), next.end());
    verts.insert(next.begin(), next.end());
  }
  return finish_ball(std::move(verts), roots, depth, edge_cap);
}

namespace {

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad " + what + " '" + s + "'");
  }
}

/// "<col>:<level>" vertex names for ladder families.
bool parse_ladder_vertex(const std::string& id, char& col, int& level) {
  auto sep = id.find(':');
  if (sep != 1 || id.size() < 3) return false;
  col = id[0];
  if (col < 'a' || col > 'z') return false;
  for (std::size_t i = 2; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  if (id[2] == '0' && id.size() > 3) return false;  // no leading zeros
  level = to_int(id.substr(2), "ladder level");
  return true;
}

std::string ladder_vertex(char col, int level) {
  return std::string(1, col) + ":" + std::to_string(level);
}

class KColumnLadder : public LazyGraph {
 public:
  KColumnLadder(int columns, int mult, std::string spec)
      : columns_(columns), mult_(mult), spec_(std::move(spec)) {
    if (columns_ < 1 || columns_ > 26) throw InputError("ladder columns must be in 1..26");
  }

  std::string name() const override { return spec_; }

  bool has_vertex(const std::string& id) const override {
    char col;
    int level;
    return parse_ladder_vertex(id, col, level) && col < 'a' + columns_ && level >= 0;
  }

  std::vector<Edge> incident(const std::string& v) const override {
    char col;
    int level;
    if (!has_vertex(v) || !parse_ladder_vertex(v, col, level)) {
      throw InputError("unknown vertex '" + v + "' in family " + name());
    }
    std::vector<Edge> out;
    auto add = [&](const std::string& a, const std::string& b) {
      for (int j = 0; j < mult_; ++j) {
        const std::string& u = a < b ? a : b;
        const std::string& w = a < b ? b : a;
        out.push_back(Edge{u, w, j, Edge::make_id(u, w, j)});
      }
    };
    if (level > 0) add(v, ladder_vertex(col, level - 1));
    add(v, ladder_vertex(col, level + 1));
    if (col > 'a') add(v, ladder_vertex(col - 1, level));
    if (col + 1 < 'a' + columns_) add(v, ladder_vertex(col + 1, level));
    std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.u, x.v, x.copy) < std::tie(y.u, y.v, y.copy);
    });
    return out;
  }

  std::vector<std::string> default_roots() const override {
    std::vector<std::string> roots;
    for (int c = 0; c < columns_; ++c) roots.push_back(ladder_vertex('a' + c, 0));
    return roots;
  }

 private:
  int columns_;
  int mult_;
  std::string spec_;
};

/// One column of a ladder; edge ids match the parent ladder's rails.
class LadderColumn : public LazyGraph {
 public:
  explicit LadderColumn(char col) : col_(col) {}

  std::string name() const override { return std::string("ladder_column:") + col_; }

  bool has_vertex(const std::string& id) const override {
    char col;
    int level;
    return parse_ladder_vertex(id, col, level) && col == col_ && level >= 0;
  }

  std::vector<Edge> incident(const std::string& v) const override {
    char col;
    int level;
    if (!has_vertex(v) || !parse_ladder_vertex(v, col, level)) {
      throw InputError("unknown vertex '" + v + "' in family " + name());
    }
    std::vector<Edge> out;
    auto add = [&](const std::string& a, const std::string& b) {
      const std::string& u = a < b ? a : b;
      const std::string& w = a < b ? b : a;
      out.push_back(Edge{u, w, 0, Edge::make_id(u, w, 0)});
    };
    if (level > 0) add(v, ladder_vertex(col, level - 1));
    add(v, ladder_vertex(col, level + 1));
    std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.u, x.v, x.copy) < std::tie(y.u, y.v, y.copy);
    });
    return out;
  }

  std::vector<std::string> default_roots() const override { return {ladder_vertex(col_, 0)}; }

 private:
  char col_;
};

bool parse_grid_vertex(const std::string& id, int& x, int& y) {
  if (id.size() < 5 || id.front() != '(' || id.back() != ')') return false;
  auto comma = id.find(',');
  if (comma == std::string::npos) return false;
  std::string xs = id.substr(1, comma - 1);
  std::string ys = id.substr(comma + 1, id.size() - comma - 2);
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    if (s[0] == '0' && s.size() > 1) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!all_digits(xs) || !all_digits(ys)) return false;
  x = to_int(xs, "grid coordinate");
  y = to_int(ys, "grid coordinate");
  return true;
}

std::string grid_vertex(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

/// Quarter grid on {(x,y) : x,y >= 0}, unit multiplicities.
class QuarterGrid : public LazyGraph {
 public:
  std::string name() const override { return "grid"; }

  bool has_vertex(const std::string& id) const override {
    int x, y;
    return parse_grid_vertex(id, x, y);
  }

  std::vector<Edge> incident(const std::string& v) const override {
    int x, y;
    if (!parse_grid_vertex(v, x, y)) throw InputError("unknown vertex '" + v + "' in grid");
    std::vector<Edge> out;
    auto add = [&](int x2, int y2) {
      std::string a = grid_vertex(x, y), b = grid_vertex(x2, y2);
      const std::string& u = a < b ? a : b;
      const std::string& w = a < b ? b : a;
      out.push_back(Edge{u, w, 0, Edge::make_id(u, w, 0)});
    };
    if (x > 0) add(x - 1, y);
    add(x + 1, y);
    if (y > 0) add(x, y - 1);
    add(x, y + 1);
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v, a.copy) < std::tie(b.u, b.v, b.copy);
    });
    return out;
  }

  std::vector<std::string> default_roots() const override { return {grid_vertex(0, 0)}; }
};

/// The L-shaped double ray inside the quarter grid: column x=0 plus row y=0;
/// vertex and edge ids match the grid's.
class DoubleRayInGrid : public LazyGraph {
 public:
  std::string name() const override { return "double_ray"; }

  bool has_vertex(const std::string& id) const override {
    int x, y;
    return parse_grid_vertex(id, x, y) && (x == 0 || y == 0);
  }

  std::vector<Edge> incident(const std::string& v) const override {
    int x, y;
    if (!has_vertex(v) || !parse_grid_vertex(v, x, y)) {
      throw InputError("unknown vertex '" + v + "' in double_ray");
    }
    std::vector<Edge> out;
    auto add = [&](int x2, int y2) {
      std::string a = grid_vertex(x, y), b = grid_vertex(x2, y2);
      const std::string& u = a < b ? a : b;
      const std::string& w = a < b ? b : a;
      out.push_back(Edge{u, w, 0, Edge::make_id(u, w, 0)});
    };
    if (x == 0) {
      if (y > 0) add(0, y - 1);
      add(0, y + 1);
      if (y == 0) add(1, 0);
    } else {  // y == 0, x > 0
      add(x - 1, 0);
      add(x + 1, 0);
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v, a.copy) < std::tie(b.u, b.v, b.copy);
    });
    return out;
  }

  std::vector<std::string> default_roots() const override { return {grid_vertex(0, 0)}; }
};

bool parse_ray_vertex(const std::string& id, int& n) {
  if (id.size() < 3 || id[0] != 'r' || id[1] != ':') return false;
  std::string s = id.substr(2);
  if (s[0] == '0' && s.size() > 1) return false;
  if (!std::all_of(s.begin(), s.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return false;
  }
  n = to_int(s, "ray index");
  return true;
}

std::string ray_vertex(int n) { return "r:" + std::to_string(n); }

/// Ray whose n-th step (1-based, between r:(n-1) and r:n) carries
/// step_mult(n) parallel copies.
class RayFamily : public LazyGraph {
 public:
  RayFamily(std::string spec, int fixed_mult) : spec_(std::move(spec)), fixed_mult_(fixed_mult) {}

  std::string name() const override { return spec_; }

  bool has_vertex(const std::string& id) const override {
    int n;
    return parse_ray_vertex(id, n) && n >= 0;
  }

  int step_mult(int step) const { return fixed_mult_ > 0 ? fixed_mult_ : step; }

  std::vector<Edge> incident(const std::string& v) const override {
    int n;
    if (!parse_ray_vertex(v, n)) throw InputError("unknown vertex '" + v + "' in " + name());
    std::vector<Edge> out;
    auto add = [&](int a, int b, int step) {
      std::string s = ray_vertex(a), t = ray_vertex(b);
      const std::string& u = s < t ? s : t;
      const std::string& w = s < t ? t : s;
      for (int j = 0; j < step_mult(step); ++j) {
        out.push_back(Edge{u, w, j, Edge::make_id(u, w, j)});
      }
    };
    if (n > 0) add(n - 1, n, n);
    add(n, n + 1, n + 1);
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v, a.copy) < std::tie(b.u, b.v, b.copy);
    });
    return out;
  }

  std::vector<std::string> default_roots() const override { return {ray_vertex(0)}; }

 private:
  std::string spec_;
  int fixed_mult_;  // <= 0 means expanding (step n has n copies)
};

bool parse_tree_vertex(const std::string& id, const std::string& prefix, int fanout_first,
                       int& level) {
  // "t" root or "t:<digits>", each digit < fanout (first digit < fanout_first).
  if (id == prefix) {
    level = 0;
    return true;
  }
  if (id.size() < prefix.size() + 2 || id.compare(0, prefix.size(), prefix) != 0 ||
      id[prefix.size()] != ':') {
    return false;
  }
  std::string addr = id.substr(prefix.size() + 1);
  for (std::size_t i = 0; i < addr.size(); ++i) {
    char c = addr[i];
    int limit = (i == 0) ? fanout_first : 2;
    if (c < '0' || c >= '0' + limit) return false;
  }
  level = static_cast<int>(addr.size());
  return true;
}

/// Infinite rooted tree: the root has `fanout_first` children, every other
/// vertex two children.
class TreeFamily : public LazyGraph {
 public:
  TreeFamily(std::string spec, int fanout_first) : spec_(std::move(spec)), first_(fanout_first) {}

  std::string name() const override { return spec_; }

  bool has_vertex(const std::string& id) const override {
    int level;
    return parse_tree_vertex(id, "t", first_, level);
  }

  std::vector<Edge> incident(const std::string& v) const override {
    int level;
    if (!parse_tree_vertex(v, "t", first_, level)) {
      throw InputError("unknown vertex '" + v + "' in " + name());
    }
    std::vector<Edge> out;
    auto add = [&](const std::string& a, const std::string& b) {
      const std::string& u = a < b ? a : b;
      const std::string& w = a < b ? b : a;
      out.push_back(Edge{u, w, 0, Edge::make_id(u, w, 0)});
    };
    if (level == 1) add(v, "t");
    if (level > 1) add(v, v.substr(0, v.size() - 1));
    int children = (level == 0) ? first_ : 2;
    for (int c = 0; c < children; ++c) {
      add(v, (level == 0 ? v + ":" : v) + std::string(1, '0' + c));
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v, a.copy) < std::tie(b.u, b.v, b.copy);
    });
    return out;
  }

  std::vector<std::string> default_roots() const override { return {"t"}; }

 private:
  std::string spec_;
  int first_;
};

/// Cubic tree T plus an edge between the distinguished root r and every other
/// vertex of T. r has infinite degree; the family is internally truncated at
/// `levels` tree levels and exposes the tree-level exhaustion as its ball.
class CubicTreePlusRoot : public LazyGraph {
 public:
  explicit CubicTreePlusRoot(int levels) : levels_(levels) {
    if (levels_ < 2) throw InputError("cubic_tree_plus_root needs levels >= 2");
  }

  std::string name() const override {
    return "cubic_tree_plus_root:" + std::to_string(levels_);
  }

  bool tree_vertex_level(const std::string& id, int& level) const {
    return parse_tree_vertex(id, "t", 3, level) && level >= 1 && level <= levels_;
  }

  bool has_vertex(const std::string& id) const override {
    int level;
    return id == "r" || tree_vertex_level(id, level);
  }

  bool finite_degree(const std::string& id) const override { return id != "r"; }

  std::vector<Edge> incident(const std::string& v) const override {
    std::vector<Edge> out;
    auto add = [&](const std::string& a, const std::string& b, int copy) {
      const std::string& u = a < b ? a : b;
      const std::string& w = a < b ? b : a;
      out.push_back(Edge{u, w, copy, Edge::make_id(u, w, copy)});
    };
    if (v == "r") {
      // Tree edges to the three level-1 children plus a chord to every
      // vertex of the truncation. Chords to direct children are parallel
      // copies of the tree edge.
      for (const auto& w : enumerate_tree(levels_)) {
        int level;
        tree_vertex_level(w, level);
        if (level == 1) {
          add("r", w, 0);  // tree edge
          add("r", w, 1);  // chord
        } else {
          add("r", w, 0);  // chord
        }
      }
    } else {
      int level;
      if (!tree_vertex_level(v, level)) {
        throw InputError("unknown vertex '" + v + "' in " + name());
      }
      if (level == 1) {
        add(v, "r", 0);
        add(v, "r", 1);
      } else {
        add(v, v.substr(0, v.size() - 1), 0);  // tree parent
        add(v, "r", 0);                        // chord
      }
      if (level < levels_) {
        std::string base = (level == 0) ? v + ":" : v;
        add(v, base + "0", 0);
        add(v, base + "1", 0);
      }
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v, a.copy) < std::tie(b.u, b.v, b.copy);
    });
    return out;
  }

  std::vector<std::string> default_roots() const override { return {"r"}; }

  /// Tree-level exhaustion: ball(depth) = r plus levels 1..depth plus all
  /// edges among them. BFS through r's chords would make every positive
  /// depth infinite.
  Ball ball(const std::vector<std::string>& roots, int depth,
            std::int64_t edge_cap) const override {
    if (roots != default_roots()) {
      throw InputError("cubic_tree_plus_root exhaustion is rooted at r");
    }
    if (depth >= levels_) {
      throw BoundError("cubic_tree_plus_root:" + std::to_string(levels_) +
                       " refuses depth " + std::to_string(depth) +
                       "; construct the family with more levels");
    }
    std::set<std::string> verts{"r"};
    for (const auto& v : enumerate_tree(depth)) verts.insert(v);
    return finish_ball(std::move(verts), roots, depth, edge_cap);
  }

 private:
  std::vector<std::string> enumerate_tree(int upto_level) const {
    std::vector<std::string> out;
    std::vector<std::string> layer;
    for (int c = 0; c < 3; ++c) layer.push_back("t:" + std::string(1, '0' + c));
    for (int level = 1; level <= upto_level; ++level) {
      out.insert(out.end(), layer.begin(), layer.end());
      std::vector<std::string> next;
      for (const auto& v : layer) {
        next.push_back(v + "0");
        next.push_back(v + "1");
      }
      layer = std::move(next);
    }
    return out;
  }

  int levels_;
};

/// Finite multigraph exposed as a saturating lazy family.
class FixedFamily : public LazyGraph {
 public:
  FixedFamily(MultiGraph g, std::string name) : g_(std::move(g)), name_(std::move(name)) {
    if (g_.vertex_count() == 0) throw InputError("fixed family needs at least one vertex");
  }

  std::string name() const override { return name_; }
  bool has_vertex(const std::string& id) const override { return g_.has_vertex(id); }

  std::vector<Edge> incident(const std::string& v) const override {
    std::vector<Edge> out;
    for (const auto& id : g_.incident(v)) out.push_back(g_.edge(id));
    return out;
  }

  std::vector<std::string> default_roots() const override { return {g_.vertices().front()}; }

 private:
  MultiGraph g_;
  std::string name_;
};

}  // namespace

std::unique_ptr<LazyGraph> make_fixed_family(MultiGraph g, std::string name) {
  return std::make_unique<FixedFamily>(std::move(g), std::move(name));
}

PathInGraph ladder_path_preset(const std::string& preset, const MultiGraph& carrier, int n) {
  if (n < 0) throw InputError("path preset needs n >= 0");
  PathInGraph p;
  auto push = [&](char col, int level) {
    std::string v = ladder_vertex(col, level);
    if (!p.vertices.empty()) {
      const std::string& prev = p.vertices.back();
      p.edges.push_back(Edge::make_id(std::min(prev, v), std::max(prev, v), 0));
    }
    p.vertices.push_back(v);
  };
  auto climb = [&](char col, int from, int to) {
    int step = from <= to ? 1 : -1;
    for (int k = from + step; k != to + step; k += step) push(col, k);
  };
  if (preset == "four_column") {
    push('a', 0);
    climb('a', 0, n);
    push('b', n);
    climb('b', n, 0);
    push('c', 0);
    climb('c', 0, n);
    push('d', n);
    climb('d', n, 0);
  } else if (preset == "out_and_back") {
    push('a', 0);
    climb('a', 0, n);
    push('b', n);
    climb('b', n, 0);
  } else {
    throw InputError("unknown path preset '" + preset + "'");
  }
  validate_path(carrier, p);
  return p;
}

std::unique_ptr<LazyGraph> make_family(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw InputError("empty family spec");
  const std::string& fam = parts[0];
  auto arg = [&](std::size_t i, const char* what) -> const std::string& {
    if (parts.size() <= i) throw InputError(std::string("family ") + fam + " needs " + what);
    return parts[i];
  };
  if (fam == "one_way_ladder") return std::make_unique<KColumnLadder>(2, 1, "one_way_ladder");
  if (fam == "doubled_ladder") return std::make_unique<KColumnLadder>(2, 2, "doubled_ladder");
  if (fam == "k_column_ladder") {
    int c = to_int(arg(1, "a column count"), "column count");
    return std::make_unique<KColumnLadder>(c, 1, spec);
  }
  if (fam == "ladder_column") {
    const std::string& col = arg(1, "a column letter");
    if (col.size() != 1 || col[0] < 'a' || col[0] > 'z') throw InputError("bad column " + col);
    return std::make_unique<LadderColumn>(col[0]);
  }
  if (fam == "grid") return std::make_unique<QuarterGrid>();
  if (fam == "double_ray") return std::make_unique<DoubleRayInGrid>();
  if (fam == "k_ray") {
    int k = to_int(arg(1, "a multiplicity"), "k");
    if (k < 1) throw InputError("k_ray needs k >= 1");
    return std::make_unique<RayFamily>(spec, k);
  }
  if (fam == "expanding_ray") return std::make_unique<RayFamily>("expanding_ray", 0);
  if (fam == "binary_tree") return std::make_unique<TreeFamily>("binary_tree", 2);
  if (fam == "cycle") {
    int nv = to_int(arg(1, "a length"), "cycle length");
    if (nv < 3) throw InputError("cycle needs length >= 3");
    MultiGraph g;
    for (int i = 0; i < nv; ++i) {
      g.add_edges("c:" + std::to_string(i), "c:" + std::to_string((i + 1) % nv), 1);
    }
    return make_fixed_family(std::move(g), spec);
  }
  if (fam == "cubic_tree_plus_root") {
    int levels = parts.size() > 1 ? to_int(parts[1], "levels") : 12;
    return std::make_unique<CubicTreePlusRoot>(levels);
  }
  throw InputError("unknown family '" + fam + "'");
}

Orientation preset_orientation(const std::string& preset, const Ball& ball) {
  Orientation o;
  if (preset == "ladder_example") {
    for (const Edge& e : ball.graph.edges()) {
      char cu, cv;
      int lu, lv;
      if (!parse_ladder_vertex(e.u, cu, lu) || !parse_ladder_vertex(e.v, cv, lv)) {
        throw InputError("ladder_example preset needs ladder vertex names, got " + e.id);
      }
      if (cu == cv && cu == 'a') {
        o.set(e, lu < lv ? e.u : e.v);  // a-rails point outward
      } else if (cu == cv) {
        o.set(e, lu < lv ? e.v : e.u);  // b-rails point inward
      } else {
        o.set(e, cu == 'b' ? e.u : e.v);  // rungs point from b to a
      }
    }
    return o;
  }
  if (preset == "outward") {
    // Layers by BFS distance from the ball roots within the ball.
    std::map<std::string, int> layer;
    std::deque<std::string> queue;
    for (const auto& r : ball.roots) {
      layer[r] = 0;
      queue.push_back(r);
    }
    while (!queue.empty()) {
      std::string v = queue.front();
      queue.pop_front();
      for (const auto& id : ball.graph.incident(v)) {
        const std::string& w = ball.graph.other_end(ball.graph.edge(id), v);
        if (!layer.count(w)) {
          layer[w] = layer[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (const Edge& e : ball.graph.edges()) {
      int du = layer.count(e.u) ? layer[e.u] : 0;
      int dv = layer.count(e.v) ? layer[e.v] : 0;
      o.dir[e.id] = (du < dv || (du == dv && e.u < e.v)) ? Dir::uv : Dir::vu;
    }
    return o;
  }
  throw InputError("unknown orientation preset '" + preset + "'");
}

}  // namespace mgo
