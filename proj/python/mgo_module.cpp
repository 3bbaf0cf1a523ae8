#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "mgo/connectivity.hpp"
#include "mgo/decomposition.hpp"
#include "mgo/edge_ends.hpp"
#include "mgo/expansion.hpp"
#include "mgo/flimit.hpp"
#include "mgo/json_io.hpp"
#include "mgo/oracle.hpp"
#include "mgo/orientation.hpp"
#include "mgo/selftest.hpp"
#include "mgo/topo.hpp"
#include "mgo/version.hpp"

namespace py = pybind11;
using namespace mgo;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

Orientation orientation_from_dict(const MultiGraph& g, const py::dict& d) {
  Orientation o;
  for (auto item : d) {
    std::string id = py::cast<std::string>(item.first);
    std::string dir = py::cast<std::string>(item.second);
    if (!g.has_edge(id)) throw InputError("unknown edge id " + id);
    if (dir != "uv" && dir != "vu") throw InputError("direction must be 'uv' or 'vu'");
    o.dir[id] = dir == "uv" ? Dir::uv : Dir::vu;
  }
  o.require_total(g);
  return o;
}

py::dict orientation_to_dict(const Orientation& o) {
  py::dict d;
  for (const auto& [id, dir] : o.dir) d[py::str(id)] = dir == Dir::uv ? "uv" : "vu";
  return d;
}

std::set<std::string> to_set(const std::vector<std::string>& v) {
  return std::set<std::string>(v.begin(), v.end());
}

}  // namespace

PYBIND11_MODULE(mgo, m) {
  m.doc() = "multigraph orientation toolkit";
  m.attr("__version__") = kVersion;

  py::register_exception<ParseError>(m, "GraphParseError");
  py::register_exception<BoundError>(m, "ResourceBoundError");
  py::register_exception<InputError>(m, "GraphInputError");

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init<>())
      .def_static("parse", &MultiGraph::parse, py::arg("text"))
      .def("add_vertex", &MultiGraph::add_vertex, py::arg("id"),
           py::arg("declared_infinite") = false)
      .def("add_edges", &MultiGraph::add_edges, py::arg("a"), py::arg("b"),
           py::arg("multiplicity") = 1)
      .def_property_readonly("vertices",
                             [](const MultiGraph& g) { return g.vertices(); })
      .def_property_readonly("edges",
                             [](const MultiGraph& g) {
                               std::vector<std::string> ids;
                               for (const Edge& e : g.edges()) ids.push_back(e.id);
                               return ids;
                             })
      .def("degree", &MultiGraph::degree)
      .def("multiplicity", &MultiGraph::multiplicity)
      .def("to_text", &MultiGraph::to_text)
      .def("content_hash", &MultiGraph::content_hash)
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
      .def("__len__", [](const MultiGraph& g) { return g.vertex_count(); })
      .def("__repr__", [](const MultiGraph& g) {
        return "<MultiGraph " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<Ball>(m, "Ball")
      .def_readonly("graph", &Ball::graph)
      .def_readonly("depth", &Ball::depth)
      .def_readonly("roots", &Ball::roots)
      .def_property_readonly("boundary",
                             [](const Ball& b) {
                               return std::vector<std::string>(b.boundary.begin(),
                                                               b.boundary.end());
                             })
      .def("interior", &Ball::interior);

  py::class_<LazyGraph>(m, "Family")
      .def_property_readonly("name", &LazyGraph::name)
      .def("has_vertex", &LazyGraph::has_vertex)
      .def("default_roots", &LazyGraph::default_roots)
      .def(
          "ball",
          [](const LazyGraph& g, int depth, std::optional<std::vector<std::string>> roots,
             std::int64_t cap) {
            return g.ball(roots ? *roots : g.default_roots(), depth, cap);
          },
          py::arg("depth"), py::arg("roots") = std::nullopt,
          py::arg("edge_cap") = LazyGraph::kDefaultEdgeCap);

  m.def("family", &make_family, py::arg("spec"));
  m.def(
      "fixed_family",
      [](const MultiGraph& g, const std::string& name) { return make_fixed_family(g, name); },
      py::arg("graph"), py::arg("name") = "fixed");
  m.def(
      "preset_orientation",
      [](const std::string& preset, const Ball& ball) {
        return orientation_to_dict(preset_orientation(preset, ball));
      },
      py::arg("preset"), py::arg("ball"));

  m.def("lam", [](const MultiGraph& g, const std::string& x,
                  const std::string& y) { return lambda(g, x, y); },
        py::arg("graph"), py::arg("source"), py::arg("target"),
        "local edge-connectivity (max edge-disjoint paths)");
  m.def(
      "arc_lam",
      [](const MultiGraph& g, const py::dict& o, const std::string& x, const std::string& y) {
        return arc_lambda(g, orientation_from_dict(g, o), x, y);
      },
      py::arg("graph"), py::arg("orientation"), py::arg("source"), py::arg("target"));
  m.def(
      "min_cut",
      [](const MultiGraph& g, const std::string& x, const std::string& y) {
        CutSet c = mgo::min_cut(g, x, y);
        py::dict d;
        d["edges"] = std::vector<std::string>(c.edges.begin(), c.edges.end());
        d["side_a"] = c.side_a;
        d["side_b"] = c.side_b;
        d["bond"] = c.bond;
        return d;
      },
      py::arg("graph"), py::arg("source"), py::arg("target"));
  m.def("is_k_edge_connected", &is_k_edge_connected, py::arg("graph"), py::arg("k"));
  m.def(
      "bonds",
      [](const MultiGraph& g, int max_size) {
        std::vector<std::vector<std::string>> out;
        for (const CutSet& b : enumerate_bonds(g, max_size)) {
          out.push_back(std::vector<std::string>(b.edges.begin(), b.edges.end()));
        }
        return out;
      },
      py::arg("graph"), py::arg("max_size") = kDefaultBondCap);

  m.def(
      "check_well_balanced",
      [](const MultiGraph& g, const py::dict& o) {
        BalanceReport r = mgo::check_well_balanced(g, orientation_from_dict(g, o));
        py::list pairs;
        for (const auto& pb : r.pairs) {
          py::dict d;
          d["x"] = pb.x;
          d["y"] = pb.y;
          d["lam"] = pb.lambda;
          d["arc_lam"] = pb.arc_lambda;
          d["target"] = pb.target;
          d["ok"] = pb.ok;
          pairs.append(d);
        }
        py::dict d;
        d["verdict"] = r.verdict;
        d["pairs"] = pairs;
        return d;
      },
      py::arg("graph"), py::arg("orientation"));
  m.def(
      "check_k_arc_connected",
      [](const MultiGraph& g, const py::dict& o, int k) {
        return mgo::check_k_arc_connected(g, orientation_from_dict(g, o), k).verdict;
      },
      py::arg("graph"), py::arg("orientation"), py::arg("k"));
  m.def(
      "orient_exact",
      [](const MultiGraph& g, const std::string& mode, std::size_t max_edges) {
        SearchBudget budget;
        budget.max_edges = max_edges;
        OrientResult r = mgo::orient_exact(g, OrientMode::parse(mode), budget);
        py::dict d;
        d["status"] = r.status == OrientResult::Found
                          ? "found"
                          : r.status == OrientResult::Unsat ? "unsat" : "budget";
        if (r.status == OrientResult::Found) d["orientation"] = orientation_to_dict(r.orientation);
        if (r.status == OrientResult::Unsat) {
          py::dict cert;
          cert["pair"] = py::make_tuple(r.certificate.x, r.certificate.y);
          cert["cut"] =
              std::vector<std::string>(r.certificate.cut.begin(), r.certificate.cut.end());
          cert["reason"] = r.certificate.reason;
          d["certificate"] = cert;
        }
        return d;
      },
      py::arg("graph"), py::arg("mode") = "wb",
      py::arg("max_edges") = SearchBudget{}.max_edges);
  m.def(
      "orient_eulerian",
      [](const MultiGraph& g) { return orientation_to_dict(mgo::orient_eulerian(g)); },
      py::arg("graph"));

  py::class_<ExpandedGraph>(m, "ExpandedGraph")
      .def_readonly("carrier", &ExpandedGraph::carrier)
      .def_readonly("origin", &ExpandedGraph::origin)
      .def("ray_vertices",
           [](const ExpandedGraph& e, const std::string& t) { return e.ray_vertices.at(t); })
      .def("project_vertex", &ExpandedGraph::project_vertex)
      .def("carrier_edge",
           [](const ExpandedGraph& e, const std::string& origin_edge) {
             return e.carrier_of_origin.at(origin_edge);
           })
      .def(
          "induce_orientation",
          [](const ExpandedGraph& e, const py::dict& o) {
            return orientation_to_dict(
                induce_orientation(e, orientation_from_dict(e.carrier, o)));
          },
          py::arg("carrier_orientation"))
      .def(
          "witness_pair",
          [](const ExpandedGraph& e, const std::string& u, const std::string& v) {
            return connectivity_witness_pair(e, u, v);
          },
          py::arg("u"), py::arg("v"))
      .def(
          "lift_path",
          [](const ExpandedGraph& e, const std::vector<std::string>& vertices,
             const std::vector<std::string>& edges, const std::vector<std::string>& forbidden) {
            PathInGraph lifted = lift_path(e, PathInGraph{vertices, edges}, to_set(forbidden));
            return py::make_tuple(lifted.vertices, lifted.edges);
          },
          py::arg("vertices"), py::arg("edges"),
          py::arg("forbidden") = std::vector<std::string>{})
      .def(
          "project_path",
          [](const ExpandedGraph& e, const std::vector<std::string>& vertices,
             const std::vector<std::string>& edges) {
            ProjectedPath p = project_path(e, PathInGraph{vertices, edges});
            py::dict d;
            d["trail_vertices"] = p.trail.vertices;
            d["trail_edges"] = p.trail.edges;
            d["path_vertices"] = p.simple_path.vertices;
            d["path_edges"] = p.simple_path.edges;
            return d;
          },
          py::arg("vertices"), py::arg("edges"));

  m.def(
      "expand",
      [](const MultiGraph& g, const std::vector<std::string>& targets, const std::string& mode,
         int l) {
        if (mode == "expanding") return expand(g, to_set(targets), ExpandMode::Expanding);
        if (mode == "kray") return expand(g, to_set(targets), ExpandMode::KRay, l);
        throw InputError("mode must be 'kray' or 'expanding'");
      },
      py::arg("graph"), py::arg("targets"), py::arg("mode") = "kray", py::arg("l") = 2);

  m.def(
      "verify_decomposition",
      [](const MultiGraph& parent, const std::vector<std::vector<std::string>>& parts) {
        Decomposition d;
        d.parent = parent;
        for (const auto& p : parts) d.parts.push_back(to_set(p));
        DecompReport r = mgo::verify_decomposition(d);
        py::dict out;
        out["partition_ok"] = r.partition_ok;
        out["missing"] = r.missing;
        out["duplicated"] = r.duplicated;
        out["foreign"] = r.foreign;
        out["part_connected"] = r.part_connected;
        return out;
      },
      py::arg("parent"), py::arg("parts"));
  m.def(
      "verify_bond_faithful",
      [](const MultiGraph& parent, const std::vector<std::vector<std::string>>& parts, int cap,
         bool strict) {
        Decomposition d;
        d.parent = parent;
        for (const auto& p : parts) d.parts.push_back(to_set(p));
        BondFaithReport r = mgo::verify_bond_faithful(d, cap, strict);
        py::list violations;
        for (const auto& v : r.violations) {
          py::dict item;
          item["kind"] = v.kind == BondViolation::PartBondNotParentBond
                             ? "part-bond-not-parent-bond"
                             : v.kind == BondViolation::ParentBondSplit ? "parent-bond-split"
                                                                        : "parent-cut-split";
          item["part"] = v.part;
          item["witness"] = std::vector<std::string>(v.witness.begin(), v.witness.end());
          violations.append(item);
        }
        py::dict out;
        out["pass"] = r.pass;
        out["violations"] = violations;
        return out;
      },
      py::arg("parent"), py::arg("parts"), py::arg("cap") = 3, py::arg("strict") = false);
  m.def(
      "breakpoints",
      [](const MultiGraph& parent, const std::vector<std::vector<std::string>>& parts,
         const std::string& x, const std::string& y) {
        Decomposition d;
        d.parent = parent;
        for (const auto& p : parts) d.parts.push_back(to_set(p));
        BreakpointsResult r = mgo::breakpoints(d, x, y);
        py::dict out;
        out["breakpoints"] = r.breakpoints;
        out["lambda_ok"] = r.lambda_ok;
        py::list segs;
        for (const auto& s : r.segments) {
          py::dict seg;
          seg["from"] = s.from;
          seg["to"] = s.to;
          seg["part"] = s.part;
          seg["lambda_part"] = s.lambda_part;
          segs.append(seg);
        }
        out["segments"] = segs;
        return out;
      },
      py::arg("parent"), py::arg("parts"), py::arg("source"), py::arg("target"));

  m.def(
      "end_classes",
      [](const LazyGraph& g, int depth, const std::vector<std::string>& cut, int margin) {
        EndApprox ea = mgo::end_classes(g, depth, to_set(cut), margin);
        py::list classes;
        for (const auto& c : ea.classes) {
          py::dict item;
          item["vertices"] = c.vertices;
          item["escaping"] = c.escaping;
          classes.append(item);
        }
        py::dict out;
        out["classes"] = classes;
        out["escaping"] = ea.escaping_count();
        return out;
      },
      py::arg("family"), py::arg("depth"), py::arg("cut") = std::vector<std::string>{},
      py::arg("margin") = 2);
  m.def(
      "check_embedding",
      [](const LazyGraph& h, const LazyGraph& g, int depth, int cap) {
        EmbedReport r = mgo::check_embedding(h, g, depth, cap);
        py::dict out;
        out["bond_faithful_ok"] = r.bond_faithful_ok;
        out["classes_injective"] = r.classes_injective;
        out["merges"] = static_cast<int>(r.merges.size());
        out["pass"] = r.pass;
        return out;
      },
      py::arg("subgraph"), py::arg("graph"), py::arg("depth") = 4, py::arg("cap") = 2);

  m.def(
      "topo_reach",
      [](const LazyGraph& g, const py::dict& o, const std::string& x, const std::string& y,
         int inner, int outer, const std::vector<std::string>& forbidden) {
        Ball outer_ball = g.ball(g.default_roots(), outer);
        TopoReachResult r = mgo::topo_reach(g, orientation_from_dict(outer_ball.graph, o), x, y,
                                            inner, outer, to_set(forbidden));
        py::dict out;
        out["reachable"] = r.reachable;
        out["stable"] = r.stable;
        py::list segs;
        for (const auto& s : r.witness.segments) segs.append(s.vertices);
        out["witness_segments"] = segs;
        out["ends"] = r.witness.nodes;
        return out;
      },
      py::arg("family"), py::arg("orientation"), py::arg("source"), py::arg("target"),
      py::arg("inner"), py::arg("outer"), py::arg("forbidden") = std::vector<std::string>{});
  m.def(
      "topo_lam",
      [](const LazyGraph& g, const std::string& x, const std::string& y, int inner, int outer,
         int cap) {
        TopoCutResult r = mgo::topo_lambda(g, x, y, inner, outer, cap);
        py::dict out;
        out["value"] = r.value;
        out["cap_exceeded"] = r.cap_exceeded;
        out["stable"] = r.stable;
        out["cut"] = std::vector<std::string>(r.cut.begin(), r.cut.end());
        return out;
      },
      py::arg("family"), py::arg("source"), py::arg("target"), py::arg("inner"),
      py::arg("outer"), py::arg("cap") = 4);
  m.def(
      "topo_arc_lam",
      [](const LazyGraph& g, const py::dict& o, const std::string& x, const std::string& y,
         int inner, int outer, int cap) {
        Ball outer_ball = g.ball(g.default_roots(), outer);
        TopoCutResult r = mgo::topo_arc_lambda(g, orientation_from_dict(outer_ball.graph, o), x,
                                               y, inner, outer, cap);
        py::dict out;
        out["value"] = r.value;
        out["cap_exceeded"] = r.cap_exceeded;
        out["stable"] = r.stable;
        return out;
      },
      py::arg("family"), py::arg("orientation"), py::arg("source"), py::arg("target"),
      py::arg("inner"), py::arg("outer"), py::arg("cap") = 4);

  m.def(
      "orient_pipeline",
      [](const LazyGraph& g, int window, int upto, const std::string& mode,
         std::size_t max_edges) {
        SearchBudget budget;
        budget.max_edges = max_edges;
        PipelineResult r = mgo::orient_pipeline(g, window, upto, OrientMode::parse(mode), budget);
        py::dict out;
        out["stabilized"] = r.stabilized;
        out["oscillating"] = r.oscillating_edges;
        if (r.stabilized) out["orientation"] = orientation_to_dict(r.window_orientation);
        return out;
      },
      py::arg("family"), py::arg("window"), py::arg("upto"), py::arg("mode") = "wb",
      py::arg("max_edges") = 96);

  m.def(
      "selftest",
      [](std::uint64_t seed) { return to_py(selftest_to_json(run_paper_suite(seed, nullptr))); },
      py::arg("seed") = kDefaultSeed, "run the acceptance suite (slow)");

  m.def(
      "oracle_lambda",
      [](const MultiGraph& g, const std::string& x, const std::string& y) {
        return oracle::lambda_bruteforce(g, x, y);
      },
      py::arg("graph"), py::arg("source"), py::arg("target"),
      "brute-force reference for lam() on small graphs");
}
