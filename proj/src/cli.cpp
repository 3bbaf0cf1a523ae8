#include "mgo/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mgo/connectivity.hpp"
#include "mgo/decomposition.hpp"
#include "mgo/edge_ends.hpp"
#include "mgo/expansion.hpp"
#include "mgo/flimit.hpp"
#include "mgo/json_io.hpp"
#include "mgo/orientation.hpp"
#include "mgo/selftest.hpp"
#include "mgo/topo.hpp"
#include "mgo/version.hpp"

namespace mgo {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

MultiGraph load_graph(const std::string& path) { return MultiGraph::parse(slurp(path)); }

Orientation load_orientation(const MultiGraph& g, const std::string& path) {
  return orientation_from_json(g, json::parse(slurp(path)));
}

std::set<std::string> split_ids(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

std::int64_t env_edge_cap() {
  if (const char* cap = std::getenv("MGO_EDGE_CAP")) {
    try {
      return std::stoll(cap);
    } catch (const std::exception&) {
      throw InputError("bad MGO_EDGE_CAP value");
    }
  }
  return LazyGraph::kDefaultEdgeCap;
}

void emit(const json& payload, bool as_json, const std::string& human) {
  if (as_json) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

json path_json(const PathInGraph& p) {
  return {{"vertices", p.vertices}, {"edges", p.edges}};
}

json balance_json(const BalanceReport& r) {
  json pairs = json::array();
  for (const auto& pb : r.pairs) {
    pairs.push_back({{"x", pb.x},
                     {"y", pb.y},
                     {"lambda", pb.lambda},
                     {"arc_lambda", pb.arc_lambda},
                     {"target", pb.target},
                     {"ok", pb.ok}});
  }
  return {{"verdict", r.verdict}, {"pairs", pairs}};
}

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::StablyIn:
      return "stably-in";
    case Membership::StablyOut:
      return "stably-out";
    default:
      return "oscillating";
  }
}

json limit_json(const StableLimit& lim) {
  json vertices = json::object();
  for (const auto& [v, st] : lim.vertex_status) {
    vertices[v] = {{"status", membership_name(st.membership)},
                   {"stabilized_at", st.stabilized_at}};
  }
  json edges = json::object();
  for (const auto& [e, st] : lim.edge_status) {
    json entry = {{"status", membership_name(st.membership)},
                  {"stabilized_at", st.stabilized_at}};
    auto ds = lim.dir_status.find(e);
    if (ds != lim.dir_status.end()) {
      entry["direction"] = ds->second.membership == Membership::StablyIn
                               ? (lim.stable_dir.at(e) == Dir::uv ? "uv" : "vu")
                               : "oscillating";
    }
    edges[e] = entry;
  }
  return {{"vertices", vertices}, {"edges", edges}, {"tail_start", lim.tail_start},
          {"sequence_length", lim.seq_len}};
}

std::string limit_dot(const StableLimit& lim) {
  std::ostringstream out;
  out << "digraph limit {\n";
  MultiGraph g = lim.limit_graph();
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const Edge& e : g.edges()) {
    auto it = lim.stable_dir.find(e.id);
    if (it != lim.stable_dir.end()) {
      const std::string& tail = it->second == Dir::uv ? e.u : e.v;
      const std::string& head = it->second == Dir::uv ? e.v : e.u;
      out << "  \"" << tail << "\" -> \"" << head << "\";\n";
    } else {
      out << "  \"" << e.u << "\" -> \"" << e.v << "\" [dir=none];\n";
    }
  }
  out << "}\n";
  return out.str();
}

struct FlimitSequence {
  Ball window;
  MultiGraph carrier;
  std::vector<PathInGraph> paths;
  std::vector<GraphSnapshot> snaps;
  int tail = 0;
  std::string source, target;
};

FlimitSequence build_sequence(const LazyGraph& fam, const std::string& preset, int window_depth,
                              int upto, int tail, std::int64_t cap) {
  FlimitSequence seq;
  seq.window = fam.ball(fam.default_roots(), window_depth, cap);
  seq.carrier = fam.ball(fam.default_roots(), upto + 1, cap).graph;
  for (int n = 0; n < upto; ++n) {
    seq.paths.push_back(ladder_path_preset(preset, seq.carrier, n));
    seq.snaps.push_back(GraphSnapshot::of_path(seq.carrier, seq.paths.back()));
  }
  seq.tail = tail >= 0 ? tail : std::max(0, upto - 4);
  seq.source = seq.paths.back().vertices.front();
  seq.target = seq.paths.back().vertices.back();
  return seq;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"multigraph orientation toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // --- gen ---
  auto* gen_cmd = app.add_subcommand("gen", "emit a family window as multigraph text");
  std::string gen_family, gen_roots, gen_out;
  int gen_depth = 4;
  gen_cmd->add_option("--family", gen_family, "family spec, e.g. k_ray:3")->required();
  gen_cmd->add_option("--depth", gen_depth, "window depth");
  gen_cmd->add_option("--roots", gen_roots, "comma-separated roots (default: family roots)");
  gen_cmd->add_option("--out", gen_out, "write to a file instead of stdout");

  // --- lambda ---
  auto* lambda_cmd = app.add_subcommand("lambda", "local edge- or arc-connectivity");
  std::string lam_graph, lam_src, lam_dst, lam_orient;
  bool lam_witness = false;
  lambda_cmd->add_option("--graph", lam_graph)->required();
  lambda_cmd->add_option("--source", lam_src)->required();
  lambda_cmd->add_option("--target", lam_dst)->required();
  lambda_cmd->add_option("--oriented", lam_orient, "orientation JSON: directed connectivity");
  lambda_cmd->add_flag("--witness", lam_witness, "include a minimum cut witness");

  // --- orient ---
  auto* orient_cmd = app.add_subcommand("orient", "produce an orientation");
  std::string or_graph, or_mode = "wb", or_method = "exact", or_out;
  std::size_t or_budget = SearchBudget{}.max_edges;
  orient_cmd->add_option("--graph", or_graph)->required();
  orient_cmd->add_option("--mode", or_mode, "wb or karc:K");
  orient_cmd->add_option("--method", or_method, "exact or euler");
  orient_cmd->add_option("--budget", or_budget, "edge budget for the exact search");
  orient_cmd->add_option("--out", or_out, "write orientation JSON to a file");

  // --- check ---
  auto* check_cmd = app.add_subcommand("check", "check an orientation");
  std::string ch_graph, ch_orient, ch_mode = "wb";
  check_cmd->add_option("--graph", ch_graph)->required();
  check_cmd->add_option("--orient", ch_orient)->required();
  check_cmd->add_option("--mode", ch_mode, "wb or karc:K");

  // --- expand ---
  auto* expand_cmd = app.add_subcommand("expand", "vertex expansion into rays");
  std::string ex_graph, ex_targets, ex_mode = "kray:2", ex_emit, ex_map;
  expand_cmd->add_option("--graph", ex_graph)->required();
  expand_cmd->add_option("--targets", ex_targets, "comma-separated vertices")->required();
  expand_cmd->add_option("--mode", ex_mode, "kray:L or expanding");
  expand_cmd->add_option("--emit", ex_emit, "write the expanded graph text");
  expand_cmd->add_option("--emit-map", ex_map, "write the expansion maps as JSON");

  // --- decomp ---
  auto* decomp_cmd = app.add_subcommand("decomp", "decomposition checks");
  decomp_cmd->require_subcommand(1);
  std::string dc_graph, dc_parts, dc_src, dc_dst;
  int dc_cap = 3;
  bool dc_strict = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--graph", dc_graph)->required();
    sub->add_option("--parts", dc_parts)->required();
  };
  auto* dc_verify = decomp_cmd->add_subcommand("verify", "partition and connectivity");
  add_common(dc_verify);
  auto* dc_bond = decomp_cmd->add_subcommand("bondfaithful", "bond-faithfulness at a cap");
  add_common(dc_bond);
  dc_bond->add_option("--cap", dc_cap, "bond size cap");
  dc_bond->add_flag("--strict", dc_strict, "literal cut reading (any cut, not only bonds)");
  auto* dc_break = decomp_cmd->add_subcommand("breakpoints", "part-contiguous path with λ bounds");
  add_common(dc_break);
  dc_break->add_option("--source", dc_src)->required();
  dc_break->add_option("--target", dc_dst)->required();
  dc_break->add_option("--cap", dc_cap, "λ comparison cap");

  // --- ends ---
  auto* ends_cmd = app.add_subcommand("ends", "edge-end classes at a resolution");
  std::string en_family, en_cut;
  int en_depth = 4, en_margin = 2;
  ends_cmd->add_option("--family", en_family)->required();
  ends_cmd->add_option("--depth", en_depth);
  ends_cmd->add_option("--cut", en_cut, "comma-separated edge ids");
  ends_cmd->add_option("--margin", en_margin, "probe margin beyond the window");

  // --- toporeach ---
  auto* topo_cmd = app.add_subcommand("toporeach", "oriented topological reachability");
  std::string tp_family, tp_orient, tp_preset, tp_src, tp_dst, tp_forbid;
  int tp_inner = 3, tp_outer = 8;
  topo_cmd->add_option("--family", tp_family)->required();
  topo_cmd->add_option("--orient", tp_orient, "orientation JSON of the outer ball");
  topo_cmd->add_option("--preset", tp_preset, "orientation preset (ladder_example, outward)");
  topo_cmd->add_option("--source", tp_src)->required();
  topo_cmd->add_option("--target", tp_dst)->required();
  topo_cmd->add_option("--inner", tp_inner);
  topo_cmd->add_option("--outer", tp_outer);
  topo_cmd->add_option("--forbid", tp_forbid, "comma-separated forbidden edge ids");

  // --- flimit ---
  auto* fl_cmd = app.add_subcommand("flimit", "stable limits of ladder path sequences");
  fl_cmd->require_subcommand(1);
  std::string fl_family = "k_column_ladder:4", fl_preset = "four_column", fl_mode = "wb",
              fl_dot;
  int fl_window = 4, fl_upto = 12, fl_tail = -1;
  auto add_fl = [&](CLI::App* sub, bool with_paths) {
    sub->add_option("--family", fl_family);
    sub->add_option("--window", fl_window);
    sub->add_option("--upto", fl_upto, "sequence length / exhaustion depth");
    if (with_paths) {
      sub->add_option("--path-preset", fl_preset, "four_column or out_and_back");
      sub->add_option("--tail", fl_tail, "tail start (default: length-4)");
    }
  };
  auto* fl_limit = fl_cmd->add_subcommand("limit", "membership/direction statuses");
  add_fl(fl_limit, true);
  fl_limit->add_option("--dot", fl_dot, "write the limit subgraph as DOT");
  std::int64_t fl_pseudo = -1;
  fl_limit->add_option("--pseudo", fl_pseudo,
                       "experimental pseudo-ultrafilter selection seed (not used by acceptance)");
  auto* fl_degrees = fl_cmd->add_subcommand("degrees", "path-limit degree discipline");
  add_fl(fl_degrees, true);
  auto* fl_order = fl_cmd->add_subcommand("order", "position order with gaps");
  add_fl(fl_order, true);
  auto* fl_extract = fl_cmd->add_subcommand("extract", "topological path extraction");
  add_fl(fl_extract, true);
  auto* fl_pipe = fl_cmd->add_subcommand("pipeline", "orient exhaustions and take the limit");
  add_fl(fl_pipe, false);
  fl_pipe->add_option("--mode", fl_mode, "wb or karc:K");

  // --- selftest ---
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  std::string suite = "paper";
  std::uint64_t seed = kDefaultSeed;
  self_cmd->add_option("--suite", suite, "suite name (paper)");
  self_cmd->add_option("--seed", seed, "sampling seed");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int parse_code = app.exit(e);
    return parse_code == 0 ? kExitPass : kExitUsage;
  }

  auto started = std::chrono::steady_clock::now();
  int code = kExitPass;
  try {
    if (*gen_cmd) {
      auto fam = make_family(gen_family);
      std::vector<std::string> roots = fam->default_roots();
      if (!gen_roots.empty()) {
        roots.clear();
        for (const auto& r : split_ids(gen_roots)) roots.push_back(r);
      }
      Ball ball = fam->ball(roots, gen_depth, env_edge_cap());
      std::ostringstream text;
      text << "# family " << fam->name() << " depth " << gen_depth << "\n";
      text << ball.graph.to_text();
      for (const auto& b : ball.boundary) text << "# boundary " << b << "\n";
      if (gen_out.empty()) {
        std::cout << text.str();
      } else {
        spill(gen_out, text.str());
      }
    } else if (*lambda_cmd) {
      MultiGraph g = load_graph(lam_graph);
      if (!lam_orient.empty()) {
        Orientation o = load_orientation(g, lam_orient);
        int value = arc_lambda(g, o, lam_src, lam_dst);
        emit({{"arc_lambda", value}}, as_json, std::to_string(value) + "\n");
      } else {
        int value = lambda(g, lam_src, lam_dst);
        json payload{{"lambda", value}};
        if (lam_witness) {
          CutSet cut = min_cut(g, lam_src, lam_dst);
          payload["cut"] = {{"edges", cut.edges},
                            {"side_a", cut.side_a},
                            {"side_b", cut.side_b},
                            {"bond", cut.bond}};
        }
        std::ostringstream human;
        human << value << "\n";
        if (lam_witness) {
          human << "cut:";
          for (const auto& id : min_cut(g, lam_src, lam_dst).edges) human << " " << id;
          human << "\n";
        }
        emit(payload, as_json, human.str());
      }
    } else if (*orient_cmd) {
      MultiGraph g = load_graph(or_graph);
      OrientMode mode = OrientMode::parse(or_mode);
      Orientation o;
      if (or_method == "euler") {
        o = orient_eulerian(g);
      } else if (or_method == "exact") {
        SearchBudget budget;
        budget.max_edges = or_budget;
        OrientResult r = orient_exact(g, mode, budget);
        if (r.status == OrientResult::Budget) {
          throw BoundError("search budget exhausted after " +
                           std::to_string(r.nodes_explored) + " nodes");
        }
        if (r.status == OrientResult::Unsat) {
          json cert{{"unsat", true},
                    {"pair", {r.certificate.x, r.certificate.y}},
                    {"cut", r.certificate.cut},
                    {"reason", r.certificate.reason}};
          emit(cert, as_json, "UNSAT: " + r.certificate.reason + "\n");
          return kExitFail;
        }
        o = r.orientation;
      } else {
        throw InputError("unknown method '" + or_method + "'");
      }
      json payload = orientation_to_json(g, o);
      if (!or_out.empty()) spill(or_out, payload.dump(2) + "\n");
      std::ostringstream human;
      for (const Edge& e : g.edges()) {
        human << o.tail_of(e) << " -> " << o.head_of(e) << "  (" << e.id << ")\n";
      }
      emit(payload, as_json, human.str());
    } else if (*check_cmd) {
      MultiGraph g = load_graph(ch_graph);
      Orientation o = load_orientation(g, ch_orient);
      OrientMode mode = OrientMode::parse(ch_mode);
      if (mode.kind == OrientMode::WellBalanced) {
        BalanceReport r = check_well_balanced(g, o);
        emit(balance_json(r), as_json,
             std::string(r.verdict ? "well-balanced\n" : "NOT well-balanced\n"));
        code = r.verdict ? kExitPass : kExitFail;
      } else {
        KArcReport r = check_k_arc_connected(g, o, mode.k);
        json failures = json::array();
        for (const auto& f : r.failures) {
          failures.push_back({{"x", f.x}, {"y", f.y}, {"arc_lambda", f.arc_lambda}});
        }
        emit({{"verdict", r.verdict}, {"k", r.k}, {"failures", failures}}, as_json,
             std::string(r.verdict ? "" : "NOT ") + std::to_string(mode.k) +
                 "-arc-connected\n");
        code = r.verdict ? kExitPass : kExitFail;
      }
    } else if (*expand_cmd) {
      MultiGraph g = load_graph(ex_graph);
      std::set<std::string> targets = split_ids(ex_targets);
      ExpandedGraph e;
      if (ex_mode == "expanding") {
        e = expand(g, targets, ExpandMode::Expanding);
      } else if (ex_mode.rfind("kray:", 0) == 0) {
        e = expand(g, targets, ExpandMode::KRay, std::stoi(ex_mode.substr(5)));
      } else {
        throw InputError("bad expand mode '" + ex_mode + "'");
      }
      json map{{"vertex_origin", e.vertex_origin},
               {"carrier_of_origin", e.carrier_of_origin},
               {"attach", e.attach},
               {"ray_vertices", e.ray_vertices}};
      if (!ex_emit.empty()) spill(ex_emit, e.carrier.to_text());
      if (!ex_map.empty()) spill(ex_map, map.dump(2) + "\n");
      emit({{"carrier", e.carrier.to_text()}, {"map", map}}, as_json,
           e.carrier.to_text());
    } else if (*decomp_cmd) {
      Decomposition d;
      d.parent = load_graph(dc_graph);
      d.parts = parts_from_json(json::parse(slurp(dc_parts)));
      if (*dc_verify) {
        DecompReport r = verify_decomposition(d);
        json payload{{"partition_ok", r.partition_ok},
                     {"missing", r.missing},
                     {"duplicated", r.duplicated},
                     {"foreign", r.foreign},
                     {"part_connected", r.part_connected},
                     {"all_connected", r.all_connected}};
        emit(payload, as_json,
             std::string("partition ") + (r.partition_ok ? "ok" : "VIOLATED") +
                 ", parts connected: " + (r.all_connected ? "all" : "not all") + "\n");
        code = r.partition_ok ? kExitPass : kExitFail;
      } else if (*dc_bond) {
        BondFaithReport r = verify_bond_faithful(d, dc_cap, dc_strict);
        json violations = json::array();
        for (const auto& v : r.violations) {
          violations.push_back(
              {{"kind", v.kind == BondViolation::PartBondNotParentBond
                            ? "part-bond-not-parent-bond"
                            : v.kind == BondViolation::ParentBondSplit ? "parent-bond-split"
                                                                       : "parent-cut-split"},
               {"part", v.part},
               {"witness", v.witness}});
        }
        emit({{"pass", r.pass}, {"cap", r.cap}, {"strict", r.strict_cuts},
              {"violations", violations}},
             as_json,
             std::string(r.pass ? "bond-faithful" : "NOT bond-faithful") + " at cap " +
                 std::to_string(dc_cap) + " (" + std::to_string(r.violations.size()) +
                 " violations)\n");
        code = r.pass ? kExitPass : kExitFail;
      } else {
        BreakpointsResult r = breakpoints(d, dc_src, dc_dst, dc_cap);
        json segments = json::array();
        for (const auto& s : r.segments) {
          segments.push_back({{"from", s.from},
                              {"to", s.to},
                              {"part", s.part},
                              {"lambda_part", s.lambda_part},
                              {"lambda_parent", s.lambda_parent},
                              {"ok", s.ok}});
        }
        std::ostringstream human;
        for (std::size_t i = 0; i < r.breakpoints.size(); ++i) {
          human << (i ? " | " : "") << r.breakpoints[i];
        }
        human << (r.lambda_ok ? "  (λ bounds hold)\n" : "  (λ bound VIOLATED)\n");
        emit({{"breakpoints", r.breakpoints}, {"segments", segments},
              {"lambda_ok", r.lambda_ok}, {"path", path_json(r.path)}},
             as_json, human.str());
        code = r.lambda_ok ? kExitPass : kExitFail;
      }
    } else if (*ends_cmd) {
      auto fam = make_family(en_family);
      EndApprox ea = end_classes(*fam, en_depth, split_ids(en_cut), en_margin);
      json classes = json::array();
      for (const auto& c : ea.classes) {
        classes.push_back({{"vertices", c.vertices}, {"escaping", c.escaping}});
      }
      std::ostringstream human;
      human << ea.classes.size() << " classes, " << ea.escaping_count() << " escaping\n";
      emit({{"family", ea.family}, {"depth", ea.depth}, {"margin", ea.margin},
            {"cut", ea.cut}, {"classes", classes}, {"escaping", ea.escaping_count()}},
           as_json, human.str());
    } else if (*topo_cmd) {
      auto fam = make_family(tp_family);
      Ball outer = fam->ball(fam->default_roots(), tp_outer, env_edge_cap());
      Orientation o;
      if (!tp_preset.empty()) {
        o = preset_orientation(tp_preset, outer);
      } else if (!tp_orient.empty()) {
        o = load_orientation(outer.graph, tp_orient);
      } else {
        throw InputError("toporeach needs --orient or --preset");
      }
      TopoReachResult r = topo_reach(*fam, o, tp_src, tp_dst, tp_inner, tp_outer,
                                     split_ids(tp_forbid));
      json segments = json::array();
      for (const auto& s : r.witness.segments) segments.push_back(path_json(s));
      json sweep = json::object();
      for (const auto& [radius, verdict] : r.sweep) sweep[std::to_string(radius)] = verdict;
      std::ostringstream human;
      human << (r.reachable ? "reachable" : "not reachable") << " (stability: "
            << (r.stable ? "stable" : "UNSTABLE") << " over inner radii)\n";
      emit({{"reachable", r.reachable}, {"stable", r.stable}, {"sweep", sweep},
            {"witness", {{"segments", segments}, {"ends", r.witness.nodes}}}},
           as_json, human.str());
      code = r.reachable ? kExitPass : kExitFail;
    } else if (*fl_cmd) {
      std::int64_t cap = env_edge_cap();
      if (*fl_pipe) {
        auto fam = make_family(fl_family);
        SearchBudget budget;
        budget.max_edges = 96;
        PipelineResult r = orient_pipeline(*fam, fl_window, fl_upto, OrientMode::parse(fl_mode),
                                           budget);
        json payload{{"stabilized", r.stabilized},
                     {"oscillating", r.oscillating_edges},
                     {"depths", r.depths},
                     {"window", limit_json(r.limit)}};
        if (r.stabilized) {
          payload["orientation"] = orientation_to_json(r.window.graph, r.window_orientation);
        }
        std::ostringstream human;
        human << (r.stabilized ? "stabilized" : "NOT stabilized") << " on window depth "
              << fl_window << " after depths " << r.depths.front() << ".." << r.depths.back()
              << "\n";
        emit(payload, as_json, human.str());
        code = r.stabilized ? kExitPass : kExitFail;
      } else {
        auto fam = make_family(fl_family);
        FlimitSequence seq = build_sequence(*fam, fl_preset, fl_window, fl_upto, fl_tail, cap);
        StableLimit lim =
            (*fl_limit && fl_pseudo >= 0)
                ? stable_limit_pseudo(seq.window, seq.snaps, seq.tail,
                                      static_cast<std::uint64_t>(fl_pseudo))
                : stable_limit(seq.window, seq.snaps, seq.tail);
        if (*fl_limit) {
          if (!fl_dot.empty()) spill(fl_dot, limit_dot(lim));
          std::ostringstream human;
          human << lim.stable_edges().size() << " stable edges, "
                << lim.oscillating().size() << " oscillating elements\n";
          emit(limit_json(lim), as_json, human.str());
        } else if (*fl_degrees) {
          DegreeReport r = check_path_limit_degrees(lim, seq.source, seq.target);
          json entries = json::array();
          for (const auto& e : r.entries) {
            entries.push_back({{"vertex", e.vertex}, {"degree", e.degree},
                               {"in", e.in_degree}, {"out", e.out_degree},
                               {"role", e.role}, {"checked", e.checked}, {"ok", e.ok}});
          }
          emit({{"pass", r.pass}, {"entries", entries}, {"violations", r.violations}},
               as_json, std::string(r.pass ? "degrees ok\n" : "degree violations\n"));
          code = r.pass ? kExitPass : kExitFail;
        } else if (*fl_order) {
          LimitOrder ord = build_limit_order(lim, seq.paths, *fam);
          json gaps = json::array();
          for (const auto& g : ord.gaps) {
            gaps.push_back({{"after", ord.elements[g.after]},
                            {"end_class", g.end_class},
                            {"assignable", g.assignable}});
          }
          std::ostringstream human;
          human << ord.elements.size() << " ordered elements, " << ord.gaps.size()
                << " gaps\n";
          emit({{"elements", ord.elements}, {"total", ord.total},
                {"unstable", ord.unstable_positions}, {"gaps", gaps},
                {"end_nodes", ord.end_node_count}},
               as_json, human.str());
        } else {  // extract
          LimitOrder ord = build_limit_order(lim, seq.paths, *fam);
          TopologicalPathSeq tps = extract_topological_path(ord, lim);
          json segments = json::array();
          for (const auto& s : tps.segments) segments.push_back(path_json(s));
          std::ostringstream human;
          for (std::size_t i = 0; i < tps.segments.size(); ++i) {
            if (i) human << " [end " << tps.markers[i - 1] << "] ";
            human << tps.segments[i].vertices.front() << ".."
                  << tps.segments[i].vertices.back();
          }
          human << "\n";
          emit({{"segments", segments}, {"markers", tps.markers},
                {"start", tps.start}, {"end", tps.end}},
               as_json, human.str());
        }
      }
    } else if (*self_cmd) {
      if (suite != "paper") throw InputError("unknown suite '" + suite + "'");
      SelftestReport report = run_paper_suite(seed, as_json ? nullptr : &std::cout);
      if (as_json) {
        std::string command = "selftest --suite " + suite + " --seed " + std::to_string(seed);
        json payload = selftest_to_json(report);
        payload["command"] = command;
        payload["version"] = kVersion;
        char hash[17];
        std::snprintf(hash, sizeof hash, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(command + "@" + kVersion)));
        payload["config_hash"] = hash;
        std::cout << payload.dump(2) << "\n";
      }
      code = report.all_pass ? kExitPass : kExitFail;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed " << elapsed.count() << " ms\n";
  return code;
}

}  // namespace mgo
