#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "mgo/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "mgo");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream captured;
  std::streambuf* old_out = std::cout.rdbuf(captured.rdbuf());
  std::ostringstream err_sink;
  std::streambuf* old_err = std::cerr.rdbuf(err_sink.rdbuf());
  int code = mgo::run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, captured.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("lambda subcommand prints the value") {
  std::string k4 = write_temp("k4.mg",
                              "e a b 1\ne a c 1\ne a d 1\ne b c 1\ne b d 1\ne c d 1\n");
  CliRun r = run({"lambda", "--graph", k4, "--source", "a", "--target", "d"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  std::remove(k4.c_str());
}

TEST_CASE("unsat orientation exits 1 with a certificate") {
  std::string bridge = write_temp("bridge.mg", "e a b 1\n");
  CliRun r = run({"orient", "--graph", bridge, "--mode", "karc:1", "--json"});
  CHECK(r.code == 1);
  CHECK(r.out.find("\"unsat\": true") != std::string::npos);
  CHECK(r.out.find("a-b-0") != std::string::npos);
  std::remove(bridge.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"lambda", "--graph", "no_such_file.mg", "--source", "a", "--target", "b"}).code == 2);
  CHECK(run({"orient", "--graph", "x.mg", "--mode", "bogus"}).code == 2);
}

TEST_CASE("json output is byte-identical across runs") {
  std::string fig8 = write_temp("fig8.mg",
                                "e w a 1\ne w b 1\ne a b 1\ne w c 1\ne w d 1\ne c d 1\n");
  std::vector<std::string> cmd{"orient", "--graph", fig8, "--mode", "wb", "--json"};
  CliRun first = run(cmd);
  CliRun second = run(cmd);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CliRun ends1 = run({"ends", "--family", "binary_tree", "--depth", "4", "--json"});
  CliRun ends2 = run({"ends", "--family", "binary_tree", "--depth", "4", "--json"});
  CHECK(ends1.code == 0);
  CHECK(ends1.out == ends2.out);
  std::remove(fig8.c_str());
}

TEST_CASE("check verdicts drive the exit code") {
  std::string tri = write_temp("tri.mg", "e a b 1\ne b c 1\ne a c 1\n");
  CliRun orient = run({"orient", "--graph", tri, "--mode", "karc:1", "--json"});
  REQUIRE(orient.code == 0);
  std::string opath = write_temp("tri.json", orient.out);
  CHECK(run({"check", "--graph", tri, "--orient", opath, "--mode", "karc:1"}).code == 0);
  CHECK(run({"check", "--graph", tri, "--orient", opath, "--mode", "karc:2"}).code == 1);
  std::remove(tri.c_str());
  std::remove(opath.c_str());
}

TEST_CASE("toporeach on the ladder preset") {
  CliRun r = run({"toporeach", "--family", "one_way_ladder", "--preset", "ladder_example",
                  "--source", "a:0", "--target", "b:0", "--inner", "3", "--outer", "8",
                  "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"reachable\": true") != std::string::npos);
  // severing the return column flips the verdict and the exit code
  CliRun blocked = run({"toporeach", "--family", "one_way_ladder", "--preset",
                        "ladder_example", "--source", "a:0", "--target", "b:0", "--inner",
                        "3", "--outer", "8", "--forbid", "b:0-b:1-0"});
  CHECK(blocked.code == 1);
}

TEST_CASE("gen emits parseable text") {
  CliRun r = run({"gen", "--family", "k_ray:2", "--depth", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("e r:0 r:1 2") != std::string::npos);
}

TEST_CASE("decomp verify round-trips through files") {
  std::string fig8 = write_temp("fig8b.mg",
                                "e w a 1\ne w b 1\ne a b 1\ne w c 1\ne w d 1\ne c d 1\n");
  std::string parts = write_temp(
      "parts.json",
      R"({"parts": [["a-w-0","b-w-0","a-b-0"],["c-w-0","d-w-0","c-d-0"]]})");
  CHECK(run({"decomp", "verify", "--graph", fig8, "--parts", parts}).code == 0);
  CHECK(run({"decomp", "bondfaithful", "--graph", fig8, "--parts", parts, "--cap", "3"}).code ==
        0);
  CliRun bp = run({"decomp", "breakpoints", "--graph", fig8, "--parts", parts, "--source",
                   "a", "--target", "c", "--json"});
  CHECK(bp.code == 0);
  CHECK(bp.out.find("\"breakpoints\"") != std::string::npos);
  std::remove(fig8.c_str());
  std::remove(parts.c_str());
}

TEST_CASE("flimit pipeline subcommand stabilizes") {
  CliRun r = run({"flimit", "pipeline", "--family", "one_way_ladder", "--window", "3",
                  "--upto", "9", "--mode", "wb", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"stabilized\": true") != std::string::npos);
}
