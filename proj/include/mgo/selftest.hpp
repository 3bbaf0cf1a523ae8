#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace mgo {

constexpr std::uint64_t kDefaultSeed = 20250811;

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

/// Runs the acceptance suite (suite name "paper"); prints one pass/fail line per criterion
/// to `progress` when given.
SelftestReport run_paper_suite(std::uint64_t seed = kDefaultSeed, std::ostream* progress = nullptr);

nlohmann::json selftest_to_json(const SelftestReport& report);

}  // namespace mgo
