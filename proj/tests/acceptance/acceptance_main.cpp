#include <iostream>

#include "mgo/selftest.hpp"

int main() {
  auto report = mgo::run_paper_suite(mgo::kDefaultSeed, &std::cout);
  return report.all_pass ? 0 : 1;
}
