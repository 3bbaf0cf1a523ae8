#pragma once

namespace mgo {

/// Entry point of the `mgo` command line tool. Exit codes: 0 verdict-pass,
/// 1 verdict-fail, 2 usage or resource errors.
int run_cli(int argc, char** argv);

}  // namespace mgo
