#include "mgo/cli.hpp"

int main(int argc, char** argv) { return mgo::run_cli(argc, argv); }
