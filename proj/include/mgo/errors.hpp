#pragma once

#include <stdexcept>
#include <string>

namespace mgo {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (multigraph source, JSON payloads).
struct ParseError : Error {
  int line = 0;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A configured resource or search bound would be exceeded. Always an
/// explicit refusal, never a silent truncation.
struct BoundError : Error {
  using Error::Error;
};

/// Precondition violation on an operation's inputs.
struct InputError : Error {
  using Error::Error;
};

}  // namespace mgo
