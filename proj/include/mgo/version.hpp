#pragma once

namespace mgo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mgo
