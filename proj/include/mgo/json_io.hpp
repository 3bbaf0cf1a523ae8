#pragma once

#include <json.hpp>

#include "mgo/decomposition.hpp"
#include "mgo/graph.hpp"
#include "mgo/orientation.hpp"

namespace mgo {

/// {"graph": "<hash>", "edges": [{"id": ..., "dir": "uv"|"vu"}, ...]},
/// edges sorted by id.
nlohmann::json orientation_to_json(const MultiGraph& g, const Orientation& o);

/// Inverse; verifies the graph hash unless it is "*".
Orientation orientation_from_json(const MultiGraph& g, const nlohmann::json& j);

/// {"parts": [["id", ...], ...]}
nlohmann::json parts_to_json(const std::vector<std::set<std::string>>& parts);
std::vector<std::set<std::string>> parts_from_json(const nlohmann::json& j);

}  // namespace mgo
