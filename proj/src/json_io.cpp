#include "mgo/json_io.hpp"

namespace mgo {

using nlohmann::json;

json orientation_to_json(const MultiGraph& g, const Orientation& o) {
  o.require_total(g);
  json edges = json::array();
  for (const auto& [id, d] : o.dir) {
    edges.push_back({{"id", id}, {"dir", d == Dir::uv ? "uv" : "vu"}});
  }
  return json{{"graph", g.content_hash()}, {"edges", edges}};
}

Orientation orientation_from_json(const MultiGraph& g, const json& j) {
  if (!j.is_object() || !j.contains("edges")) throw ParseError("orientation JSON needs 'edges'");
  if (j.contains("graph")) {
    std::string h = j.at("graph").get<std::string>();
    if (h != "*" && h != g.content_hash()) {
      throw InputError("orientation was made for a different graph (hash " + h + ")");
    }
  }
  Orientation o;
  for (const auto& item : j.at("edges")) {
    std::string id = item.at("id").get<std::string>();
    std::string d = item.at("dir").get<std::string>();
    if (!g.has_edge(id)) throw InputError("orientation references unknown edge " + id);
    if (d != "uv" && d != "vu") throw ParseError("bad direction '" + d + "'");
    o.dir[id] = d == "uv" ? Dir::uv : Dir::vu;
  }
  return o;
}

json parts_to_json(const std::vector<std::set<std::string>>& parts) {
  json out = json::array();
  for (const auto& part : parts) out.push_back(part);
  return json{{"parts", out}};
}

std::vector<std::set<std::string>> parts_from_json(const json& j) {
  if (!j.is_object() || !j.contains("parts")) throw ParseError("decomposition JSON needs 'parts'");
  std::vector<std::set<std::string>> parts;
  for (const auto& arr : j.at("parts")) {
    std::set<std::string> part;
    for (const auto& id : arr) part.insert(id.get<std::string>());
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace mgo
