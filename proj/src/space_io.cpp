#include "ultra/space_io.hpp"

#include <fstream>
#include <sstream>

namespace ultra {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

}  // namespace

Space parse_space(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("space file must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array()) fail("\"points\" must be an array of strings");
  if (!doc.contains("distances") || !doc["distances"].is_array()) fail("\"distances\" must be an array");

  std::vector<std::string> points;
  for (const auto& p : doc["points"]) {
    if (!p.is_string()) fail("point identifiers must be strings");
    points.push_back(p.get<std::string>());
  }
  std::vector<DistanceEntry> entries;
  for (const auto& e : doc["distances"]) {
    if (!e.is_array() || e.size() != 3) fail("each distance entry must be [point, point, \"p/q\"]");
    if (!e[0].is_string() || !e[1].is_string()) fail("distance endpoints must be point identifiers");
    if (!e[2].is_string()) fail("distance values must be rational strings such as \"1/2\", not JSON numbers");
    entries.push_back({e[0].get<std::string>(), e[1].get<std::string>(), Rational::parse(e[2].get<std::string>())});
  }
  return validate_ultrametric(std::move(points), entries);
}

Space load_space(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

nlohmann::ordered_json space_to_json(const Space& space) {
  nlohmann::ordered_json doc;
  doc["points"] = space.names();
  auto distances = nlohmann::ordered_json::array();
  for (PointIndex x = 0; x < space.size(); ++x)
    for (PointIndex y = x + 1; y < space.size(); ++y)
      distances.push_back({space.name(x), space.name(y), space.dist(x, y).str()});
  doc["distances"] = std::move(distances);
  return doc;
}

std::string serialize_space(const Space& space) { return space_to_json(space).dump() + "\n"; }

}  // namespace ultra
