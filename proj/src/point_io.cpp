#include "klf/point_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "klf/errors.hpp"

namespace klf {

namespace {

int parse_index(std::string_view s, const std::string& key) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("point file: bad x key \"" + key + "\"");
  return v;
}

}  // namespace

HalfPlanePoint parse_point_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("point file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("point file: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("point file: \"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 2) throw ParseError("point file: \"n\" must be at least 2");
  if (!doc.contains("y") || !doc["y"].is_array()) throw ParseError("point file: \"y\" must be an array");
  std::vector<double> y;
  for (const auto& v : doc["y"]) {
    if (!v.is_number()) throw ParseError("point file: \"y\" entries must be numbers");
    y.push_back(v.get<double>());
  }
  if (y.size() != static_cast<std::size_t>(n - 1))
    throw ParseError("point file: \"y\" must have n-1 = " + std::to_string(n - 1) + " entries");

  UnipotentPart x(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) x[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n - 1 - i), 0.0);
  if (doc.contains("x")) {
    const auto& xs = doc["x"];
    if (!xs.is_object()) throw ParseError("point file: \"x\" must be an object keyed by \"i,j\"");
    for (const auto& [key, value] : xs.items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw ParseError("point file: bad x key \"" + key + "\"");
      const int i = parse_index(std::string_view(key).substr(0, comma), key);
      const int j = parse_index(std::string_view(key).substr(comma + 1), key);
      if (i < 1 || j > n || i >= j) throw ParseError("point file: x key \"" + key + "\" out of range");
      if (!value.is_number()) throw ParseError("point file: x entries must be numbers");
      x[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - i - 1)] = value.get<double>();
    }
  }
  return make_point(n, x, std::move(y));
}

HalfPlanePoint load_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("point file: cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_point_json(text.str());
}

}  // namespace klf
