#include "goldie/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "goldie/error.hpp"

namespace goldie {

namespace {

using json = nlohmann::json;

std::string literal(const json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ValidationError("field '" + field + "' must hold integers or \"p/q\" strings, got " + v.dump());
}

std::vector<std::string> literal_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw ValidationError("field '" + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(literal(x, field));
  return out;
}

long integer_field(const json& doc, const char* name) {
  const auto& v = doc.at(name);
  if (!v.is_number_integer()) throw ValidationError(std::string("field '") + name + "' must be an integer");
  return v.get<long>();
}

}  // namespace

RawInstance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance must be a JSON object");
  RawInstance raw;
  if (doc.contains("n")) raw.n = integer_field(doc, "n");
  if (doc.contains("r")) raw.r = integer_field(doc, "r");
  if (!doc.contains("g_basis")) throw ValidationError("missing field 'g_basis'");
  if (!doc["g_basis"].is_array()) throw ValidationError("field 'g_basis' must be a list of rows");
  for (const auto& row : doc["g_basis"]) raw.g_basis.push_back(literal_list(row, "g_basis"));
  if (doc.contains("chi")) raw.chi = literal_list(doc["chi"], "chi");
  if (doc.contains("alpha")) raw.alpha = literal_list(doc["alpha"], "alpha");
  return raw;
}

RawInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

Instance load_instance(const std::string& path) {
  Instance inst = validate_spec(read_instance_file(path));
  if (!inst.alpha) throw ValidationError("instance '" + path + "' has no alpha");
  return inst;
}

std::string instance_to_json(const ArrangementSpec& spec, const Point& alpha) {
  nlohmann::ordered_json doc;
  doc["n"] = spec.n;
  doc["r"] = spec.r;
  doc["g_basis"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < spec.d(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < spec.n; ++c) row.push_back(to_string(spec.g_basis(r, c)));
    doc["g_basis"].push_back(row);
  }
  doc["chi"] = nlohmann::ordered_json::array();
  for (const auto& q : spec.chi) doc["chi"].push_back(to_string(q));
  doc["alpha"] = nlohmann::ordered_json::array();
  for (const auto& q : alpha) doc["alpha"].push_back(to_string(q));
  return doc.dump(2);
}

}  // namespace goldie
