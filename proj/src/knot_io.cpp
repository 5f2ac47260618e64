#include "swfold/knot_io.hpp"

#include <fstream>
#include <sstream>

#include "swfold/error.hpp"

namespace swfold {

using nlohmann::json;

nlohmann::json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError(file, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw SchemaError(file, std::string("invalid JSON: ") + e.what());
  }
}

KnotRecord knot_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected object");
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "fibered" && key != "seifert" &&
        key != "alexander") {
      throw SchemaError(path + "/" + key, "unknown field");
    }
  }
  if (!j.contains("name") || !j["name"].is_string()) {
    throw SchemaError(path + "/name", "expected string");
  }
  if (!j.contains("fibered") || !j["fibered"].is_boolean()) {
    throw SchemaError(path + "/fibered", "expected boolean");
  }
  const std::string name = j["name"].get<std::string>();
  const bool fibered = j["fibered"].get<bool>();
  const bool has_seifert = j.contains("seifert");
  const bool has_alexander = j.contains("alexander");
  if (has_seifert == has_alexander) {
    throw SchemaError(path, "exactly one of 'seifert' or 'alexander' required");
  }

  if (has_alexander) {
    if (!j["alexander"].is_string()) {
      throw SchemaError(path + "/alexander", "expected polynomial string");
    }
    return make_knot(name,
                     from_text(j["alexander"].get<std::string>(),
                               alexander_basis()),
                     fibered);
  }

  const json& rows = j["seifert"];
  if (!rows.is_array()) throw SchemaError(path + "/seifert", "expected array");
  std::vector<std::vector<std::int64_t>> matrix;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string row_path = path + "/seifert/" + std::to_string(r);
    if (!rows[r].is_array()) throw SchemaError(row_path, "expected array");
    std::vector<std::int64_t> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!rows[r][c].is_number_integer()) {
        throw SchemaError(row_path + "/" + std::to_string(c),
                          "expected integer");
      }
      row.push_back(rows[r][c].get<std::int64_t>());
    }
    matrix.push_back(std::move(row));
  }
  return make_knot(name, SeifertMatrix(std::move(matrix)), fibered);
}

std::vector<KnotRecord> load_knot_file(const std::string& file) {
  json j = read_json_file(file);
  std::vector<KnotRecord> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(knot_from_json(j[i], file + ":/" + std::to_string(i)));
    }
  } else {
    out.push_back(knot_from_json(j, file + ":"));
  }
  return out;
}

nlohmann::json knot_to_json(const KnotRecord& knot) {
  json j;
  j["name"] = knot.name;
  j["fibered"] = knot.fibered;
  j["alexander"] = to_text(knot.alexander);
  if (knot.seifert) j["seifert"] = knot.seifert->rows();
  return j;
}

}  // namespace swfold
