#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "swfold/alexander.hpp"

namespace swfold {

// {"name": str, "fibered": bool, "seifert": [[int]]} or
// {"name": str, "fibered": bool, "alexander": "<poly in t>"}.
// `path` prefixes SchemaError locations.
KnotRecord knot_from_json(const nlohmann::json& j, const std::string& path);

// A registration file holds one such object or an array of them.
std::vector<KnotRecord> load_knot_file(const std::string& file);

nlohmann::json knot_to_json(const KnotRecord& knot);

// Reads and parses a JSON document; SchemaError on I/O or syntax failure.
nlohmann::json read_json_file(const std::string& file);

}  // namespace swfold
