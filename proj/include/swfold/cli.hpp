#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "swfold/alexander.hpp"
#include "swfold/manifolds.hpp"

namespace swfold::cli {

// Builds a manifold from a spec document:
//   {"name"?: str, "base": "t3" | {"surface_x_s1": g},
//    "sums"?: [{"knot": name, "meridian": var}, ...], "knots"?: [...]}
// Knot registrations are added to `knots` before the sums are resolved.
ThreeManifold manifold_from_spec(const nlohmann::json& spec, KnotTable& knots,
                                 const std::string& default_name,
                                 const std::string& path = "");

ThreeManifold load_spec(const std::string& file, KnotTable& knots);

struct OutputRecord {
  std::string command;
  std::string text;
  nlohmann::json payload;
  // Single line "error: CODE: message"; empty on success.
  std::string error;
  int status = 0;
  bool json = false;
};

// Parses argv (without the program name) and executes one subcommand.
// Exit status: 0 success, 1 domain or hypothesis failure, 2 malformed input.
OutputRecord execute(const std::vector<std::string>& args);

// Writes the record in one piece: payload when `json`, text otherwise.
void emit(const OutputRecord& record, bool json, std::ostream& out,
          std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace swfold::cli
