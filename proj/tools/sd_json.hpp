#pragma once

#include <hypersf/srivastava_daoust.hpp>

#include <json.hpp>

#include <string>

namespace hypersf::cli {

// Tableau file format:
//
//   { "variable_count": n,
//     "upper_global": [ {"value": v, "shifts": [..n ints..]}, ... ],
//     "lower_global": [ ... ],
//     "upper_per_variable": [ [ {"value": v, "shift": k}, ... ], ... n rows ],
//     "lower_per_variable": [ ... n rows ] }
//
// A value is a number or a [re, im] pair; "shift" defaults to 1. The global
// lists may be omitted, the per-variable rows may not.
SDSpec sd_spec_from_json(const nlohmann::json& j);
nlohmann::json sd_spec_to_json(const SDSpec& s);
SDSpec load_sd_spec(const std::string& path);

}  // namespace hypersf::cli
