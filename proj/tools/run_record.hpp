#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypersf::cli {

using KeyValues = std::map<std::string, std::string>;

// One command invocation. Numbers are stored as decimal text so the JSON form
// is byte-stable across runs.
struct RunRecord {
  std::string command;
  KeyValues inputs;
  KeyValues outputs;
  std::optional<KeyValues> oracle;
  std::optional<std::string> agreement;
  std::vector<std::string> warnings;

  bool operator==(const RunRecord&) const = default;
};

// 15 significant digits, "C" locale formatting.
std::string fmt(double v);

nlohmann::json to_json(const RunRecord& r);
RunRecord from_json(const nlohmann::json& j);

}  // namespace hypersf::cli
