#include "run_record.hpp"

#include <cmath>
#include <cstdio>

namespace hypersf::cli {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

nlohmann::json to_json(const RunRecord& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["outputs"] = r.outputs;
  if (r.oracle) j["oracle"] = *r.oracle;
  if (r.agreement) j["agreement"] = *r.agreement;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

RunRecord from_json(const nlohmann::json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs").get<KeyValues>();
  r.outputs = j.at("outputs").get<KeyValues>();
  if (j.contains("oracle")) r.oracle = j.at("oracle").get<KeyValues>();
  if (j.contains("agreement")) r.agreement = j.at("agreement").get<std::string>();
  if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

}  // namespace hypersf::cli
