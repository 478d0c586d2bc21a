#include "sd_json.hpp"

#include <hypersf/errors.hpp>

#include <fstream>

namespace hypersf::cli {

namespace {

cplx value_of(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  throw ParameterError("tableau value must be a number or a [re, im] pair");
}

nlohmann::json value_to_json(cplx v) {
  if (v.imag() == 0.0) return v.real();
  return nlohmann::json::array({v.real(), v.imag()});
}

std::vector<SDGlobalParam> globals(const nlohmann::json& j, const char* key) {
  std::vector<SDGlobalParam> out;
  if (!j.contains(key)) return out;
  for (const auto& e : j.at(key)) {
    out.push_back({value_of(e.at("value")), e.at("shifts").get<std::vector<int>>()});
  }
  return out;
}

std::vector<std::vector<SDLocalParam>> locals(const nlohmann::json& j, const char* key,
                                              std::size_t n) {
  std::vector<std::vector<SDLocalParam>> out(n);
  const auto& rows = j.at(key);
  if (rows.size() != n) throw ParameterError(std::string("tableau: ") + key + " needs one row per variable");
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : rows[i]) {
      out[i].push_back({value_of(e.at("value")), e.value("shift", 1)});
    }
  }
  return out;
}

}  // namespace

SDSpec sd_spec_from_json(const nlohmann::json& j) {
  SDSpec s;
  try {
    s.variable_count = j.at("variable_count").get<std::size_t>();
    s.upper_global = globals(j, "upper_global");
    s.lower_global = globals(j, "lower_global");
    s.upper_per_variable = locals(j, "upper_per_variable", s.variable_count);
    s.lower_per_variable = locals(j, "lower_per_variable", s.variable_count);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed tableau: ") + e.what());
  }
  s.validate();
  return s;
}

nlohmann::json sd_spec_to_json(const SDSpec& s) {
  nlohmann::json j;
  j["variable_count"] = s.variable_count;
  auto g = [](const std::vector<SDGlobalParam>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : v) a.push_back({{"value", value_to_json(e.value)}, {"shifts", e.shifts}});
    return a;
  };
  auto l = [](const std::vector<std::vector<SDLocalParam>>& v) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : v) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& e : row) r.push_back({{"value", value_to_json(e.value)}, {"shift", e.shift}});
      rows.push_back(r);
    }
    return rows;
  };
  j["upper_global"] = g(s.upper_global);
  j["lower_global"] = g(s.lower_global);
  j["upper_per_variable"] = l(s.upper_per_variable);
  j["lower_per_variable"] = l(s.lower_per_variable);
  return j;
}

SDSpec load_sd_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open tableau file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("tableau file " + path + " is not valid JSON: " + e.what());
  }
  return sd_spec_from_json(j);
}

}  // namespace hypersf::cli
