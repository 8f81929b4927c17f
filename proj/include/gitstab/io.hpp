#pragma once

#include <string>

#include <json.hpp>

#include "gitstab/verdict.hpp"
#include "gitstab/xtilde_profile.hpp"

namespace gitstab {

struct Scenario {
  WeightedFiltration filtration;  // carries the geometric context
  LinearizationConfig lin;
  i64 u = 1;
  i64 v = 1;
};

nlohmann::json scenario_to_json(const Scenario& s);
// Throws Error naming the offending field.
Scenario scenario_from_json(const nlohmann::json& j);
Scenario parse_scenario(const std::string& text);

nlohmann::json rational_json(const Rational& x);

nlohmann::json report_to_json(const StabilityReport& rep);
nlohmann::json stages_to_json(const XTildeProfile& xt);
nlohmann::json vertices_to_json(const MultFiltration& mf);

}  // namespace gitstab
