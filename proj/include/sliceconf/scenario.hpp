#ifndef SLICECONF_SCENARIO_HPP
#define SLICECONF_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sliceconf/presets.hpp"

namespace sliceconf {

using json = nlohmann::ordered_json;

/// Parsed scenario configuration.  A scenario names a preset and/or fully
/// custom inputs, the checks to execute in order, and tolerance overrides.
struct Scenario {
  std::string name;
  std::optional<std::string> preset;
  json custom;  // optional object with grid / metric / state / factor
  std::vector<std::string> checks;
  std::map<std::string, double> tolerances;
  int fd_order = 4;
  std::optional<int> grid_n;
  std::optional<double> pole_margin;
};

Scenario parse_scenario(const json& config);
Scenario load_scenario_file(const std::string& path);

/// Registered check identifiers, in registry order.
std::vector<std::string> registered_checks();

struct RunResult {
  json report;
  bool all_pass;  // no failing or erroring entries
};

/// Executes the checks in declaration order and assembles the report.
/// Deterministic: identical configuration produces byte-identical reports.
/// csv_dir, when set, receives one CSV per profile-producing check.
RunResult run_scenario(const Scenario& scenario,
                       const std::optional<std::string>& csv_dir = std::nullopt);

}  // namespace sliceconf

#endif
