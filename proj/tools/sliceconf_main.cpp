#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sliceconf/curvature.hpp"
#include "sliceconf/lrs.hpp"
#include "sliceconf/oracle.hpp"
#include "sliceconf/scenario.hpp"

namespace {

using sliceconf::json;

int cmd_run(const std::string& scenario_path,
            const std::optional<int>& grid_n,
            const std::optional<int>& fd_order,
            const std::vector<std::string>& tol_overrides,
            const std::optional<std::string>& report_path,
            const std::optional<std::string>& csv_dir) {
  sliceconf::Scenario sc = sliceconf::load_scenario_file(scenario_path);
  if (grid_n) sc.grid_n = *grid_n;
  if (fd_order) sc.fd_order = *fd_order;
  for (const std::string& kv : tol_overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      sliceconf::fail(sliceconf::ErrorKind::config,
                      "--tol expects NAME=VALUE, got '" + kv + "'");
    const double v = std::stod(kv.substr(eq + 1));
    if (!(v > 0.0))
      sliceconf::fail(sliceconf::ErrorKind::config,
                      "--tol " + kv + ": value must be positive");
    sc.tolerances[kv.substr(0, eq)] = v;
  }

  sliceconf::RunResult result = sliceconf::run_scenario(sc, csv_dir);
  const std::string text = result.report.dump(2) + "\n";
  if (report_path) {
    std::ofstream out(*report_path, std::ios::binary);
    if (!out)
      sliceconf::fail(sliceconf::ErrorKind::config,
                      "cannot write report to " + *report_path);
    out << text;
  }
  std::cout << text;
  return result.all_pass ? 0 : 1;
}

int cmd_preset_list() {
  for (const std::string& name : sliceconf::preset_catalog())
    std::cout << name << "\n";
  return 0;
}

int cmd_preset_show(const std::string& name) {
  sliceconf::Preset p = sliceconf::load_preset(name);
  json out;
  out["name"] = p.name;
  out["grid"] = {{"chi_min", p.grid.chi_min()},
                 {"chi_max", p.grid.chi_max()},
                 {"n", p.grid.n()}};
  json tags = json::array();
  for (const std::string& t : p.tags) tags.push_back(t);
  out["tags"] = std::move(tags);
  out["has_metric"] = p.metric.has_value();
  out["has_state"] = p.state.has_value();
  out["has_factor"] = p.factor.has_value();
  if (p.metric) out["sheet_curvature_k"] = p.metric->k();
  if (p.state) {
    sliceconf::RicciData r = sliceconf::alpha_beta_of(*p.state);
    out["alpha_minus_beta_max"] = sliceconf::max_abs(r.difference());
    out["max_slice_residual"] = sliceconf::max_residual(
        sliceconf::slice_constraint_residuals(*p.state));
  } else if (p.metric) {
    sliceconf::FrameGeometry fg = sliceconf::frame_geometry(*p.metric);
    out["alpha_minus_beta_max"] =
        sliceconf::max_abs(fg.alpha - fg.beta);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformal-geometry verification for spacelike slices"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::optional<int> grid_n, fd_order;
  std::vector<std::string> tol_overrides;
  std::optional<std::string> report_path, csv_dir;

  CLI::App* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  run->add_option("--grid-n", grid_n, "override the sample count");
  run->add_option("--fd-order", fd_order, "finite-difference order (2 or 4)")
      ->check(CLI::IsMember({2, 4}));
  run->add_option("--tol", tol_overrides,
                  "tolerance override NAME=VALUE (repeatable)");
  run->add_option("--report", report_path, "write the JSON report here");
  run->add_option("--csv-dir", csv_dir, "export residual profiles as CSV");

  CLI::App* preset = app.add_subcommand("preset", "preset catalog");
  preset->require_subcommand(1);
  CLI::App* plist = preset->add_subcommand("list", "list preset names");
  std::string preset_name;
  CLI::App* pshow = preset->add_subcommand("show", "describe one preset");
  pshow->add_option("name", preset_name, "preset name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(scenario_path, grid_n, fd_order, tol_overrides,
                     report_path, csv_dir);
    if (plist->parsed()) return cmd_preset_list();
    if (pshow->parsed()) return cmd_preset_show(preset_name);
  } catch (const sliceconf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == sliceconf::ErrorKind::config ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
