#ifndef SLICECONF_PRESETS_HPP
#define SLICECONF_PRESETS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sliceconf/conformal.hpp"
#include "sliceconf/metric.hpp"
#include "sliceconf/slice_state.hpp"

namespace sliceconf {

/// A named scenario binding a metric, a slice state and a conformal factor
/// on one grid.  Tags are validated against derived quantities at load:
/// einstein/non_einstein against alpha - beta, physical against the slice
/// constraint residuals, compact against the sheet curvature and the areal
/// factor closing at both ends.
struct Preset {
  std::string name;
  Grid grid;
  std::optional<WarpedMetric3> metric;
  std::optional<SliceState> state;
  std::optional<ConformalFactor> factor;
  std::set<std::string> tags;

  bool has_tag(const std::string& t) const { return tags.count(t) > 0; }
};

/// Names in the bundled catalog.
std::vector<std::string> preset_catalog();

/// Materializes a preset on its default domain with the given sample count.
/// The pole margin defaults to 0.05 and can be overridden by the argument
/// or the SLICECONF_EPS environment variable.
Preset load_preset(const std::string& name, int n = 2001,
                   std::optional<double> pole_margin = std::nullopt);

}  // namespace sliceconf

#endif
