#include "sliceconf/presets.hpp"

#include <cmath>
#include <cstdlib>

#include "sliceconf/curvature.hpp"
#include "sliceconf/lrs.hpp"
#include "sliceconf/oracle.hpp"

namespace sliceconf {

namespace {

constexpr double kPi = 3.14159265358979323846;

double pole_margin_default() {
  if (const char* env = std::getenv("SLICECONF_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || !(v > 0.0) || !(v < 1.0))
      fail(ErrorKind::config, "SLICECONF_EPS must be a number in (0, 1)");
    return v;
  }
  return 0.05;
}

Profile cot_profile(const Grid& g, double scale) {
  return Profile::from_analytic(g, [scale](double x, int k) {
    const double s = std::sin(x), c = std::cos(x);
    switch (k) {
      case 0: return scale * c / s;
      case 1: return -scale / (s * s);
      case 2: return 2.0 * scale * c / (s * s * s);
      default:
        return scale * (-2.0 / (s * s) - 6.0 * c * c / (s * s * s * s));
    }
  });
}

Profile coth_profile(const Grid& g, double scale) {
  return Profile::from_analytic(g, [scale](double x, int k) {
    const double s = std::sinh(x), c = std::cosh(x);
    switch (k) {
      case 0: return scale * c / s;
      case 1: return -scale / (s * s);
      case 2: return 2.0 * scale * c / (s * s * s);
      default:
        return scale * (-2.0 / (s * s) - 6.0 * c * c / (s * s * s * s));
    }
  });
}

Profile inverse_profile(const Grid& g, double scale) {
  // scale / chi with derivatives
  return Profile::from_analytic(g, [scale](double x, int k) {
    switch (k) {
      case 0: return scale / x;
      case 1: return -scale / (x * x);
      case 2: return 2.0 * scale / (x * x * x);
      default: return -6.0 * scale / (x * x * x * x);
    }
  });
}

Profile cos_profile(const Grid& g) {
  return Profile::from_analytic(g, [](double x, int k) {
    switch (k & 3) {
      case 0: return std::cos(x);
      case 1: return -std::sin(x);
      case 2: return -std::cos(x);
      default: return std::sin(x);
    }
  });
}

Profile sin_profile(const Grid& g) {
  return Profile::from_analytic(g, [](double x, int k) {
    switch (k & 3) {
      case 0: return std::sin(x);
      case 1: return std::cos(x);
      case 2: return -std::sin(x);
      default: return -std::cos(x);
    }
  });
}

Profile sinh_profile(const Grid& g) {
  return Profile::from_analytic(g, [](double x, int k) {
    return k % 2 == 0 ? std::sinh(x) : std::cosh(x);
  });
}

Profile linear_profile(const Grid& g, double slope) {
  return Profile::from_analytic(g, [slope](double x, int k) {
    return k == 0 ? slope * x : (k == 1 ? slope : 0.0);
  });
}

void validate_tags(const Preset& p) {
  const double tol = 1e-6;
  std::optional<RicciData> ricci;
  if (p.state) {
    ricci = alpha_beta_of(*p.state);
  } else if (p.metric) {
    FrameGeometry fg = frame_geometry(*p.metric);
    ricci = RicciData::make(fg.alpha, fg.beta);
  }
  if (ricci) {
    const double gap = max_abs(ricci->difference());
    if (p.has_tag("einstein") && gap > tol)
      fail(ErrorKind::config, p.name + ": einstein tag inconsistent, max "
                                       "|alpha - beta| = " +
                                  std::to_string(gap));
    if (p.has_tag("non_einstein") && gap <= tol)
      fail(ErrorKind::config, p.name + ": non_einstein tag inconsistent");
  }
  if (p.has_tag("physical")) {
    if (!p.state)
      fail(ErrorKind::config, p.name + ": physical tag requires a state");
    const double r = max_residual(slice_constraint_residuals(*p.state));
    if (r > 1e-8)
      fail(ErrorKind::config,
           p.name + ": physical tag inconsistent, max slice residual = " +
               std::to_string(r));
  }
  if (p.has_tag("compact")) {
    if (!p.metric || p.metric->k() != 1)
      fail(ErrorKind::config,
           p.name + ": compact tag requires a k = 1 metric");
    const Profile& F = p.metric->F();
    if (F[0] > 0.5 || F[F.size() - 1] > 0.5)
      fail(ErrorKind::config,
           p.name + ": compact tag requires the areal factor to close at "
                    "both ends");
  }
  if (p.has_tag("time_symmetric") && p.state) {
    if (max_abs(p.state->Theta) > tol || max_abs(p.state->Sigma) > tol)
      fail(ErrorKind::config, p.name + ": time_symmetric tag inconsistent");
  }
}

}  // namespace

std::vector<std::string> preset_catalog() {
  return {"unit_s3",         "flat",        "hyperbolic", "de_sitter_slice",
          "einstein_negrho", "lemma_slice", "ltb_like"};
}

Preset load_preset(const std::string& name, int n,
                   std::optional<double> pole_margin) {
  const double eps = pole_margin.value_or(pole_margin_default());
  Preset p{name, Grid(0.0, 1.0, 16), std::nullopt, std::nullopt,
           std::nullopt, {}};

  if (name == "unit_s3") {
    Grid g(eps, kPi - eps, n);
    p.grid = g;
    p.metric = WarpedMetric3(Profile::constant(g, 1.0), sin_profile(g), 1,
                             /*compact=*/true);
    SliceState s = SliceState::zero(g);
    s.rho = Profile::constant(g, 3.0);
    s.p = Profile::constant(g, -1.0);
    s.phi = cot_profile(g, 2.0);
    p.state = s;
    p.factor = ConformalFactor::make(cos_profile(g));
    p.tags = {"einstein", "compact", "physical"};
  } else if (name == "flat") {
    Grid g(eps, 3.0, n);
    p.grid = g;
    p.metric = WarpedMetric3(Profile::constant(g, 1.0), linear_profile(g, 1.0),
                             1, /*compact=*/false);
    SliceState s = SliceState::zero(g);
    s.phi = inverse_profile(g, 2.0);
    p.state = s;
    p.factor = ConformalFactor::make(linear_profile(g, -0.2));
    p.tags = {"einstein", "physical", "time_symmetric"};
  } else if (name == "hyperbolic") {
    Grid g(eps, 3.0, n);
    p.grid = g;
    // hyperbolic 3-space: radial warp sinh(chi) over spherical sheets
    p.metric = WarpedMetric3(Profile::constant(g, 1.0), sinh_profile(g), 1,
                             /*compact=*/false);
    SliceState s = SliceState::zero(g);
    s.rho = Profile::constant(g, -3.0);
    s.p = Profile::constant(g, 1.0);
    s.phi = coth_profile(g, 2.0);
    p.state = s;
    p.tags = {"einstein", "physical", "time_symmetric"};
  } else if (name == "de_sitter_slice") {
    Grid g(0.0, 3.0, n);
    p.grid = g;
    SliceState s = SliceState::zero(g);
    s.Theta = Profile::constant(g, 3.0);
    s.rho = Profile::constant(g, 3.0);
    s.p = Profile::constant(g, -3.0);
    p.state = s;
    p.tags = {"einstein", "physical"};
  } else if (name == "einstein_negrho") {
    Grid g(0.0, 3.0, n);
    p.grid = g;
    SliceState s = SliceState::zero(g);
    s.rho = Profile::constant(g, -3.0);
    s.p = Profile::constant(g, 3.0);
    s.phi = Profile::constant(g, 2.0);
    s.A = Profile::constant(g, 1.0);
    p.state = s;
    p.tags = {"einstein", "physical", "time_symmetric"};
  } else if (name == "lemma_slice") {
    Grid g(0.0, 3.0, n);
    p.grid = g;
    SliceState s = SliceState::zero(g);
    s.rho = Profile::constant(g, 1.0);
    s.p = Profile::constant(g, 0.0);
    s.Pi = Profile::constant(g, 2.0);
    s.phi = Profile::constant(g, 2.0);
    s.A = Profile::constant(g, 1.0);
    p.state = s;
    p.tags = {"non_einstein", "time_symmetric"};
  } else if (name == "ltb_like") {
    Grid g(eps, 3.0, n);
    p.grid = g;
    Profile F = Profile::from_analytic(g, [](double x, int k) {
      switch (k & 3) {
        case 0: return x + 0.1 * std::sin(x);
        case 1: return 1.0 + 0.1 * std::cos(x);
        case 2: return -0.1 * std::sin(x);
        default: return -0.1 * std::cos(x);
      }
    });
    p.metric = WarpedMetric3(Profile::constant(g, 1.0), std::move(F), 1,
                             /*compact=*/false);
    p.tags = {"non_einstein"};
  } else {
    std::string names;
    for (const std::string& s : preset_catalog()) names += " " + s;
    fail(ErrorKind::config,
         "unknown preset '" + name + "'; catalog:" + names);
  }

  validate_tags(p);
  return p;
}

}  // namespace sliceconf
