#include "sliceconf/ckv.hpp"

#include <cmath>

namespace sliceconf {

namespace {

double zero_floor(const Profile& p) { return 1e-12 * (1.0 + max_abs(p)); }

void require_nowhere_zero(const Profile& p, const std::string& what) {
  const double floor = zero_floor(p);
  for (int i = 0; i < p.size(); ++i)
    if (std::abs(p[i]) <= floor)
      fail(ErrorKind::construction,
           what + " vanishes at chi = " + std::to_string(p.grid().chi(i)));
}

/// Proportionality deviation of p against q (q nowhere zero): constancy
/// deviation of the pointwise ratio.
double proportionality_deviation(const Profile& p, const Profile& q) {
  return is_constant(p / q, 1.0).deviation;
}

}  // namespace

std::string to_string(CKVKind k) {
  switch (k) {
    case CKVKind::sheet: return "sheet";
    case CKVKind::shear: return "shear";
    case CKVKind::energy: return "energy";
    default: return "phi_power";
  }
}

CKVCandidate build_sheet_ckv(const Profile& phi_sheet, double chi0,
                             double gamma0, int fd_order, double tol) {
  if (!(gamma0 > 0.0))
    fail(ErrorKind::usage, "build_sheet_ckv: gamma0 must be positive");
  if (max_abs(phi_sheet) <= 1e-12)
    fail(ErrorKind::construction,
         "build_sheet_ckv: sheet expansion is identically zero; the vector "
         "degenerates to a Killing vector");
  Profile integral = integrate_from(phi_sheet, chi0);
  Profile gamma =
      map(integral, [gamma0](double s) { return gamma0 * std::exp(0.5 * s); });
  Profile phi_conf = 0.5 * phi_sheet * gamma;
  ConformalFactor factor = ConformalFactor::make(phi_conf, fd_order);
  Profile ode = hat(gamma, fd_order) - 0.5 * phi_sheet * gamma;
  const double ode_max = max_abs(ode);
  CKVCandidate c{CKVKind::sheet,
                 std::move(gamma),
                 std::move(factor),
                 false,
                 ode_max <= 1e-6 * (1.0 + max_abs(phi_conf)),
                 {{"transport_residual_max", ode_max}}};
  c.proper = classify(c.factor, tol) == TransformKind::proper;
  return c;
}

CKVCandidate build_shear_ckv(const SliceState& state, int fd_order,
                             double tol) {
  state.validate();
  if (max_abs(state.Sigma) <= 1e-12)
    fail(ErrorKind::construction,
         "build_shear_ckv: time-symmetric slice (Sigma = 0), the vector "
         "component blows up");
  require_nowhere_zero(state.Sigma, "build_shear_ckv: shear");
  Profile gamma = map(state.Sigma, [](double s) { return 1.0 / s; });
  Profile phi_conf = 0.5 * state.phi / state.Sigma;
  ConformalFactor factor = ConformalFactor::make(phi_conf, fd_order);
  Profile ode = hat(state.Sigma, fd_order) + 0.5 * state.phi * state.Sigma;
  const double ode_max = max_abs(ode);
  const double prop = proportionality_deviation(state.phi, state.Sigma);
  CKVCandidate c{CKVKind::shear,
                 std::move(gamma),
                 std::move(factor),
                 false,
                 ode_max <= 1e-6 * (1.0 + max_abs(state.Sigma)),
                 {{"transport_residual_max", ode_max},
                  {"proportionality_deviation", prop}}};
  c.proper = classify(c.factor, tol) == TransformKind::proper;
  return c;
}

CKVCandidate build_energy_ckv(const SliceState& state, int fd_order,
                              double tol) {
  state.validate();
  if (!is_constant(state.rho, tol).constant)
    fail(ErrorKind::usage,
         "build_energy_ckv: energy density must be constant on the slice");
  Profile inertial = state.rho + state.p;
  for (int i = 0; i < inertial.size(); ++i)
    if (std::abs(inertial[i]) <= zero_floor(inertial))
      fail(ErrorKind::construction,
           "build_energy_ckv: rho + p vanishes (Einstein-type branch) at "
           "chi = " +
               std::to_string(inertial.grid().chi(i)));
  Profile root = map(inertial, [](double x) { return std::cbrt(x); });
  Profile gamma = map(root, [](double x) { return 1.0 / x; });
  Profile phi_conf = 0.5 * state.phi * gamma;
  ConformalFactor factor = ConformalFactor::make(phi_conf, fd_order);
  // differentiate the fields separately so closed-form inputs stay exact
  Profile ode = hat(state.rho, fd_order) + hat(state.p, fd_order) +
                1.5 * state.phi * inertial;
  const double ode_max = max_abs(ode);
  const double prop = proportionality_deviation(state.phi, root);
  CKVCandidate c{CKVKind::energy,
                 std::move(gamma),
                 std::move(factor),
                 false,
                 ode_max <= 1e-6 * (1.0 + max_abs(inertial)),
                 {{"transport_residual_max", ode_max},
                  {"proportionality_deviation", prop}}};
  c.proper = classify(c.factor, tol) == TransformKind::proper;
  return c;
}

WProfileCheck w_profile_check(const SliceState& state, WSign sign,
                              int fd_order, double tol) {
  state.validate();
  require_nowhere_zero(state.phi, "w_profile_check: sheet expansion");
  const double s = sign == WSign::positive ? 1.0 : -1.0;
  const int n = state.grid().n();
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = s * (0.5 + (5.0 / 3.0 * state.rho[i] + state.p[i]) /
                          (state.phi[i] * state.phi[i]));
  Profile wp = Profile::from_values(state.grid(), std::move(w));
  ConstancyResult cr = is_constant(wp, tol);
  const double wm = mean(wp);
  Profile residual =
      hat(state.phi, fd_order) + wm * state.phi * state.phi;
  return {std::move(wp), wm, cr.deviation, cr.constant, std::move(residual)};
}

CKVCandidate build_phi_power_ckv(const SliceState& state, WSign sign,
                                 int fd_order, double tol) {
  WProfileCheck wc = w_profile_check(state, sign, fd_order, tol);
  if (!wc.w_constant)
    fail(ErrorKind::construction,
         "build_phi_power_ckv: W not constant (deviation " +
             std::to_string(wc.w_deviation) + ")");
  if (std::abs(wc.w_mean - 0.5) <= tol)
    fail(ErrorKind::branch,
         "build_phi_power_ckv: W = 1/2, the vector generates a homothety, "
         "not a proper conformal transformation");
  if (min_value(state.phi) <= 0.0)
    fail(ErrorKind::construction,
         "build_phi_power_ckv: positive sheet expansion required for the "
         "fractional powers");
  const double exp_gamma = -1.0 / (2.0 * wc.w_mean);
  Profile gamma =
      map(state.phi, [exp_gamma](double x) { return std::pow(x, exp_gamma); });
  Profile phi_conf = map(state.phi, [exp_gamma](double x) {
    return 0.5 * std::pow(x, 1.0 + exp_gamma);
  });
  ConformalFactor factor = ConformalFactor::make(phi_conf, fd_order);
  const double ode_max = max_abs(wc.ode_residual);
  CKVCandidate c{CKVKind::phi_power,
                 std::move(gamma),
                 std::move(factor),
                 false,
                 ode_max <= 1e-6 * (1.0 + max_abs(state.phi)),
                 {{"transport_residual_max", ode_max},
                  {"w_value", wc.w_mean},
                  {"w_deviation", wc.w_deviation}}};
  c.proper = classify(c.factor, tol) == TransformKind::proper;
  return c;
}

CKVConstraintResiduals ckv_constraint_residuals(const CKVCandidate& c,
                                                const SliceState& state,
                                                int fd_order) {
  require_same_grid(c.gamma.grid(), state.grid(), "ckv_constraint_residuals");
  const Profile& phi_conf = c.factor.phi();
  return {state.A * c.gamma - phi_conf,
          hat(c.gamma, fd_order) - phi_conf,
          state.phi * c.gamma - 2.0 * phi_conf,
          state.phi - 2.0 * state.A,
          (1.0 / 3.0) * state.Theta + state.Sigma};
}

SheetCurvatures curvatures_from_sheet(const Profile& phi_sheet, double chi0,
                                      int fd_order) {
  const Profile& phi = phi_sheet;
  Profile h1 = hat(phi, fd_order);
  Profile h2 = hat(h1, fd_order);
  Profile growth = map(integrate_from(phi, chi0),
                       [](double s) { return std::exp(0.5 * s); });
  Profile quad = h1 * h1 + phi * phi * h1 + 0.25 * phi * phi * phi * phi;
  Profile gate = h2 + 1.5 * phi * h1 + 0.25 * phi * phi * phi;
  Profile scalar = (quad * growth + 2.0 * gate) * growth;
  Profile transformed = zip(gate * growth, phi * growth, [](double g, double e)
                            { return -g * std::exp(e); });
  return {std::move(scalar), std::move(transformed), std::move(gate)};
}

}  // namespace sliceconf
