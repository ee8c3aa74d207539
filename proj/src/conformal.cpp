#include "sliceconf/conformal.hpp"

#include <cmath>

namespace sliceconf {

namespace {

constexpr double kPi = 3.14159265358979323846;

double slope_floor(const Profile& hat1) {
  return 1e-12 * (1.0 + max_abs(hat1));
}

}  // namespace

ConformalFactor::ConformalFactor(Profile phi, Profile h1, Profile h2,
                                 Profile h3)
    : phi_(std::move(phi)),
      hat1_(std::move(h1)),
      hat2_(std::move(h2)),
      hat3_(std::move(h3)),
      nu_(map(phi_, [](double x) { return std::exp(-x); })) {
  require_same_grid(phi_.grid(), hat1_.grid(), "ConformalFactor");
  require_same_grid(phi_.grid(), hat2_.grid(), "ConformalFactor");
  require_same_grid(phi_.grid(), hat3_.grid(), "ConformalFactor");
}

ConformalFactor ConformalFactor::make(const Profile& phi, int fd_order) {
  Profile h1 = hat(phi, fd_order);
  Profile h2 = hat(h1, fd_order);
  Profile h3 = hat(h2, fd_order);
  return ConformalFactor(phi, std::move(h1), std::move(h2), std::move(h3));
}

ConformalFactor ConformalFactor::with_derivatives(Profile phi, Profile hat1,
                                                  Profile hat2, Profile hat3) {
  return ConformalFactor(std::move(phi), std::move(hat1), std::move(hat2),
                         std::move(hat3));
}

std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::isometry: return "isometry";
    case TransformKind::homothety: return "homothety";
    default: return "proper";
  }
}

TransformKind classify(const ConformalFactor& cf, double tol) {
  if (!is_constant(cf.phi(), tol).constant) return TransformKind::proper;
  return max_abs(cf.phi()) <= tol ? TransformKind::isometry
                                  : TransformKind::homothety;
}

Profile laplacian(const ConformalFactor& cf, const Profile& phi_sheet) {
  require_same_grid(cf.grid(), phi_sheet.grid(), "laplacian");
  return cf.hat2() + phi_sheet * cf.hat1();
}

Profile transformed_scalar(const ConformalFactor& cf,
                           const Profile& phi_sheet, const Profile& Rp,
                           ScalarLaw law) {
  require_same_grid(cf.grid(), phi_sheet.grid(), "transformed_scalar");
  require_same_grid(cf.grid(), Rp.grid(), "transformed_scalar");
  const Profile& h1 = cf.hat1();
  const Profile& h2 = cf.hat2();
  Profile bracket = law == ScalarLaw::uncoupled
                        ? Rp - 2.0 * h1 * h1 - 4.0 * h2
                        : Rp - 4.0 * h2 - 4.0 * phi_sheet * h1 - 2.0 * h1 * h1;
  return zip(cf.phi(), bracket,
             [](double p, double b) { return std::exp(-2.0 * p) * b; });
}

TransformedRicci transformed_ricci(const ConformalFactor& cf,
                                   const Profile& phi_sheet,
                                   const RicciData& r, ScalarLaw law) {
  require_same_grid(cf.grid(), phi_sheet.grid(), "transformed_ricci");
  require_same_grid(cf.grid(), r.alpha.grid(), "transformed_ricci");
  const Profile& h1 = cf.hat1();
  const Profile& h2 = cf.hat2();
  if (law == ScalarLaw::uncoupled) {
    Profile nn = -(h2 + h1 * h1 + 0.5 * phi_sheet * h1 - r.alpha);
    Profile ee = -(2.0 * h2 - r.beta);
    return {std::move(ee), std::move(nn)};
  }
  Profile ee = r.alpha - 2.0 * h2 - phi_sheet * h1;
  Profile nn = r.beta - h2 - h1 * h1 - 1.5 * phi_sheet * h1;
  return {std::move(ee), std::move(nn)};
}

GData g_tensor(const RicciData& r) {
  Profile diff = r.difference();
  return {(2.0 / 3.0) * diff, (-1.0 / 3.0) * diff};
}

Profile criterion_scalar(const RicciData& r, const ConformalFactor& cf) {
  require_same_grid(r.alpha.grid(), cf.grid(), "criterion_scalar");
  return (2.0 / 3.0) * r.difference() * cf.hat1() * cf.hat1();
}

Profile criterion_scalar_nu_form(const RicciData& r,
                                 const ConformalFactor& cf) {
  require_same_grid(r.alpha.grid(), cf.grid(), "criterion_scalar_nu_form");
  // gradient of nu is -nu hat1; the nu^{-2} weight undoes the factor.
  Profile nu_grad = -1.0 * cf.nu() * cf.hat1();
  return (2.0 / 3.0) * r.difference() * nu_grad * nu_grad / (cf.nu() * cf.nu());
}

CriterionIntegral criterion_integral(const RicciData& r,
                                     const ConformalFactor& cf,
                                     const WarpedMetric3& metric) {
  require_same_grid(r.alpha.grid(), metric.grid(), "criterion_integral");
  const double sheet_area = 4.0 * kPi;
  Profile integrand =
      criterion_scalar(r, cf) * metric.B() * metric.F() * metric.F();
  CriterionIntegral out;
  out.value = sheet_area * definite_integral(integrand);
  out.compact_domain = metric.k() == 1;
  if (!out.compact_domain)
    out.warning =
        "sheet curvature k != 1: domain is not compact, integral uses the "
        "spherical area factor";
  return out;
}

std::vector<GateReport> gate_checks(const ConformalFactor& cf,
                                    const Profile& Rp, const Profile& Rtilde,
                                    double tol_eq) {
  const Profile& phi = cf.phi();
  const Profile& h1 = cf.hat1();
  const Profile& h2 = cf.hat2();
  const Profile& h3 = cf.hat3();
  const int n = phi.size();

  std::vector<GateReport> gates;
  auto add = [&](const std::string& name, bool strict,
                 const std::function<double(int)>& margin,
                 const std::function<bool(int)>& applicable = nullptr) {
    GateReport g{name, 0.0, true, strict, 0};
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (applicable && !applicable(i)) {
        ++g.inapplicable;
        continue;
      }
      const double m = margin(i);
      if (first || m < g.worst_margin) g.worst_margin = m;
      first = false;
    }
    if (first) {
      g.holds = false;  // nowhere applicable
      g.worst_margin = 0.0;
    } else {
      g.holds = strict ? g.worst_margin > 0.0 : g.worst_margin >= 0.0;
    }
    gates.push_back(std::move(g));
  };

  add("curvature_positivity", true,
      [&](int i) { return h1[i] * h1[i] + 2.0 * h2[i]; });
  const double floor = slope_floor(h1);
  add(
      "required_curvature_slope", true,
      [&](int i) {
        return -(h3[i] - h1[i] * h2[i] - h1[i] * h1[i] * h1[i]) / h1[i];
      },
      [&](int i) { return std::abs(h1[i]) > floor; });
  add("required_curvature_truncated", true,
      [&](int i) { return h2[i] + h1[i] * h1[i]; });
  add("concavity", false, [&](int i) { return -h2[i]; });
  add("slope_dominates_concavity", true,
      [&](int i) { return h1[i] * h1[i] - std::abs(h2[i]); });
  add("factor_negative", true,
      [&](int i) { return 1.0 - std::exp(2.0 * phi[i]); });
  add("three_quarter_positivity", true,
      [&](int i) { return h2[i] + 0.75 * h1[i] * h1[i]; });
  add("three_quarter_dominates", true,
      [&](int i) { return 0.75 * h1[i] * h1[i] - std::abs(h2[i]); });
  add("transformed_nonneg", false, [&](int i) { return Rtilde[i]; });
  const double scale = 1.0 + max_abs(Rp);
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    dev = std::max(dev, std::abs(Rtilde[i] - Rp[i]) / scale);
  gates.push_back(
      {"transformed_matches_original", tol_eq - dev, dev <= tol_eq, false, 0});
  return gates;
}

Profile required_scalar_curvature(const ConformalFactor& cf) {
  const Profile& h1 = cf.hat1();
  const double floor = slope_floor(h1);
  for (int i = 0; i < h1.size(); ++i)
    if (std::abs(h1[i]) <= floor)
      fail(ErrorKind::branch,
           "required_scalar_curvature: factor slope vanishes at chi = " +
               std::to_string(h1.grid().chi(i)) +
               "; the transformation is not proper there");
  const Profile& h2 = cf.hat2();
  const Profile& h3 = cf.hat3();
  return -2.0 * (h3 - h1 * h2 - h1 * h1 * h1) / h1;
}

ConstantTransformedDiagnostics constant_transformed_diagnostics(
    const ConformalFactor& cf, const Profile& Rp) {
  require_same_grid(cf.grid(), Rp.grid(), "constant_transformed_diagnostics");
  const Profile& h1 = cf.hat1();
  const Profile& h2 = cf.hat2();
  const Profile& h3 = cf.hat3();
  Profile gradient =
      -2.0 * (h1 * (Rp - 2.0 * (2.0 * h2 - h1 * h1)) + 2.0 * (h3 + h1 * h2));
  Profile reduced = zip(cf.phi(), h2, [](double p, double s) {
    return -2.0 * std::exp(-2.0 * p) * s;
  });
  Profile balance = zip(cf.phi(), h1, [](double p, double s) {
                      return s * s / (1.0 + std::exp(-2.0 * p));
                    }) + h2;
  return {std::move(gradient), std::move(reduced), std::move(balance)};
}

std::string to_string(TheoremKind k) {
  switch (k) {
    case TheoremKind::einstein_sphere: return "einstein_sphere";
    case TheoremKind::equal_curvature_sphere: return "equal_curvature_sphere";
    default: return "constant_transformed_sphere";
  }
}

TheoremReport theorem_premises(TheoremKind kind, const TheoremInputs& in) {
  if (!in.ricci || !in.factor || !in.phi_sheet || !in.rtilde)
    fail(ErrorKind::usage, "theorem_premises: missing inputs");
  const RicciData& r = *in.ricci;
  const ConformalFactor& cf = *in.factor;
  TheoremReport report{kind, {}, true};
  auto add = [&](const std::string& name, bool holds, double value,
                 bool gating = true) {
    report.conditions.push_back({name, holds, value, gating});
    if (gating) report.criteria_met = report.criteria_met && holds;
  };

  add("compact", in.compact, in.compact ? 1.0 : 0.0);
  const bool proper = classify(cf, in.tol) == TransformKind::proper;
  add("proper_transformation", proper,
      is_constant(cf.phi(), in.tol).deviation);

  const double scale = 1.0 + max_abs(r.scalar);
  double eq_dev = 0.0;
  for (int i = 0; i < r.scalar.size(); ++i)
    eq_dev = std::max(eq_dev,
                      std::abs((*in.rtilde)[i] - r.scalar[i]) / scale);
  double min_abs_sheet = std::abs((*in.phi_sheet)[0]);
  for (int i = 1; i < in.phi_sheet->size(); ++i)
    min_abs_sheet = std::min(min_abs_sheet, std::abs((*in.phi_sheet)[i]));

  switch (kind) {
    case TheoremKind::einstein_sphere: {
      add("transformed_nonneg", min_value(*in.rtilde) >= -in.tol,
          min_value(*in.rtilde), /*gating=*/false);
      add("einstein", max_abs(r.difference()) <= in.tol,
          max_abs(r.difference()));
      break;
    }
    case TheoremKind::equal_curvature_sphere: {
      add("sheet_expansion_nowhere_zero", min_abs_sheet > in.tol,
          min_abs_sheet);
      add("transformed_nonneg", min_value(*in.rtilde) >= -in.tol,
          min_value(*in.rtilde));
      add("transformed_equals_original", eq_dev <= in.tol_eq, eq_dev);
      add("factor_negative", max_value(cf.phi()) < 0.0,
          -max_value(cf.phi()));
      Profile pos = cf.hat1() * cf.hat1() + 2.0 * cf.hat2();
      add("curvature_positivity", min_value(pos) > 0.0, min_value(pos));
      break;
    }
    case TheoremKind::constant_transformed_sphere: {
      add("sheet_expansion_nowhere_zero", min_abs_sheet > in.tol,
          min_abs_sheet);
      ConstancyResult rt_const = is_constant(*in.rtilde, in.tol_eq);
      add("transformed_constant", rt_const.constant, rt_const.deviation);
      Profile pos = cf.hat1() * cf.hat1() + 2.0 * cf.hat2();
      add("curvature_positivity", min_value(pos) > 0.0, min_value(pos));
      add("third_derivative_vanishes", max_abs(cf.hat3()) <= in.tol,
          max_abs(cf.hat3()));
      add("concavity_strict", max_value(cf.hat2()) < 0.0,
          -max_value(cf.hat2()));
      ConstantTransformedDiagnostics diag =
          constant_transformed_diagnostics(cf, r.scalar);
      add("equal_curvature_balance",
          max_abs(diag.equal_curvature_balance) <= in.tol,
          max_abs(diag.equal_curvature_balance));
      Profile tq = cf.hat2() + 0.75 * cf.hat1() * cf.hat1();
      add("three_quarter_positivity", min_value(tq) > 0.0, min_value(tq));
      break;
    }
  }
  return report;
}

}  // namespace sliceconf
