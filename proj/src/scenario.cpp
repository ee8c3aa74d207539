#include "sliceconf/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "sliceconf/ckv.hpp"
#include "sliceconf/curvature.hpp"
#include "sliceconf/expression.hpp"
#include "sliceconf/lrs.hpp"
#include "sliceconf/oracle.hpp"

namespace sliceconf {

namespace {

// ---- materialization ------------------------------------------------------

Profile profile_from_config(const json& value, const Grid& grid,
                            const std::string& what) {
  if (value.is_number()) return Profile::constant(grid, value.get<double>());
  if (value.is_string())
    return Expression::parse(value.get<std::string>()).sample(grid);
  fail(ErrorKind::config, what + ": expected a number or expression string");
}

Grid grid_from_config(const json& g) {
  if (!g.is_object() || !g.contains("chi_min") || !g.contains("chi_max") ||
      !g.contains("n"))
    fail(ErrorKind::config, "custom.grid needs chi_min, chi_max and n");
  Topology topo = Topology::interval;
  if (g.value("topology", "interval") == std::string("periodic"))
    topo = Topology::periodic;
  return Grid(g.at("chi_min").get<double>(), g.at("chi_max").get<double>(),
              g.at("n").get<int>(), topo);
}

void apply_custom(Preset& p, const json& custom) {
  if (custom.empty()) return;
  if (!custom.is_object())
    fail(ErrorKind::config, "custom must be an object");
  if (custom.contains("metric")) {
    const json& m = custom.at("metric");
    Profile B = profile_from_config(m.value("B", json("1")), p.grid,
                                    "custom.metric.B");
    Profile F = profile_from_config(m.value("F", json("chi")), p.grid,
                                    "custom.metric.F");
    p.metric = WarpedMetric3(std::move(B), std::move(F), m.value("k", 1),
                             m.value("compact", false));
  }
  if (custom.contains("state")) {
    SliceState s = p.state ? *p.state : SliceState::zero(p.grid);
    const json& st = custom.at("state");
    if (!st.is_object())
      fail(ErrorKind::config, "custom.state must be an object");
    for (auto it = st.begin(); it != st.end(); ++it) {
      const std::string& key = it.key();
      if (key == "Lambda") {
        s.Lambda = it.value().get<double>();
        continue;
      }
      Profile* field = nullptr;
      if (key == "A") field = &s.A;
      else if (key == "Theta") field = &s.Theta;
      else if (key == "phi") field = &s.phi;
      else if (key == "Sigma") field = &s.Sigma;
      else if (key == "E") field = &s.E;
      else if (key == "H") field = &s.H;
      else if (key == "rho") field = &s.rho;
      else if (key == "p") field = &s.p;
      else if (key == "Pi") field = &s.Pi;
      else if (key == "Q") field = &s.Q;
      else if (key == "Omega") field = &s.Omega;
      else if (key == "xi") field = &s.xi;
      else
        fail(ErrorKind::config, "custom.state: unknown scalar '" + key + "'");
      *field = profile_from_config(it.value(), p.grid, "custom.state." + key);
    }
    p.state = std::move(s);
  }
  if (custom.contains("factor")) {
    Profile phi =
        profile_from_config(custom.at("factor"), p.grid, "custom.factor");
    p.factor = ConformalFactor::make(phi);
  }
  if (custom.contains("tags")) {
    p.tags.clear();
    for (const auto& t : custom.at("tags"))
      p.tags.insert(t.get<std::string>());
  }
}

Preset materialize(const Scenario& sc) {
  if (sc.preset) {
    Preset p = load_preset(*sc.preset, sc.grid_n.value_or(2001),
                           sc.pole_margin);
    if (sc.custom.contains("grid"))
      fail(ErrorKind::config,
           "custom.grid cannot be combined with a preset; use grid_n");
    apply_custom(p, sc.custom);
    p.name = sc.name;
    return p;
  }
  if (!sc.custom.contains("grid"))
    fail(ErrorKind::config, "custom scenarios need custom.grid");
  Grid g = grid_from_config(sc.custom.at("grid"));
  if (sc.grid_n) g = Grid(g.chi_min(), g.chi_max(), *sc.grid_n, g.topology());
  Preset p{sc.name, g, std::nullopt, std::nullopt, std::nullopt, {}};
  apply_custom(p, sc.custom);
  if (!p.metric && !p.state)
    fail(ErrorKind::config, "custom scenarios need a metric or a state");
  return p;
}

// ---- execution context ----------------------------------------------------

struct Context {
  Preset preset;
  int fd_order;
  const std::map<std::string, double>* overrides;

  std::optional<RicciData> ricci_cache;
  std::optional<FrameGeometry> oracle_cache;
  std::vector<std::pair<std::string, Profile>> csv_profiles;
  std::optional<CKVCandidate> ckv_cache;

  double tol(const std::string& name, double fallback) const {
    auto it = overrides->find(name);
    return it != overrides->end() ? it->second : fallback;
  }

  const FrameGeometry& oracle() {
    if (!preset.metric)
      fail(ErrorKind::usage, "check requires a metric");
    if (!oracle_cache)
      oracle_cache = frame_geometry(*preset.metric, fd_order);
    return *oracle_cache;
  }

  // Ricci data from the state when present (exact algebra), otherwise from
  // the oracle.
  const RicciData& ricci() {
    if (!ricci_cache) {
      if (preset.state)
        ricci_cache = alpha_beta_of(*preset.state);
      else
        ricci_cache = RicciData::make(oracle().alpha, oracle().beta);
    }
    return *ricci_cache;
  }

  Profile phi_sheet() {
    if (preset.state) return preset.state->phi;
    return oracle().phi_sheet;
  }

  const ConformalFactor& factor() {
    if (!preset.factor)
      fail(ErrorKind::usage, "check requires a conformal factor");
    return *preset.factor;
  }

  const SliceState& state() {
    if (!preset.state)
      fail(ErrorKind::usage, "check requires a slice state");
    return *preset.state;
  }

  const WarpedMetric3& metric() {
    if (!preset.metric)
      fail(ErrorKind::usage, "check requires a metric");
    return *preset.metric;
  }

  const CKVCandidate& sheet_ckv() {
    if (!ckv_cache) {
      const Grid& g = preset.grid;
      const double mid = g.chi(g.n() / 2);
      ckv_cache = build_sheet_ckv(phi_sheet(), mid, 1.0, fd_order);
    }
    return *ckv_cache;
  }
};

json residual_entry(const std::string& name, double value, double tolerance,
                    json notes = json::object()) {
  json e;
  e["name"] = name;
  const bool pass = value <= tolerance;
  e["status"] = pass ? "pass" : "fail";
  e["max_residual"] = value;
  e["tolerance"] = tolerance;
  e["pass"] = pass;
  if (!notes.empty()) e["notes"] = std::move(notes);
  return e;
}

json info_entry(const std::string& name, json notes) {
  json e;
  e["name"] = name;
  e["status"] = "info";
  e["pass"] = true;
  e["notes"] = std::move(notes);
  return e;
}

double rel_diff(const Profile& a, const Profile& b) {
  return max_abs(a - b) / (1.0 + max_abs(b));
}

// Comparison over interior samples: boundary rows of second-derivative
// caches amplify quadrature end-cell errors and are excluded from
// two-route identity diagnostics.
double rel_diff_interior(const Profile& a, const Profile& b, int trim = 4) {
  double worst = 0.0;
  for (int i = trim; i < a.size() - trim; ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst / (1.0 + max_abs(b));
}

// ---- individual checks ----------------------------------------------------

json check_alpha_beta_oracle(Context& ctx) {
  const FrameGeometry& fg = ctx.oracle();
  RicciData rs = alpha_beta_of(ctx.state());
  const double da = max_abs(rs.alpha - fg.alpha);
  const double db = max_abs(rs.beta - fg.beta);
  json notes;
  notes["alpha_diff"] = da;
  notes["beta_diff"] = db;
  return residual_entry("alpha_beta_oracle", std::max(da, db),
                        ctx.tol("alpha_beta_oracle", 1e-4), notes);
}

json check_frame_geometry(Context& ctx) {
  const FrameGeometry& fg = ctx.oracle();
  json notes;
  notes["accel_max"] = max_abs(fg.accel);
  notes["alpha_path_diff"] = fg.alpha_path_diff;
  notes["beta_path_diff"] = fg.beta_path_diff;
  return residual_entry("frame_geometry", max_abs(fg.accel),
                        ctx.tol("frame_geometry", 1e-6), notes);
}

json check_ricci_from_metric(Context& ctx) {
  RicciTable t = ricci_from_metric(ctx.metric(), ctx.fd_order);
  json notes;
  notes["off_diagonal_max"] = t.off_diagonal_max;
  notes["sheet_isotropy_max"] = t.sheet_isotropy_max;
  return residual_entry("ricci_from_metric",
                        std::max(t.off_diagonal_max, t.sheet_isotropy_max),
                        ctx.tol("ricci_from_metric", 1e-8), notes);
}

json check_bianchi(Context& ctx) {
  const FrameGeometry& fg = ctx.oracle();
  RicciData r = RicciData::make(fg.alpha, fg.beta);
  Profile res = bianchi_residual(r, fg.phi_sheet, ctx.fd_order);
  ctx.csv_profiles.emplace_back("bianchi_residual", res);
  return residual_entry("bianchi_residual", max_abs(res),
                        ctx.tol("bianchi_residual", 1e-5));
}

json check_traceless_divergence(Context& ctx) {
  const FrameGeometry& fg = ctx.oracle();
  RicciData r = RicciData::make(fg.alpha, fg.beta);
  Profile zero_src = traceless_divergence_residual(
      r, fg.phi_sheet, DivergenceSource::zero, ctx.fd_order);
  Profile grad_src = traceless_divergence_residual(
      r, fg.phi_sheet, DivergenceSource::scalar_gradient, ctx.fd_order);
  json notes;
  notes["zero_source_max"] = max_abs(zero_src);
  notes["scalar_gradient_source_max"] = max_abs(grad_src);
  notes["scalar_gradient_max"] = max_abs(hat(fg.scalar, ctx.fd_order));
  notes["scalar_constant"] =
      is_constant(fg.scalar, ctx.tol("constancy", 1e-6)).constant;
  return info_entry("traceless_divergence", notes);
}

json check_cotton_twist(Context& ctx) {
  Profile res = cotton_twist_residual(ctx.ricci(), ctx.state().xi);
  return residual_entry("cotton_twist_residual", max_abs(res),
                        ctx.tol("cotton_twist_residual", 1e-10));
}

json check_criterion_identity(Context& ctx) {
  Profile direct = criterion_scalar(ctx.ricci(), ctx.factor());
  Profile nu_form = criterion_scalar_nu_form(ctx.ricci(), ctx.factor());
  return residual_entry("criterion_scalar_identity",
                        max_abs(direct - nu_form),
                        ctx.tol("criterion_scalar_identity", 1e-12));
}

json check_tracefree(Context& ctx) {
  GData g = g_tensor(ctx.ricci());
  return residual_entry("g_tensor_tracefree",
                        max_abs(g.g_ee + 2.0 * g.g_NN),
                        ctx.tol("g_tensor_tracefree", 1e-12));
}

json check_criterion_integral(Context& ctx) {
  CriterionIntegral ci =
      criterion_integral(ctx.ricci(), ctx.factor(), ctx.metric());
  ctx.csv_profiles.emplace_back("criterion_scalar",
                                criterion_scalar(ctx.ricci(), ctx.factor()));
  const double tol = ctx.tol("criterion_integral", 1e-10);
  json notes;
  notes["value"] = ci.value;
  notes["vanishes"] = std::abs(ci.value) <= tol;
  notes["nonnegative"] = ci.value >= -tol;
  if (!ci.warning.empty()) notes["warning"] = ci.warning;
  if (ctx.preset.has_tag("einstein"))
    return residual_entry("criterion_integral", std::abs(ci.value), tol,
                          notes);
  return info_entry("criterion_integral", notes);
}

json check_transformed_scalar(Context& ctx) {
  const ConformalFactor& cf = ctx.factor();
  Profile phi_s = ctx.phi_sheet();
  const Profile& rp = ctx.ricci().scalar;
  Profile coupled = transformed_scalar(cf, phi_s, rp, ScalarLaw::sheet_coupled);
  Profile uncoupled = transformed_scalar(cf, phi_s, rp, ScalarLaw::uncoupled);
  ConformalRecompute oracle = conformal_recompute(ctx.metric(), cf,
                                                  ctx.fd_order);
  const double coupled_diff = rel_diff(coupled, oracle.scalar);
  const double uncoupled_diff = rel_diff(uncoupled, oracle.scalar);
  // The two laws differ by 4 phi_sheet hat1 e^{-2phi} exactly.
  Profile predicted = zip(cf.phi(), phi_s * cf.hat1(), [](double p, double t) {
    return 4.0 * t * std::exp(-2.0 * p);
  });
  json notes;
  notes["sheet_coupled_vs_oracle"] = coupled_diff;
  notes["uncoupled_vs_oracle"] = uncoupled_diff;
  notes["law_gap_identity_residual"] =
      max_abs((uncoupled - coupled) - predicted);
  ctx.csv_profiles.emplace_back("transformed_scalar", coupled);
  return residual_entry("transformed_scalar_oracle", coupled_diff,
                        ctx.tol("transformed_scalar_oracle", 1e-4), notes);
}

json check_transformed_ricci(Context& ctx) {
  const ConformalFactor& cf = ctx.factor();
  Profile phi_s = ctx.phi_sheet();
  TransformedRicci coupled =
      transformed_ricci(cf, phi_s, ctx.ricci(), ScalarLaw::sheet_coupled);
  TransformedRicci uncoupled =
      transformed_ricci(cf, phi_s, ctx.ricci(), ScalarLaw::uncoupled);
  ConformalRecompute oracle = conformal_recompute(ctx.metric(), cf,
                                                  ctx.fd_order);
  // Oracle components live in the rescaled frame; scale back.
  Profile e2p = map(cf.phi(), [](double p) { return std::exp(2.0 * p); });
  const double dee = rel_diff(coupled.ee, e2p * oracle.alpha);
  const double dnn = rel_diff(coupled.NN, e2p * oracle.beta);
  json notes;
  notes["ee_vs_oracle"] = dee;
  notes["NN_vs_oracle"] = dnn;
  notes["uncoupled_ee_gap"] = max_abs(uncoupled.ee - coupled.ee);
  notes["uncoupled_NN_gap"] = max_abs(uncoupled.NN - coupled.NN);
  return residual_entry("transformed_ricci_oracle", std::max(dee, dnn),
                        ctx.tol("transformed_ricci_oracle", 1e-4), notes);
}

json check_homothety(Context& ctx) {
  const double c = 0.7;
  const Profile& rp = ctx.ricci().scalar;
  ConformalFactor cf =
      ConformalFactor::make(Profile::constant(ctx.preset.grid, c));
  Profile phi_s = ctx.phi_sheet();
  const double expect = std::exp(-2.0 * c);
  double worst = 0.0;
  for (ScalarLaw law : {ScalarLaw::uncoupled, ScalarLaw::sheet_coupled}) {
    Profile t = transformed_scalar(cf, phi_s, rp, law);
    worst = std::max(worst, max_abs(t - expect * rp) / (1.0 + max_abs(rp)));
  }
  return residual_entry("homothety_scaling", worst,
                        ctx.tol("homothety_scaling", 1e-12));
}

json check_lie(Context& ctx) {
  const CKVCandidate& c = ctx.sheet_ckv();
  const double res =
      lie_residual(ctx.metric(), c.gamma, c.factor.phi(), ctx.fd_order);
  json notes;
  notes["proper"] = c.proper;
  for (const auto& [k, v] : c.diagnostics) notes[k] = v;
  return residual_entry("lie_residual", res, ctx.tol("lie_residual", 1e-6),
                        notes);
}

json check_ckv_constraints(Context& ctx) {
  CKVConstraintResiduals r =
      ckv_constraint_residuals(ctx.sheet_ckv(), ctx.state(), ctx.fd_order);
  json notes;
  notes["accel_gamma"] = max_abs(r.accel_gamma);
  notes["gamma_gradient"] = max_abs(r.gamma_gradient);
  notes["sheet_gamma"] = max_abs(r.sheet_gamma);
  notes["sheet_accel"] = max_abs(r.sheet_accel);
  notes["expansion_shear"] = max_abs(r.expansion_shear);
  return info_entry("ckv_constraints", notes);
}

json check_slice_constraints(Context& ctx) {
  NamedResiduals rs = slice_constraint_residuals(ctx.state(), ctx.fd_order);
  json notes;
  for (const auto& [name, p] : rs) notes[name] = max_abs(p);
  return residual_entry("slice_constraints", max_residual(rs),
                        ctx.tol("slice_constraints", 1e-8), notes);
}

json check_einstein(Context& ctx) {
  EinsteinTypeReport rep = einstein_type_check(
      ctx.state(), ctx.ricci(), ctx.tol("einstein", 1e-8), ctx.fd_order);
  json notes;
  notes["einstein_type"] = rep.einstein_type;
  notes["alpha_minus_beta_max"] = rep.alpha_minus_beta_max;
  notes["inertial_mass_residual"] = rep.inertial_mass_residual;
  notes["sheet_energy_residual"] = rep.sheet_energy_residual;
  notes["sheet_gradient_residual"] = rep.sheet_gradient_residual;
  notes["stress_gap_residual"] = rep.stress_gap_residual;
  if (rep.sheet_gradient_max)
    notes["sheet_gradient_max"] = *rep.sheet_gradient_max;
  return info_entry("einstein_check", notes);
}

json check_admission(Context& ctx) {
  LRSVerdict v = ckv_admission_consequences(ctx.state(),
                                            ctx.tol("admission", 1e-8),
                                            ctx.fd_order);
  json notes;
  for (const auto& [name, value] : v.residuals) notes[name] = value;
  notes["preconditions_met"] = v.preconditions_met;
  notes["einstein_type"] = v.einstein_type;
  notes["time_symmetric"] = v.time_symmetric;
  notes["conformally_flat"] = v.conformally_flat;
  notes["lemma_ok"] = v.lemma_ok;
  notes["prop7_branch"] = to_string(v.prop7_branch);
  return info_entry("ckv_admission", notes);
}

json check_w_convention(Context& ctx) {
  json notes;
  for (WSign sign : {WSign::positive, WSign::negative}) {
    const std::string key =
        sign == WSign::positive ? "positive" : "negative";
    WProfileCheck wc =
        w_profile_check(ctx.state(), sign, ctx.fd_order);
    json one;
    one["w_mean"] = wc.w_mean;
    one["w_deviation"] = wc.w_deviation;
    one["w_constant"] = wc.w_constant;
    one["transport_residual_max"] = max_abs(wc.ode_residual);
    try {
      CKVCandidate c = build_phi_power_ckv(ctx.state(), sign, ctx.fd_order);
      one["constructed"] = true;
      one["proper"] = c.proper;
      one["ode_consistent"] = c.ode_consistent;
    } catch (const Error& e) {
      one["constructed"] = false;
      one["rejection"] = e.what();
    }
    notes[key] = std::move(one);
  }
  return info_entry("w_convention", notes);
}

json check_gates(Context& ctx) {
  const ConformalFactor& cf = ctx.factor();
  const Profile& rp = ctx.ricci().scalar;
  Profile rt = transformed_scalar(cf, ctx.phi_sheet(), rp,
                                  ScalarLaw::sheet_coupled);
  json notes;
  for (const GateReport& g :
       gate_checks(cf, rp, rt, ctx.tol("equality", 1e-6))) {
    json one;
    one["holds"] = g.holds;
    one["worst_margin"] = g.worst_margin;
    if (g.inapplicable > 0) one["inapplicable"] = g.inapplicable;
    notes[g.name] = std::move(one);
  }
  return info_entry("gate_checks", notes);
}

json check_theorem(Context& ctx, TheoremKind kind) {
  const ConformalFactor& cf = ctx.factor();
  const RicciData& r = ctx.ricci();
  Profile phi_s = ctx.phi_sheet();
  Profile rt = transformed_scalar(cf, phi_s, r.scalar,
                                  ScalarLaw::sheet_coupled);
  TheoremInputs in;
  in.ricci = &r;
  in.factor = &cf;
  in.phi_sheet = &phi_s;
  in.rtilde = &rt;
  in.compact = ctx.preset.has_tag("compact");
  in.tol = ctx.tol("premises", 1e-8);
  in.tol_eq = ctx.tol("equality", 1e-6);
  TheoremReport rep = theorem_premises(kind, in);
  json notes;
  for (const ConditionVerdict& c : rep.conditions) {
    json one;
    one["holds"] = c.holds;
    one["value"] = c.value;
    if (!c.gating) one["gating"] = false;
    notes[c.name] = std::move(one);
  }
  notes["criteria_met"] = rep.criteria_met;
  return info_entry("theorem_premises:" + to_string(kind), notes);
}

json check_sheet_curvatures(Context& ctx) {
  const Grid& g = ctx.preset.grid;
  Profile phi_s = ctx.phi_sheet();
  const double mid = g.chi(g.n() / 2);
  SheetCurvatures sc = curvatures_from_sheet(phi_s, mid, ctx.fd_order);
  const CKVCandidate& c = ctx.sheet_ckv();
  // Exact identities relating the closed forms to the factor derivatives.
  Profile expect_scalar =
      4.0 * (c.factor.hat2() + c.factor.hat1() * c.factor.hat1());
  Profile expect_transformed = zip(
      c.factor.hat2(), c.factor.phi(),
      [](double h2, double p) { return -2.0 * h2 * std::exp(2.0 * p); });
  json notes;
  notes["scalar_identity_residual"] =
      rel_diff_interior(sc.scalar, expect_scalar);
  notes["transformed_identity_residual"] =
      rel_diff_interior(sc.transformed, expect_transformed);
  notes["gate_max"] = max_value(sc.gate);
  notes["gate_holds"] = max_value(sc.gate) <= ctx.tol("gate", 1e-10);
  const double worst =
      std::max(rel_diff_interior(sc.scalar, expect_scalar),
               rel_diff_interior(sc.transformed, expect_transformed));
  return residual_entry("sheet_curvatures", worst,
                        ctx.tol("sheet_curvatures", 1e-3), notes);
}

json build_candidate_entry(const std::string& name, Context& ctx,
                           CKVKind kind) {
  CKVCandidate c = kind == CKVKind::shear
                       ? build_shear_ckv(ctx.state(), ctx.fd_order)
                       : build_energy_ckv(ctx.state(), ctx.fd_order);
  json notes;
  notes["kind"] = to_string(c.kind);
  notes["proper"] = c.proper;
  notes["ode_consistent"] = c.ode_consistent;
  for (const auto& [k, v] : c.diagnostics) notes[k] = v;
  return info_entry(name, notes);
}

// ---- registry -------------------------------------------------------------

const std::vector<std::string>& registry() {
  static const std::vector<std::string> ids = {
      "alpha_beta_oracle",
      "frame_geometry",
      "ricci_from_metric",
      "bianchi_residual",
      "traceless_divergence",
      "cotton_twist_residual",
      "criterion_scalar_identity",
      "g_tensor_tracefree",
      "criterion_integral",
      "transformed_scalar_oracle",
      "transformed_ricci_oracle",
      "homothety_scaling",
      "lie_residual",
      "ckv_constraints",
      "build_shear_ckv",
      "build_energy_ckv",
      "w_convention",
      "slice_constraints",
      "einstein_check",
      "ckv_admission",
      "gate_checks",
      "sheet_curvatures",
      "theorem_premises:einstein_sphere",
      "theorem_premises:equal_curvature_sphere",
      "theorem_premises:constant_transformed_sphere",
  };
  return ids;
}

std::string normalize_check(const std::string& raw) {
  // accept theorem_premises(x) as an alias for theorem_premises:x
  std::string id = raw;
  auto open = id.find('(');
  if (open != std::string::npos && id.back() == ')')
    id = id.substr(0, open) + ":" + id.substr(open + 1, id.size() - open - 2);
  return id;
}

json run_check(Context& ctx, const std::string& id) {
  if (id == "alpha_beta_oracle") return check_alpha_beta_oracle(ctx);
  if (id == "frame_geometry") return check_frame_geometry(ctx);
  if (id == "ricci_from_metric") return check_ricci_from_metric(ctx);
  if (id == "bianchi_residual") return check_bianchi(ctx);
  if (id == "traceless_divergence") return check_traceless_divergence(ctx);
  if (id == "cotton_twist_residual") return check_cotton_twist(ctx);
  if (id == "criterion_scalar_identity") return check_criterion_identity(ctx);
  if (id == "g_tensor_tracefree") return check_tracefree(ctx);
  if (id == "criterion_integral") return check_criterion_integral(ctx);
  if (id == "transformed_scalar_oracle") return check_transformed_scalar(ctx);
  if (id == "transformed_ricci_oracle") return check_transformed_ricci(ctx);
  if (id == "homothety_scaling") return check_homothety(ctx);
  if (id == "lie_residual") return check_lie(ctx);
  if (id == "ckv_constraints") return check_ckv_constraints(ctx);
  if (id == "build_shear_ckv")
    return build_candidate_entry(id, ctx, CKVKind::shear);
  if (id == "build_energy_ckv")
    return build_candidate_entry(id, ctx, CKVKind::energy);
  if (id == "w_convention") return check_w_convention(ctx);
  if (id == "slice_constraints") return check_slice_constraints(ctx);
  if (id == "einstein_check") return check_einstein(ctx);
  if (id == "ckv_admission") return check_admission(ctx);
  if (id == "gate_checks") return check_gates(ctx);
  if (id == "sheet_curvatures") return check_sheet_curvatures(ctx);
  if (id == "theorem_premises:einstein_sphere")
    return check_theorem(ctx, TheoremKind::einstein_sphere);
  if (id == "theorem_premises:equal_curvature_sphere")
    return check_theorem(ctx, TheoremKind::equal_curvature_sphere);
  if (id == "theorem_premises:constant_transformed_sphere")
    return check_theorem(ctx, TheoremKind::constant_transformed_sphere);
  fail(ErrorKind::config, "unknown check '" + id + "'");
}

void write_csv_outputs(const Context& ctx, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, profile] : ctx.csv_profiles)
    write_csv(profile,
              dir + "/" + ctx.preset.name + "_" + name + ".csv");
  if (ctx.ckv_cache) {
    const CKVCandidate& c = *ctx.ckv_cache;
    std::ofstream out(dir + "/" + ctx.preset.name + "_sheet_ckv.csv");
    out << "chi,gamma,phi_conf\n";
    char buf[96];
    for (int i = 0; i < c.gamma.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n",
                    c.gamma.grid().chi(i), c.gamma[i], c.factor.phi()[i]);
      out << buf;
    }
  }
}

}  // namespace

Scenario parse_scenario(const json& config) {
  if (!config.is_object())
    fail(ErrorKind::config, "scenario must be a JSON object");
  if (config.value("schema", 1) != 1)
    fail(ErrorKind::config, "unsupported scenario schema");
  Scenario sc;
  sc.name = config.value("name", "");
  if (config.contains("preset"))
    sc.preset = config.at("preset").get<std::string>();
  sc.custom = config.value("custom", json::object());
  if (!config.contains("checks") || !config.at("checks").is_array() ||
      config.at("checks").empty())
    fail(ErrorKind::config, "scenario needs a non-empty checks array");
  for (const auto& c : config.at("checks")) {
    const std::string id = normalize_check(c.get<std::string>());
    if (std::find(registry().begin(), registry().end(), id) ==
        registry().end())
      fail(ErrorKind::config, "unknown check '" + id + "'");
    sc.checks.push_back(id);
  }
  if (config.contains("tolerances")) {
    for (auto it = config.at("tolerances").begin();
         it != config.at("tolerances").end(); ++it) {
      const double v = it.value().get<double>();
      if (!(v > 0.0))
        fail(ErrorKind::config,
             "tolerance '" + it.key() + "' must be positive");
      sc.tolerances[it.key()] = v;
    }
  }
  sc.fd_order = config.value("fd_order", 4);
  if (sc.fd_order != 2 && sc.fd_order != 4)
    fail(ErrorKind::config, "fd_order must be 2 or 4");
  if (config.contains("grid_n")) sc.grid_n = config.at("grid_n").get<int>();
  if (config.contains("pole_margin"))
    sc.pole_margin = config.at("pole_margin").get<double>();
  if (!sc.preset && sc.custom.empty())
    fail(ErrorKind::config, "scenario needs a preset or custom inputs");
  if (sc.name.empty()) sc.name = sc.preset.value_or("custom");
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::config, "cannot open scenario file " + path);
  json config;
  try {
    in >> config;
  } catch (const std::exception& e) {
    fail(ErrorKind::config,
         "cannot parse " + path + ": " + std::string(e.what()));
  }
  return parse_scenario(config);
}

std::vector<std::string> registered_checks() { return registry(); }

RunResult run_scenario(const Scenario& scenario,
                       const std::optional<std::string>& csv_dir) {
  Context ctx{materialize(scenario), scenario.fd_order,
              &scenario.tolerances, std::nullopt, std::nullopt, {},
              std::nullopt};

  json entries = json::array();
  bool all_pass = true;
  for (const std::string& id : scenario.checks) {
    json entry;
    try {
      entry = run_check(ctx, id);
    } catch (const Error& e) {
      entry["name"] = id;
      entry["status"] = "error";
      entry["pass"] = false;
      entry["message"] = e.what();
    } catch (const std::exception& e) {
      entry["name"] = id;
      entry["status"] = "error";
      entry["pass"] = false;
      entry["message"] = e.what();
    }
    all_pass = all_pass && entry.value("pass", false);
    entries.push_back(std::move(entry));
  }

  json report;
  report["schema"] = 1;
  report["scenario"] = ctx.preset.name;
  report["entries"] = std::move(entries);
  json prov;
  prov["grid"] = {{"chi_min", ctx.preset.grid.chi_min()},
                  {"chi_max", ctx.preset.grid.chi_max()},
                  {"n", ctx.preset.grid.n()},
                  {"topology", ctx.preset.grid.topology() == Topology::interval
                                   ? "interval"
                                   : "periodic"}};
  prov["fd_order"] = scenario.fd_order;
  json tols = json::object();
  for (const auto& [k, v] : scenario.tolerances) tols[k] = v;
  prov["tolerances"] = std::move(tols);
  json tags = json::array();
  for (const std::string& t : ctx.preset.tags) tags.push_back(t);
  prov["tags"] = std::move(tags);
  report["provenance"] = std::move(prov);

  if (csv_dir) write_csv_outputs(ctx, *csv_dir);
  return {std::move(report), all_pass};
}

}  // namespace sliceconf
