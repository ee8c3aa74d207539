#include "sliceconf/lrs.hpp"

#include <cmath>

namespace sliceconf {

NamedResiduals slice_constraint_residuals(const SliceState& s, int fd_order) {
  s.validate();
  const Grid& g = s.grid();
  const int n = g.n();
  NamedResiduals out;
  auto d = [fd_order](const Profile& p) { return hat(p, fd_order); };

  auto pointwise = [&](const std::string& name,
                       const std::function<double(int)>& f) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = f(i);
    out.emplace_back(name, Profile::from_values(g, std::move(v)));
  };

  // Evolution equations restricted to the slice (dot derivatives dropped).
  pointwise("expansion_shear_evolution", [&](int i) {
    const double sd = 2.0 * s.Theta[i] / 3.0 - s.Sigma[i];
    return s.A[i] * s.phi[i] - 0.5 * sd * sd - 2.0 * s.Omega[i] * s.Omega[i] +
           s.E[i] - 0.5 * s.Pi[i] - (s.rho[i] + 3.0 * s.p[i]) / 3.0 +
           2.0 / 3.0 * s.Lambda;
  });
  pointwise("sheet_expansion_evolution", [&](int i) {
    const double sd = 2.0 * s.Theta[i] / 3.0 - s.Sigma[i];
    return 0.5 * sd * (2.0 * s.A[i] - s.phi[i]) + 2.0 * s.xi[i] * s.Omega[i] +
           s.Q[i];
  });
  pointwise("twist_evolution", [&](int i) {
    const double sd = 2.0 * s.Theta[i] / 3.0 - s.Sigma[i];
    return -0.5 * sd * s.xi[i] + 0.5 * (2.0 * s.A[i] - s.phi[i]) * s.Omega[i];
  });
  pointwise("rotation_evolution", [&](int i) {
    const double sd = 2.0 * s.Theta[i] / 3.0 - s.Sigma[i];
    return s.A[i] * s.xi[i] - sd * s.Omega[i];
  });
  pointwise("magnetic_weyl_evolution", [&](int i) {
    const double sd = 2.0 * s.Theta[i] / 3.0 - s.Sigma[i];
    return -3.0 * s.xi[i] * s.E[i] - 1.5 * sd * s.H[i] +
           s.Omega[i] * s.Q[i];
  });
  pointwise("weyl_energy_evolution", [&](int i) {
    const double sd = 2.0 * s.Theta[i] / 3.0 - s.Sigma[i];
    return 3.0 * s.xi[i] * s.H[i] + 0.5 * s.phi[i] * s.Q[i] +
           sd * (0.5 * (s.rho[i] + s.p[i]) -
                 1.5 * (s.E[i] + s.Pi[i] / 6.0));
  });

  // Propagation equations as hat residuals.
  {
    Profile lhs = (2.0 / 3.0) * d(s.Theta) - d(s.Sigma);
    pointwise("expansion_shear_propagation", [&](int i) {
      return lhs[i] - 1.5 * s.phi[i] * s.Sigma[i] -
             2.0 * s.xi[i] * s.Omega[i] - s.Q[i];
    });
  }
  {
    Profile dphi = d(s.phi);
    pointwise("sheet_expansion_propagation", [&](int i) {
      const double sd = 2.0 * s.Theta[i] / 3.0 - s.Sigma[i];
      const double sp = s.Theta[i] / 3.0 + s.Sigma[i];
      return dphi[i] + 0.5 * s.phi[i] * s.phi[i] - sp * sd -
             2.0 * s.xi[i] * s.xi[i] +
             2.0 / 3.0 * (s.rho[i] + s.Lambda) + s.E[i] + 0.5 * s.Pi[i];
    });
  }
  {
    Profile dxi = d(s.xi);
    pointwise("twist_propagation", [&](int i) {
      const double sp = s.Theta[i] / 3.0 + s.Sigma[i];
      return dxi[i] + s.phi[i] * s.xi[i] - sp * s.Omega[i];
    });
  }
  {
    Profile dom = d(s.Omega);
    pointwise("rotation_propagation", [&](int i) {
      return dom[i] - (s.A[i] - s.phi[i]) * s.Omega[i];
    });
  }
  {
    Profile dh = d(s.H);
    pointwise("magnetic_weyl_propagation", [&](int i) {
      return dh[i] +
             (3.0 * s.E[i] + s.rho[i] + s.p[i] - 0.5 * s.Pi[i]) * s.Omega[i] +
             3.0 * s.phi[i] * s.H[i] + s.xi[i] * s.Q[i];
    });
  }
  {
    Profile lhs = d(s.E) - (1.0 / 3.0) * d(s.rho) + 0.5 * d(s.Pi);
    pointwise("weyl_energy_propagation", [&](int i) {
      const double sd = 2.0 * s.Theta[i] / 3.0 - s.Sigma[i];
      return lhs[i] + 1.5 * s.phi[i] * (s.E[i] + 0.5 * s.Pi[i]) -
             3.0 * s.Omega[i] * s.H[i] + 0.5 * sd * s.Q[i];
    });
  }

  // Mixed equations with dots dropped.
  {
    Profile da = d(s.A);
    pointwise("acceleration_balance", [&](int i) {
      return da[i] + (s.A[i] + s.phi[i]) * s.A[i] -
             s.Theta[i] * s.Theta[i] / 3.0 - 1.5 * s.Sigma[i] * s.Sigma[i] +
             2.0 * s.Omega[i] * s.Omega[i] -
             0.5 * (s.rho[i] + 3.0 * s.p[i]) + s.Lambda;
    });
  }
  {
    Profile dq = d(s.Q);
    pointwise("energy_conservation", [&](int i) {
      return dq[i] + s.Theta[i] * (s.rho[i] + s.p[i]) +
             (2.0 * s.A[i] + s.phi[i]) * s.Q[i] +
             1.5 * s.Sigma[i] * s.Pi[i];
    });
  }
  {
    Profile lhs = d(s.p) + d(s.Pi);
    pointwise("momentum_conservation", [&](int i) {
      return lhs[i] + (s.rho[i] + s.p[i]) * s.A[i] +
             (s.A[i] + 1.5 * s.phi[i]) * s.Pi[i] +
             (4.0 * s.Theta[i] / 3.0 + s.Sigma[i]) * s.Q[i];
    });
  }

  pointwise("magnetic_weyl_constraint", [&](int i) {
    return s.H[i] - 3.0 * s.Sigma[i] * s.xi[i] +
           (2.0 * s.A[i] - s.phi[i]) * s.Omega[i];
  });

  return out;
}

double max_residual(const NamedResiduals& residuals) {
  double m = 0.0;
  for (const auto& [name, p] : residuals) m = std::max(m, max_abs(p));
  return m;
}

EinsteinTypeReport einstein_type_check(const SliceState& s,
                                       const RicciData& r, double tol,
                                       int fd_order) {
  require_same_grid(s.grid(), r.alpha.grid(), "einstein_type_check");
  EinsteinTypeReport rep;
  rep.alpha_minus_beta_max = max_abs(r.difference());
  rep.einstein_type = rep.alpha_minus_beta_max <= tol;
  rep.inertial_mass_residual = max_abs(s.rho + s.p);
  rep.sheet_energy_residual =
      max_abs(s.phi * s.phi + (4.0 / 3.0) * s.rho);
  rep.sheet_gradient_residual = max_abs(
      s.phi * hat(s.phi, fd_order) + (2.0 / 3.0) * hat(s.rho, fd_order));
  rep.stress_gap_residual = max_abs(r.difference() - 0.75 * s.Pi);
  if (is_constant(s.rho, tol).constant)
    rep.sheet_gradient_max = max_abs(hat(s.phi, fd_order));
  return rep;
}

std::string to_string(Prop7Branch b) {
  switch (b) {
    case Prop7Branch::branch1: return "branch1";
    case Prop7Branch::branch2: return "branch2";
    default: return "none";
  }
}

LRSVerdict ckv_admission_consequences(const SliceState& s, double tol,
                                      int fd_order) {
  s.validate();
  LRSVerdict v;
  auto push = [&](const std::string& name, double value) {
    v.residuals.emplace_back(name, value);
    return value;
  };

  const double sheet_accel = push("sheet_accel", max_abs(s.phi - 2.0 * s.A));
  const double exp_shear =
      push("expansion_shear", max_abs((1.0 / 3.0) * s.Theta + s.Sigma));
  v.preconditions_met = sheet_accel <= tol && exp_shear <= tol;

  const double twist = push("twist", max_abs(s.xi));
  const double rotation = push("rotation", max_abs(s.Omega));
  const double magnetic = push("magnetic_weyl", max_abs(s.H));
  const double heat = push("heat_flux", max_abs(s.Q));
  const double weyl_stress = push(
      "weyl_stress_balance",
      max_abs(s.rho + s.p - 3.0 * (s.E + (1.0 / 6.0) * s.Pi)));
  const double stress_ratio =
      push("stress_ratio", max_abs(s.Pi - 2.0 * (s.rho + s.p)));
  const double electric = push("electric_weyl", max_abs(s.E));
  const double expansion = push("expansion", max_abs(s.Theta));
  const double shear = push("shear", max_abs(s.Sigma));

  Profile bound = s.rho + 1.5 * s.p;
  v.energy_bound_margin = min_value(bound);
  push("energy_bound_margin", v.energy_bound_margin);

  RicciData r = alpha_beta_of(s);
  v.einstein_type = max_abs(r.difference()) <= tol;
  v.time_symmetric = expansion <= tol && shear <= tol;
  v.conformally_flat = electric <= tol;
  v.lemma_ok = v.preconditions_met && twist <= tol && rotation <= tol &&
               magnetic <= tol && heat <= tol && weyl_stress <= tol &&
               stress_ratio <= tol && v.time_symmetric && v.conformally_flat;

  v.prop7_branch = Prop7Branch::none;
  if (v.preconditions_met) {
    // branch 1: phi not proportional to (rho+p)^{1/3}; requires a
    // nowhere-vanishing cube root for the ratio test.
    Profile root = map(s.rho + s.p, [](double x) { return std::cbrt(x); });
    double root_floor = 1e-12 * (1.0 + max_abs(root));
    bool root_ok = true;
    for (int i = 0; i < root.size(); ++i)
      if (std::abs(root[i]) <= root_floor) root_ok = false;
    if (root_ok && !is_constant(s.phi / root, tol).constant) {
      v.prop7_branch = Prop7Branch::branch1;
    } else {
      const bool p_const = max_abs(hat(s.p, fd_order)) <= tol;
      Profile combo = (5.0 / 3.0) * s.rho + s.p;
      const double away_full = max_abs(combo - s.phi * s.phi);
      const double away_half = max_abs(combo - 0.5 * s.phi * s.phi);
      if (p_const && away_full > tol && away_half > tol)
        v.prop7_branch = Prop7Branch::branch2;
    }
  }
  return v;
}

}  // namespace sliceconf
