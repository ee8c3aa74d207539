#ifndef SLICECONF_LRS_HPP
#define SLICECONF_LRS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sliceconf/curvature.hpp"
#include "sliceconf/slice_state.hpp"

namespace sliceconf {

/// One residual profile per slice-restricted field equation, in declaration
/// order.  Dot derivatives vanish on the slice; hat derivatives are kept.
using NamedResiduals = std::vector<std::pair<std::string, Profile>>;

/// Evolution equations as algebraic constraints, the propagation equations
/// as hat-derivative residuals, the mixed equations with dots dropped, and
/// the magnetic Weyl constraint.
NamedResiduals slice_constraint_residuals(const SliceState& state,
                                          int fd_order = 4);

double max_residual(const NamedResiduals& residuals);

/// Einstein-type diagnostics: alpha = beta forces rho + p = 0 and
/// phi^2 = -(4/3) rho; in the LRS II class alpha - beta = (3/4) Pi always.
struct EinsteinTypeReport {
  bool einstein_type;
  double alpha_minus_beta_max;
  double inertial_mass_residual;    // max |rho + p|
  double sheet_energy_residual;     // max |phi^2 + (4/3) rho|
  double sheet_gradient_residual;   // max |phi hat(phi) + (2/3) hat(rho)|
  double stress_gap_residual;       // max |alpha - beta - (3/4) Pi|
  // max |hat(phi)| when rho is constant; the transformation cannot be
  // proper on an Einstein slice with constant density and nonzero phi.
  std::optional<double> sheet_gradient_max;
};

EinsteinTypeReport einstein_type_check(const SliceState& state,
                                       const RicciData& r, double tol = 1e-8,
                                       int fd_order = 4);

enum class Prop7Branch { branch1, branch2, none };

std::string to_string(Prop7Branch b);

/// Consequence chain of admitting a CKV along the radial direction on an
/// LRS II slice: the twist, rotation, magnetic Weyl and heat flux must
/// vanish, the Weyl/stress balance and the stress ratio Pi = 2 (rho + p)
/// must hold, the electric Weyl scalar vanishes (conformal flatness) and
/// the slice is time-symmetric, with the energy bound rho > -(3/2) p
/// reported as a margin.
struct LRSVerdict {
  std::vector<std::pair<std::string, double>> residuals;
  bool preconditions_met;
  bool einstein_type;
  bool time_symmetric;
  bool conformally_flat;
  bool lemma_ok;
  Prop7Branch prop7_branch;
  double energy_bound_margin;  // min (rho + 1.5 p)
};

LRSVerdict ckv_admission_consequences(const SliceState& state,
                                      double tol = 1e-8, int fd_order = 4);

}  // namespace sliceconf

#endif
