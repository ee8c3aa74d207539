#ifndef SLICECONF_CKV_HPP
#define SLICECONF_CKV_HPP

#include <utility>
#include <vector>

#include "sliceconf/conformal.hpp"
#include "sliceconf/slice_state.hpp"

namespace sliceconf {

enum class CKVKind { sheet, shear, energy, phi_power };

std::string to_string(CKVKind k);

/// A conformal Killing vector candidate of the form X = gamma * e, with its
/// associated conformal factor.  ode_consistent records whether the radial
/// transport law defining the family is actually satisfied by the inputs;
/// diagnostics carry the residual maxima behind the flags.
struct CKVCandidate {
  CKVKind kind;
  Profile gamma;
  ConformalFactor factor;
  bool proper;
  bool ode_consistent;
  std::vector<std::pair<std::string, double>> diagnostics;
};

/// gamma = gamma0 * exp((1/2) integral of phi from chi0), factor
/// (1/2) phi gamma.  Requires gamma0 > 0 and a sheet expansion that is not
/// identically zero (a vanishing sheet expansion degenerates the family to
/// a plain Killing vector).
CKVCandidate build_sheet_ckv(const Profile& phi_sheet, double chi0,
                             double gamma0, int fd_order = 4,
                             double tol = 1e-8);

/// gamma = 1/Sigma, factor (1/2) phi / Sigma.  Sigma must be nowhere zero
/// (the component blows up on time-symmetric slices); proper iff phi is not
/// proportional to Sigma.
CKVCandidate build_shear_ckv(const SliceState& state, int fd_order = 4,
                             double tol = 1e-8);

/// gamma = (rho + p)^{-1/3}, factor phi / (2 (rho+p)^{1/3}).  Requires
/// constant energy density and nowhere vanishing rho + p; proper iff phi is
/// not proportional to (rho+p)^{1/3}.
CKVCandidate build_energy_ckv(const SliceState& state, int fd_order = 4,
                              double tol = 1e-8);

/// Sign convention for the constant W in the sheet-expansion transport law
/// hat(phi) = -W phi^2, with W = sign * (1/2 + (5 rho/3 + p) / phi^2).
/// The positive convention is the one consistent with the propagation
/// equation for phi on admissible slices and is the default; the negative
/// convention is retained so both can be adjudicated by the residual.
enum class WSign { positive, negative };

struct WProfileCheck {
  Profile w;
  double w_mean;
  double w_deviation;
  bool w_constant;
  Profile ode_residual;  // hat(phi) + w_mean * phi^2
};

WProfileCheck w_profile_check(const SliceState& state, WSign sign,
                              int fd_order = 4, double tol = 1e-8);

/// gamma = phi^{-1/(2W)}, factor (1/2) phi^{1 - 1/(2W)}.  Requires W
/// constant, W != 1/2 (otherwise the vector is a homothety generator, not a
/// proper CKV) and positive sheet expansion for the fractional powers.
CKVCandidate build_phi_power_ckv(const SliceState& state,
                                 WSign sign = WSign::positive,
                                 int fd_order = 4, double tol = 1e-8);

/// Residuals of the algebraic and differential constraints every CKV of
/// this form must satisfy against a slice state.
struct CKVConstraintResiduals {
  Profile accel_gamma;      // A gamma - phi_conf
  Profile gamma_gradient;   // hat(gamma) - phi_conf
  Profile sheet_gamma;      // phi gamma - 2 phi_conf
  Profile sheet_accel;      // phi - 2 A
  Profile expansion_shear;  // Theta/3 + Sigma
};

CKVConstraintResiduals ckv_constraint_residuals(const CKVCandidate& c,
                                                const SliceState& state,
                                                int fd_order = 4);

/// Closed-form slice and transformed scalar curvatures generated by the
/// sheet-expansion CKV family, plus the concavity gate
/// hat(hat(phi)) + (3/2) phi hat(phi) + phi^3/4 that must be non-positive
/// for the family to produce the sphere conclusion.
struct SheetCurvatures {
  Profile scalar;
  Profile transformed;
  Profile gate;
};

SheetCurvatures curvatures_from_sheet(const Profile& phi_sheet, double chi0,
                                      int fd_order = 4);

}  // namespace sliceconf

#endif
