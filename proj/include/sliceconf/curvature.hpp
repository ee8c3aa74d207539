#ifndef SLICECONF_CURVATURE_HPP
#define SLICECONF_CURVATURE_HPP

#include "sliceconf/slice_state.hpp"

namespace sliceconf {

/// Ricci data of a slice whose Ricci tensor is diagonal in the radial/sheet
/// orthonormal frame: alpha is the radial-radial eigenvalue, beta the sheet
/// eigenvalue, scalar = alpha + 2 beta.
struct RicciData {
  Profile alpha;
  Profile beta;
  Profile scalar;

  static RicciData make(Profile alpha, Profile beta);
  Profile difference() const { return alpha - beta; }
};

/// Computes (alpha, beta) from the covariant scalars of a slice state.
RicciData alpha_beta_of(const SliceState& state);

/// The two independent curvature-tensor components in the orthonormal
/// frame: the N-traced sheet-sheet block (2 beta - alpha) and the single
/// radial-sheet plane component (alpha / 2).
struct RiemannComponents {
  Profile sheet_sheet;  // 2 beta - alpha
  Profile e_sheet;      // alpha / 2
};

RiemannComponents riemann_components(const RicciData& r);

/// Radial/epsilon contraction of the Cotton tensor: (alpha - beta) * xi.
/// Vanishes iff the slice is Einstein type or non-twisting.
Profile cotton_twist_residual(const RicciData& r, const Profile& xi);

/// Contracted-Bianchi residual hat(alpha) + (alpha - beta) phi - hat(R')/2.
/// Vanishes to finite-difference accuracy for data derived from a real
/// 3-metric.
Profile bianchi_residual(const RicciData& r, const Profile& phi_sheet,
                         int fd_order = 4);

/// Source convention for the divergence of the trace-free Ricci part.
/// `zero` sets the scalar-gradient source to zero; `scalar_gradient` keeps
/// the hat(R')/6 source implied by the divergence identity.  Both are
/// computed and reported side by side as diagnostics.
enum class DivergenceSource { zero, scalar_gradient };

/// Residual of the radial transport law for alpha - beta:
///   zero:             hat(alpha-beta) + (3/2) phi (alpha-beta)
///   scalar_gradient:  (2/3) hat(alpha-beta) + phi (alpha-beta) - hat(R')/6
Profile traceless_divergence_residual(const RicciData& r,
                                      const Profile& phi_sheet,
                                      DivergenceSource source,
                                      int fd_order = 4);

/// Solves the zero-source transport law:
///   alpha - beta = c0 * exp(-(3/2) * integral of phi from chi0).
/// c0 must be positive unless phi is identically zero, in which case any
/// sign is allowed and the result is the constant c0.
Profile solve_alpha_minus_beta(const Profile& phi_sheet, double chi0,
                               double c0);

}  // namespace sliceconf

#endif
