#ifndef SLICECONF_ORACLE_HPP
#define SLICECONF_ORACLE_HPP

#include "sliceconf/conformal.hpp"
#include "sliceconf/metric.hpp"

namespace sliceconf {

/// Frame-geometry quantities computed from an explicit warped metric by
/// finite differences only (any closed forms attached to B or F are
/// ignored, so the oracle stays independent of the analytic inputs it
/// adjudicates).
///
/// alpha_path_diff / beta_path_diff record the disagreement against the
/// independent Christoffel-assembly route of ricci_from_metric.
struct FrameGeometry {
  Profile alpha;
  Profile beta;
  Profile scalar;
  Profile phi_sheet;
  Profile accel;
  double alpha_path_diff;
  double beta_path_diff;
};

FrameGeometry frame_geometry(const WarpedMetric3& m, int fd_order = 4);

/// Brute-force Ricci tensor: Christoffel symbols assembled from
/// finite-difference metric derivatives, differentiated again and
/// contracted by the standard formula.  The y-dependence is carried in
/// closed form, so the result is a chi-profile despite being a 3D
/// computation.
struct RicciTable {
  Profile ee;              // orthonormal radial component
  Profile NN;              // orthonormal sheet component (y/z average)
  Profile scalar;
  double off_diagonal_max;   // orthonormal chi-y component, should vanish
  double sheet_isotropy_max; // |yy - zz| orthonormal mismatch
};

RicciTable ricci_from_metric(const WarpedMetric3& m, int fd_order = 4);

/// Max-norm of (L_X g - 2 phi_conf g) over coordinate components and
/// samples for X = gamma e, normalized by the largest metric component.
double lie_residual(const WarpedMetric3& m, const Profile& gamma,
                    const Profile& phi_conf, int fd_order = 4);

/// Rescales the metric by e^{phi} and recomputes curvature from scratch.
/// Components are reported in the rescaled orthonormal frame; scalar
/// curvature is frame-independent.
struct ConformalRecompute {
  Profile scalar;
  Profile alpha;
  Profile beta;
};

ConformalRecompute conformal_recompute(const WarpedMetric3& m,
                                       const ConformalFactor& cf,
                                       int fd_order = 4);

}  // namespace sliceconf

#endif
