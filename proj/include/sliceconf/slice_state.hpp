#ifndef SLICECONF_SLICE_STATE_HPP
#define SLICECONF_SLICE_STATE_HPP

#include "sliceconf/profile.hpp"

namespace sliceconf {

/// The covariant scalar set describing one spacelike slice.  All fields are
/// profiles on a single shared grid; Lambda is the cosmological constant.
///
///   A      acceleration scalar of the observer congruence
///   Theta  volume expansion
///   phi    sheet expansion (divergence of the radial frame vector)
///   Sigma  shear scalar
///   E, H   electric / magnetic Weyl scalars
///   rho, p energy density and isotropic pressure
///   Pi     anisotropic stress scalar
///   Q      heat flux scalar
///   Omega  rotation scalar
///   xi     sheet twist
struct SliceState {
  Profile A, Theta, phi, Sigma, E, H, rho, p, Pi, Q, Omega, xi;
  double Lambda = 0.0;

  const Grid& grid() const { return A.grid(); }
  void validate() const;

  /// All scalars zero on the given grid.
  static SliceState zero(const Grid& grid);
};

}  // namespace sliceconf

#endif
