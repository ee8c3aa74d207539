#ifndef SLICECONF_METRIC_HPP
#define SLICECONF_METRIC_HPP

#include "sliceconf/profile.hpp"

namespace sliceconf {

/// Explicit warped-product 3-metric
///   B(chi)^2 dchi^2 + F(chi)^2 (dy^2 + Dbar(y,k)^2 dz^2)
/// with Dbar = sin y, y, sinh y for k = 1, 0, -1.  Ground truth for the
/// finite-difference oracle.
class WarpedMetric3 {
 public:
  WarpedMetric3(Profile B, Profile F, int k, bool compact = false)
      : B_(std::move(B)), F_(std::move(F)), k_(k), compact_(compact) {
    require_same_grid(B_.grid(), F_.grid(), "WarpedMetric3");
    if (k_ != -1 && k_ != 0 && k_ != 1)
      fail(ErrorKind::domain, "WarpedMetric3: k must be -1, 0 or 1");
    if (min_value(B_) <= 0.0 || min_value(F_) <= 0.0)
      fail(ErrorKind::invalid_profile,
           "WarpedMetric3: B and F must be positive everywhere");
  }

  const Profile& B() const { return B_; }
  const Profile& F() const { return F_; }
  int k() const { return k_; }
  bool compact() const { return compact_; }
  const Grid& grid() const { return B_.grid(); }

  double dbar(double y) const;
  double dbar_prime(double y) const;

 private:
  Profile B_;
  Profile F_;
  int k_;
  bool compact_;
};

}  // namespace sliceconf

#endif
