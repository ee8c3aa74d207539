#include "sliceconf/metric.hpp"

#include <cmath>

namespace sliceconf {

double WarpedMetric3::dbar(double y) const {
  switch (k_) {
    case 1: return std::sin(y);
    case 0: return y;
    default: return std::sinh(y);
  }
}

double WarpedMetric3::dbar_prime(double y) const {
  switch (k_) {
    case 1: return std::cos(y);
    case 0: return 1.0;
    default: return std::cosh(y);
  }
}

}  // namespace sliceconf
