#ifndef SLICECONF_GRID_HPP
#define SLICECONF_GRID_HPP

#include <string>

#include "sliceconf/errors.hpp"

namespace sliceconf {

enum class Topology { interval, periodic };

/// Uniform 1D grid in the radial coordinate chi.
///
/// For an interval grid both endpoints are sample points and the spacing is
/// (chi_max - chi_min)/(n - 1).  For a periodic grid chi_max is identified
/// with chi_min, samples cover [chi_min, chi_max) and the spacing is
/// (chi_max - chi_min)/n.
class Grid {
 public:
  Grid(double chi_min, double chi_max, int n,
       Topology topology = Topology::interval)
      : chi_min_(chi_min), chi_max_(chi_max), n_(n), topology_(topology) {
    if (!(chi_min < chi_max))
      fail(ErrorKind::domain, "grid requires chi_min < chi_max");
    if (n < 16) fail(ErrorKind::domain, "grid requires n >= 16 samples");
  }

  double chi_min() const { return chi_min_; }
  double chi_max() const { return chi_max_; }
  int n() const { return n_; }
  Topology topology() const { return topology_; }

  double spacing() const {
    const int cells = topology_ == Topology::interval ? n_ - 1 : n_;
    return (chi_max_ - chi_min_) / cells;
  }

  double chi(int i) const { return chi_min_ + i * spacing(); }

  bool contains(double chi) const {
    return chi >= chi_min_ && chi <= chi_max_;
  }

  bool operator==(const Grid& o) const {
    return chi_min_ == o.chi_min_ && chi_max_ == o.chi_max_ && n_ == o.n_ &&
           topology_ == o.topology_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

 private:
  double chi_min_;
  double chi_max_;
  int n_;
  Topology topology_;
};

inline void require_same_grid(const Grid& a, const Grid& b,
                              const std::string& who) {
  if (a != b) fail(ErrorKind::grid_mismatch, who + ": profiles on different grids");
}

}  // namespace sliceconf

#endif
