#ifndef SLICECONF_PROFILE_HPP
#define SLICECONF_PROFILE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sliceconf/grid.hpp"

namespace sliceconf {

/// Closed-form evaluator attached to a profile.  eval(chi, k) returns the
/// k-th derivative at chi; derivatives are available for k <= max_order.
struct Analytic {
  std::function<double(double, int)> eval;
  int max_order = 3;
};

/// A scalar field sampled along chi.  Immutable after construction.
///
/// Profiles built from a closed form carry the evaluator so that
/// differentiation can bypass finite differences; all arithmetic on
/// profiles drops the evaluator and works on sampled values.
class Profile {
 public:
  static Profile from_values(const Grid& grid, std::vector<double> values);
  static Profile from_analytic(const Grid& grid,
                               std::function<double(double, int)> eval,
                               int max_order = 3);
  static Profile constant(const Grid& grid, double value);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  int size() const { return static_cast<int>(values_.size()); }

  bool has_analytic(int order = 0) const {
    return analytic_.has_value() && analytic_->max_order >= order;
  }
  const Analytic& analytic() const { return *analytic_; }

  /// Quartic Lagrange interpolation through the five nearest samples.
  double interpolate(double chi) const;

 private:
  Profile(Grid grid, std::vector<double> values,
          std::optional<Analytic> analytic);

  Grid grid_;
  std::vector<double> values_;
  std::optional<Analytic> analytic_;
};

// ---- pointwise construction helpers -----------------------------------

Profile map(const Profile& p, const std::function<double(double)>& f);
Profile zip(const Profile& a, const Profile& b,
            const std::function<double(double, double)>& f);

Profile operator+(const Profile& a, const Profile& b);
Profile operator-(const Profile& a, const Profile& b);
Profile operator*(const Profile& a, const Profile& b);
Profile operator/(const Profile& a, const Profile& b);
Profile operator+(const Profile& a, double c);
Profile operator-(const Profile& a, double c);
Profile operator*(double c, const Profile& a);
Profile operator*(const Profile& a, double c);
Profile operator-(const Profile& a);

double max_abs(const Profile& p);
double min_value(const Profile& p);
double max_value(const Profile& p);
double mean(const Profile& p);

// ---- calculus along chi ------------------------------------------------

/// Derivative along chi.  Uses the attached closed form when available,
/// otherwise centered finite differences of the given order (one-sided at
/// interval ends, wrapped on periodic grids).  order must be 2 or 4.
Profile hat(const Profile& p, int fd_order = 4);

/// Finite-difference derivative regardless of any attached closed form.
/// The oracle uses this path so its answers stay independent of the inputs'
/// analytic structure.
Profile hat_numeric(const Profile& p, int fd_order = 4);

/// Cumulative integral from chi0 (which must lie inside the grid range,
/// not necessarily on a sample).  Composite Simpson on sample pairs with a
/// cubic end-cell rule for odd offsets; fourth-order accurate throughout.
Profile integrate_from(const Profile& p, double chi0);

/// Definite integral over the whole grid (interval grids).
double definite_integral(const Profile& p);

/// Integral over one full period of a periodic profile.  Simpson pairs for
/// even sample counts, trapezoid fallback for odd counts.
double integrate_period(const Profile& p);

struct ConstancyResult {
  bool constant;
  double deviation;  // max_i |p_i - mean| / (1 + |mean|)
};

ConstancyResult is_constant(const Profile& p, double tol);

// ---- CSV ----------------------------------------------------------------

/// Writes `chi,value` rows at full double precision (17 significant digits).
void write_csv(const Profile& p, const std::string& path);

/// Reads a `chi,value` CSV written by write_csv; infers a uniform interval
/// grid from the chi column.
Profile read_csv(const std::string& path);

}  // namespace sliceconf

#endif
