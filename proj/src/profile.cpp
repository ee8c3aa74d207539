#include "sliceconf/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sliceconf {

namespace {

void require_finite(const std::vector<double>& v, const std::string& who) {
  for (double x : v)
    if (!std::isfinite(x))
      fail(ErrorKind::invalid_profile, who + ": non-finite sample");
}

void require_order(int fd_order) {
  if (fd_order != 2 && fd_order != 4)
    fail(ErrorKind::usage, "fd_order must be 2 or 4");
}

}  // namespace

Profile::Profile(Grid grid, std::vector<double> values,
                 std::optional<Analytic> analytic)
    : grid_(grid), values_(std::move(values)), analytic_(std::move(analytic)) {
  if (static_cast<int>(values_.size()) != grid_.n())
    fail(ErrorKind::invalid_profile, "profile length does not match grid");
  require_finite(values_, "profile");
}

Profile Profile::from_values(const Grid& grid, std::vector<double> values) {
  return Profile(grid, std::move(values), std::nullopt);
}

Profile Profile::from_analytic(const Grid& grid,
                               std::function<double(double, int)> eval,
                               int max_order) {
  std::vector<double> values(grid.n());
  for (int i = 0; i < grid.n(); ++i) values[i] = eval(grid.chi(i), 0);
  return Profile(grid, std::move(values),
                 Analytic{std::move(eval), max_order});
}

Profile Profile::constant(const Grid& grid, double value) {
  return from_analytic(
      grid, [value](double, int k) { return k == 0 ? value : 0.0; }, 3);
}

double Profile::interpolate(double chi) const {
  const int n = grid_.n();
  const double h = grid_.spacing();
  if (!grid_.contains(chi))
    fail(ErrorKind::domain, "interpolate: chi outside grid range");
  int cell = static_cast<int>(std::floor((chi - grid_.chi_min()) / h));
  cell = std::clamp(cell, 0, n - 2);
  int start = std::clamp(cell - 2, 0, n - 5);
  double result = 0.0;
  for (int j = 0; j < 5; ++j) {
    double lj = 1.0;
    const double xj = grid_.chi(start + j);
    for (int m = 0; m < 5; ++m) {
      if (m == j) continue;
      lj *= (chi - grid_.chi(start + m)) / (xj - grid_.chi(start + m));
    }
    result += lj * values_[start + j];
  }
  return result;
}

Profile map(const Profile& p, const std::function<double(double)>& f) {
  std::vector<double> out(p.size());
  for (int i = 0; i < p.size(); ++i) out[i] = f(p[i]);
  return Profile::from_values(p.grid(), std::move(out));
}

Profile zip(const Profile& a, const Profile& b,
            const std::function<double(double, double)>& f) {
  require_same_grid(a.grid(), b.grid(), "zip");
  std::vector<double> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
  return Profile::from_values(a.grid(), std::move(out));
}

Profile operator+(const Profile& a, const Profile& b) {
  return zip(a, b, [](double x, double y) { return x + y; });
}
Profile operator-(const Profile& a, const Profile& b) {
  return zip(a, b, [](double x, double y) { return x - y; });
}
Profile operator*(const Profile& a, const Profile& b) {
  return zip(a, b, [](double x, double y) { return x * y; });
}
Profile operator/(const Profile& a, const Profile& b) {
  return zip(a, b, [](double x, double y) { return x / y; });
}
Profile operator+(const Profile& a, double c) {
  return map(a, [c](double x) { return x + c; });
}
Profile operator-(const Profile& a, double c) {
  return map(a, [c](double x) { return x - c; });
}
Profile operator*(double c, const Profile& a) {
  return map(a, [c](double x) { return c * x; });
}
Profile operator*(const Profile& a, double c) { return c * a; }
Profile operator-(const Profile& a) {
  return map(a, [](double x) { return -x; });
}

double max_abs(const Profile& p) {
  double m = 0.0;
  for (double x : p.values()) m = std::max(m, std::abs(x));
  return m;
}

double min_value(const Profile& p) {
  return *std::min_element(p.values().begin(), p.values().end());
}

double max_value(const Profile& p) {
  return *std::max_element(p.values().begin(), p.values().end());
}

double mean(const Profile& p) {
  double s = 0.0;
  for (double x : p.values()) s += x;
  return s / p.size();
}

namespace {

// First-derivative stencils.  Interior rows are centered; the order-4
// interval boundary rows are the standard fully and semi one-sided
// five-point formulas.
double fd_at(const std::vector<double>& v, int i, int n, double h,
             int fd_order, Topology topology) {
  auto wrap = [n](int j) { return ((j % n) + n) % n; };
  if (topology == Topology::periodic) {
    if (fd_order == 2) return (v[wrap(i + 1)] - v[wrap(i - 1)]) / (2 * h);
    return (v[wrap(i - 2)] - 8 * v[wrap(i - 1)] + 8 * v[wrap(i + 1)] -
            v[wrap(i + 2)]) /
           (12 * h);
  }
  if (fd_order == 2) {
    if (i == 0)
      return (-11 * v[0] + 18 * v[1] - 9 * v[2] + 2 * v[3]) / (6 * h);
    if (i == n - 1)
      return (11 * v[n - 1] - 18 * v[n - 2] + 9 * v[n - 3] - 2 * v[n - 4]) /
             (6 * h);
    return (v[i + 1] - v[i - 1]) / (2 * h);
  }
  if (i >= 2 && i <= n - 3)
    return (v[i - 2] - 8 * v[i - 1] + 8 * v[i + 1] - v[i + 2]) / (12 * h);
  // Boundary closures one order higher than the interior, so the global
  // error stays dominated by the centered rows.
  if (i == 0)
    return (-137 * v[0] + 300 * v[1] - 300 * v[2] + 200 * v[3] - 75 * v[4] +
            12 * v[5]) /
           (60 * h);
  if (i == 1)
    return (-12 * v[0] - 65 * v[1] + 120 * v[2] - 60 * v[3] + 20 * v[4] -
            3 * v[5]) /
           (60 * h);
  if (i == n - 2)
    return (12 * v[n - 1] + 65 * v[n - 2] - 120 * v[n - 3] + 60 * v[n - 4] -
            20 * v[n - 5] + 3 * v[n - 6]) /
           (60 * h);
  return (137 * v[n - 1] - 300 * v[n - 2] + 300 * v[n - 3] - 200 * v[n - 4] +
          75 * v[n - 5] - 12 * v[n - 6]) /
         (60 * h);
}

}  // namespace

Profile hat_numeric(const Profile& p, int fd_order) {
  require_order(fd_order);
  const Grid& g = p.grid();
  const int n = g.n();
  const double h = g.spacing();
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = fd_at(p.values(), i, n, h, fd_order, g.topology());
  return Profile::from_values(g, std::move(out));
}

Profile hat(const Profile& p, int fd_order) {
  require_order(fd_order);
  if (p.has_analytic(1)) {
    const Analytic& a = p.analytic();
    auto eval = a.eval;
    return Profile::from_analytic(
        p.grid(), [eval](double chi, int k) { return eval(chi, k + 1); },
        a.max_order - 1);
  }
  return hat_numeric(p, fd_order);
}

namespace {

// Cumulative integral from sample 0.  Each cell [x_i, x_i+1] is integrated
// with the quartic interpolant through its five-point window, so the
// accumulated error is smooth in chi (a Simpson pair chain leaves an
// even/odd sawtooth that boundary difference stencils amplify by 1/h).
// Weights are exact integrals of the Lagrange basis on nodes {0..4} over
// [a, a+1], where a is the cell position inside the window.
std::vector<double> cumulative(const std::vector<double>& f, double h) {
  static const double w[4][5] = {
      {251.0 / 720, 646.0 / 720, -264.0 / 720, 106.0 / 720, -19.0 / 720},
      {-19.0 / 720, 346.0 / 720, 456.0 / 720, -74.0 / 720, 11.0 / 720},
      {11.0 / 720, -74.0 / 720, 456.0 / 720, 346.0 / 720, -19.0 / 720},
      {-19.0 / 720, 106.0 / 720, -264.0 / 720, 646.0 / 720, 251.0 / 720}};
  const int n = static_cast<int>(f.size());
  std::vector<double> c(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    const int start = std::clamp(i - 2, 0, n - 5);
    const int a = i - start;
    double cell = 0.0;
    for (int j = 0; j < 5; ++j) cell += w[a][j] * f[start + j];
    c[i + 1] = c[i] + h * cell;
  }
  return c;
}

}  // namespace

Profile integrate_from(const Profile& p, double chi0) {
  const Grid& g = p.grid();
  if (chi0 < g.chi_min() || chi0 > g.chi_max())
    fail(ErrorKind::domain, "integrate_from: chi0 outside grid range");
  std::vector<double> c = cumulative(p.values(), g.spacing());
  Profile cum = Profile::from_values(g, std::move(c));
  const double offset = cum.interpolate(std::min(chi0, g.chi(g.n() - 1)));
  return cum - offset;
}

double definite_integral(const Profile& p) {
  std::vector<double> c = cumulative(p.values(), p.grid().spacing());
  return c.back();
}

double integrate_period(const Profile& p) {
  const Grid& g = p.grid();
  if (g.topology() != Topology::periodic)
    fail(ErrorKind::usage, "integrate_period requires a periodic grid");
  const int n = g.n();
  const double h = g.spacing();
  const std::vector<double>& f = p.values();
  if (n % 2 != 0) {
    double s = 0.0;
    for (double x : f) s += x;
    return h * s;
  }
  double s = 0.0;
  for (int i = 0; i < n; i += 2)
    s += f[i] + 4 * f[i + 1] + f[(i + 2) % n];
  return h / 3.0 * s;
}

ConstancyResult is_constant(const Profile& p, double tol) {
  if (!(tol > 0)) fail(ErrorKind::usage, "is_constant: tol must be positive");
  const double m = mean(p);
  double dev = 0.0;
  for (double x : p.values()) dev = std::max(dev, std::abs(x - m));
  dev /= 1.0 + std::abs(m);
  return {dev <= tol, dev};
}

void write_csv(const Profile& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::usage, "write_csv: cannot open " + path);
  out << "chi,value\n";
  char buf[64];
  for (int i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.grid().chi(i), p[i]);
    out << buf;
  }
}

Profile read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::usage, "read_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("chi,value", 0) != 0)
    fail(ErrorKind::usage, "read_csv: missing chi,value header in " + path);
  std::vector<double> chi, val;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b))
      fail(ErrorKind::usage, "read_csv: malformed row in " + path);
    chi.push_back(std::stod(a));
    val.push_back(std::stod(b));
  }
  const int n = static_cast<int>(chi.size());
  if (n < 16) fail(ErrorKind::usage, "read_csv: fewer than 16 samples");
  const double h = (chi.back() - chi.front()) / (n - 1);
  for (int i = 1; i < n; ++i)
    if (std::abs(chi[i] - chi[i - 1] - h) > 1e-9 * (1.0 + std::abs(h)))
      fail(ErrorKind::usage, "read_csv: non-uniform chi column");
  return Profile::from_values(Grid(chi.front(), chi.back(), n),
                              std::move(val));
}

}  // namespace sliceconf
