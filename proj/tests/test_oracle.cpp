#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sliceconf/oracle.hpp"

using namespace sliceconf;

namespace {

constexpr double kPi = 3.14159265358979323846;

WarpedMetric3 make_metric(const Grid& g, double (*bfun)(double),
                          double (*ffun)(double), int k) {
  std::vector<double> b(g.n()), f(g.n());
  for (int i = 0; i < g.n(); ++i) {
    b[i] = bfun(g.chi(i));
    f[i] = ffun(g.chi(i));
  }
  return WarpedMetric3(Profile::from_values(g, b), Profile::from_values(g, f),
                       k, k == 1);
}

double one(double) { return 1.0; }

}  // namespace

TEST_CASE("metric validation") {
  Grid g(0.1, 3.0, 64);
  std::vector<double> pos(64, 1.0), neg(64, 1.0);
  neg[10] = -0.5;
  CHECK_THROWS_AS(WarpedMetric3(Profile::from_values(g, pos),
                                Profile::from_values(g, neg), 1),
                  Error);
  CHECK_THROWS_AS(WarpedMetric3(Profile::from_values(g, pos),
                                Profile::from_values(g, pos), 2),
                  Error);
}

TEST_CASE("frame geometry of the unit sphere") {
  Grid g(0.05, kPi - 0.05, 2001);
  WarpedMetric3 m = make_metric(g, one, std::sin, 1);
  FrameGeometry fg = frame_geometry(m);
  CHECK(max_abs(fg.alpha - 2.0) <= 1e-6);
  CHECK(max_abs(fg.beta - 2.0) <= 1e-6);
  CHECK(max_abs(fg.scalar - 6.0) <= 1e-6);
  double phi_err = 0.0;
  for (int i = 0; i < g.n(); ++i)
    phi_err = std::max(phi_err,
                       std::abs(fg.phi_sheet[i] - 2.0 / std::tan(g.chi(i))));
  CHECK(phi_err <= 1e-8);
  CHECK(max_abs(fg.accel) <= 1e-10);
}

TEST_CASE("frame geometry of flat and hyperbolic space") {
  Grid g(0.05, 3.0, 2001);
  WarpedMetric3 flat = make_metric(g, one, [](double x) { return x; }, 1);
  FrameGeometry ff = frame_geometry(flat);
  CHECK(max_abs(ff.alpha) <= 1e-6);
  CHECK(max_abs(ff.beta) <= 1e-6);

  WarpedMetric3 hyp = make_metric(g, one, std::sinh, 1);
  FrameGeometry fh = frame_geometry(hyp);
  CHECK(max_abs(fh.alpha + 2.0) <= 1e-6);
  CHECK(max_abs(fh.beta + 2.0) <= 1e-6);
  CHECK(max_abs(fh.scalar + 6.0) <= 1e-6);
}

TEST_CASE("nontrivial radial lapse keeps the frame geodesic") {
  Grid g(0.3, 2.8, 1001);
  WarpedMetric3 m = make_metric(
      g, [](double x) { return 1.0 + 0.25 * std::cos(x); },
      [](double x) { return x + 0.1 * std::sin(x); }, 1);
  FrameGeometry fg = frame_geometry(m);
  CHECK(max_abs(fg.accel) <= 1e-8);
  // two computation paths agree at finite-difference accuracy
  CHECK(fg.alpha_path_diff <= 1e-5);
  CHECK(fg.beta_path_diff <= 1e-5);
}

TEST_CASE("Christoffel-assembly Ricci on the unit sphere") {
  Grid g(0.2, kPi - 0.2, 2001);
  WarpedMetric3 m = make_metric(g, one, std::sin, 1);
  RicciTable t = ricci_from_metric(m);
  CHECK(max_abs(t.ee - 2.0) <= 1e-6);
  CHECK(max_abs(t.NN - 2.0) <= 1e-6);
  CHECK(max_abs(t.scalar - 6.0) <= 3e-6);
  CHECK(t.off_diagonal_max <= 1e-12);
  CHECK(t.sheet_isotropy_max <= 1e-10);
}

TEST_CASE("Christoffel-assembly Ricci vanishes on flat space") {
  Grid g(0.5, 3.0, 1001);
  WarpedMetric3 m = make_metric(g, one, [](double x) { return x; }, 1);
  RicciTable t = ricci_from_metric(m);
  CHECK(max_abs(t.ee) <= 1e-7);
  CHECK(max_abs(t.NN) <= 1e-8);
}

TEST_CASE("two oracle paths agree and converge together") {
  auto diff = [](int n) {
    Grid g(0.2, kPi - 0.2, n);
    WarpedMetric3 m = make_metric(g, one, std::sin, 1);
    return frame_geometry(m).alpha_path_diff;
  };
  const double coarse = diff(1001), fine = diff(2001);
  CHECK(fine <= 1e-6);
  CHECK(coarse / fine > 10.0);
  CHECK(coarse / fine < 22.0);
}

TEST_CASE("grid refinement reduces the brute-force error at fourth order") {
  auto err = [](int n) {
    Grid g(0.2, kPi - 0.2, n);
    WarpedMetric3 m = make_metric(g, one, std::sin, 1);
    RicciTable t = ricci_from_metric(m);
    return max_abs(t.ee - 2.0);
  };
  const double ratio = err(1001) / err(2001);
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("Lie residual of the canonical sphere CKV") {
  Grid g(0.05, kPi - 0.05, 2001);
  WarpedMetric3 m = make_metric(g, one, std::sin, 1);
  std::vector<double> ga(g.n()), pc(g.n());
  for (int i = 0; i < g.n(); ++i) {
    ga[i] = std::sin(g.chi(i));
    pc[i] = std::cos(g.chi(i));
  }
  CHECK(lie_residual(m, Profile::from_values(g, ga),
                     Profile::from_values(g, pc)) <= 1e-6);
}

TEST_CASE("Lie residual of the flat dilation") {
  Grid g(0.05, 3.0, 1001);
  WarpedMetric3 m = make_metric(g, one, [](double x) { return x; }, 1);
  std::vector<double> ga(g.n());
  for (int i = 0; i < g.n(); ++i) ga[i] = g.chi(i);
  CHECK(lie_residual(m, Profile::from_values(g, ga),
                     Profile::constant(g, 1.0)) <= 1e-10);
}

TEST_CASE("zero vector is conformal only for a vanishing factor") {
  Grid g(0.3, 2.8, 501);
  WarpedMetric3 m = make_metric(g, one, std::sin, 1);
  Profile zero = Profile::constant(g, 0.0);
  Profile factor = Profile::constant(g, 0.7);
  // residual reduces to 2 max|phi_conf g| / max|g| = 2 |phi_conf|
  CHECK(lie_residual(m, zero, factor) == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(lie_residual(m, zero, zero) == 0.0);
}

TEST_CASE("Lie residual converges at fourth order") {
  auto run = [](int n) {
    Grid g(0.05, kPi - 0.05, n);
    WarpedMetric3 m = make_metric(g, one, std::sin, 1);
    std::vector<double> ga(g.n()), pc(g.n());
    for (int i = 0; i < g.n(); ++i) {
      ga[i] = std::sin(g.chi(i));
      pc[i] = std::cos(g.chi(i));
    }
    return lie_residual(m, Profile::from_values(g, ga),
                        Profile::from_values(g, pc));
  };
  const double ratio = run(201) / run(401);
  CHECK(ratio > 11.0);
  CHECK(ratio < 22.0);
}

TEST_CASE("conformal recompute: identity and homothety") {
  Grid g(0.2, kPi - 0.2, 1001);
  WarpedMetric3 m = make_metric(g, one, std::sin, 1);
  ConformalFactor id = ConformalFactor::make(Profile::constant(g, 0.0));
  ConformalRecompute same = conformal_recompute(m, id);
  FrameGeometry fg = frame_geometry(m);
  CHECK(max_abs(same.scalar - fg.scalar) == 0.0);

  const double c = 0.4;
  ConformalFactor hom = ConformalFactor::make(Profile::constant(g, c));
  ConformalRecompute scaled = conformal_recompute(m, hom);
  CHECK(max_abs(scaled.scalar - std::exp(-2.0 * c) * 6.0) <= 1e-6);
}

TEST_CASE("fiducial sheet coordinate does not leak into the results") {
  // k = 0 and k = -1 sheets exercise the analytic Dbar factors; the
  // orthonormal output must still be diagonal and isotropic.
  Grid g(0.4, 2.9, 801);
  for (int k : {0, -1}) {
    WarpedMetric3 m = make_metric(
        g, one, [](double x) { return 1.0 + 0.3 * x * x; }, k);
    RicciTable t = ricci_from_metric(m);
    CHECK(t.off_diagonal_max <= 1e-10);
    CHECK(t.sheet_isotropy_max <= 1e-8);
    FrameGeometry fg = frame_geometry(m);
    CHECK(fg.alpha_path_diff <= 1e-6);
    CHECK(fg.beta_path_diff <= 1e-6);
  }
}
