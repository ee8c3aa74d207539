#include "sliceconf/oracle.hpp"

#include <array>
#include <cmath>

namespace sliceconf {

namespace {

// Fiducial sheet coordinate at which the 3D assembly is evaluated; the
// orthonormal results must not depend on it.
constexpr double kFiducialY = 1.0;

using Cube = std::array<std::array<std::array<double, 3>, 3>, 3>;

}  // namespace

RicciTable ricci_from_metric(const WarpedMetric3& m, int fd_order) {
  const Grid& g = m.grid();
  const int n = g.n();
  const double y0 = kFiducialY;
  const double db = m.dbar(y0);
  const double dbp = m.dbar_prime(y0);
  const double dbpp = -m.k() * db;  // Dbar'' = -k Dbar for all three k

  // Diagonal metric components and their chi-derivatives as profiles.
  Profile g0 = m.B() * m.B();
  Profile g1 = m.F() * m.F();
  Profile dg0 = hat_numeric(g0, fd_order);
  Profile dg1 = hat_numeric(g1, fd_order);

  // Christoffel cube per sample, flattened for a second chi-derivative.
  std::vector<std::array<double, 27>> gamma(n);
  auto flat = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };

  std::vector<Cube> dgamma_dy(n);

  for (int i = 0; i < n; ++i) {
    const double gd[3] = {g0[i], g1[i], g1[i] * db * db};
    const double gi[3] = {1.0 / gd[0], 1.0 / gd[1], 1.0 / gd[2]};
    // dg[b][a] = d_b g_aa; only chi- and y-derivatives are nonzero.
    double dg[3][3] = {{dg0[i], dg1[i], dg1[i] * db * db},
                       {0.0, 0.0, g1[i] * 2.0 * db * dbp},
                       {0.0, 0.0, 0.0}};
    // ddy[b][a] = d_y (dg[b][a]).
    double ddy[3][3] = {{0.0, 0.0, dg1[i] * 2.0 * db * dbp},
                        {0.0, 0.0, g1[i] * 2.0 * (dbp * dbp + db * dbpp)},
                        {0.0, 0.0, 0.0}};
    const double dgi_dy[3] = {0.0, 0.0, -gi[2] * gi[2] * dg[1][2]};

    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          const double paren = (a == c ? dg[b][a] : 0.0) +
                               (a == b ? dg[c][a] : 0.0) -
                               (b == c ? dg[a][b] : 0.0);
          const double paren_dy = (a == c ? ddy[b][a] : 0.0) +
                                  (a == b ? ddy[c][a] : 0.0) -
                                  (b == c ? ddy[a][b] : 0.0);
          gamma[i][flat(a, b, c)] = 0.5 * gi[a] * paren;
          dgamma_dy[i][a][b][c] =
              0.5 * dgi_dy[a] * paren + 0.5 * gi[a] * paren_dy;
        }
  }

  // chi-derivative of every Christoffel profile.
  std::vector<std::array<double, 27>> dgamma_dx(n);
  {
    std::vector<double> column(n);
    for (int idx = 0; idx < 27; ++idx) {
      for (int i = 0; i < n; ++i) column[i] = gamma[i][idx];
      Profile d = hat_numeric(Profile::from_values(g, column), fd_order);
      for (int i = 0; i < n; ++i) dgamma_dx[i][idx] = d[i];
    }
  }

  std::vector<double> ee(n), nny(n), nnz(n), scal(n);
  double offdiag = 0.0, isotropy = 0.0;

  for (int i = 0; i < n; ++i) {
    const double gd[3] = {g0[i], g1[i], g1[i] * db * db};
    auto G = [&](int a, int b, int c) { return gamma[i][flat(a, b, c)]; };
    auto dG = [&](int s, int a, int b, int c) {
      if (s == 0) return dgamma_dx[i][flat(a, b, c)];
      if (s == 1) return dgamma_dy[i][a][b][c];
      return 0.0;
    };

    double ricci[3][3];
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) {
        double r = 0.0;
        for (int s = 0; s < 3; ++s) {
          r += dG(s, s, mu, nu) - dG(nu, s, mu, s);
          for (int l = 0; l < 3; ++l)
            r += G(s, s, l) * G(l, mu, nu) - G(s, nu, l) * G(l, mu, s);
        }
        ricci[mu][nu] = r;
      }

    ee[i] = ricci[0][0] / gd[0];
    nny[i] = ricci[1][1] / gd[1];
    nnz[i] = ricci[2][2] / gd[2];
    scal[i] = ee[i] + nny[i] + nnz[i];
    isotropy = std::max(isotropy, std::abs(nny[i] - nnz[i]));
    offdiag = std::max(
        {offdiag, std::abs(ricci[0][1]) / std::sqrt(gd[0] * gd[1]),
         std::abs(ricci[0][2]) / std::sqrt(gd[0] * gd[2]),
         std::abs(ricci[1][2]) / std::sqrt(gd[1] * gd[2])});
  }

  std::vector<double> nn(n);
  for (int i = 0; i < n; ++i) nn[i] = 0.5 * (nny[i] + nnz[i]);
  return {Profile::from_values(g, std::move(ee)),
          Profile::from_values(g, std::move(nn)),
          Profile::from_values(g, std::move(scal)), offdiag, isotropy};
}

FrameGeometry frame_geometry(const WarpedMetric3& m, int fd_order) {
  const Profile& B = m.B();
  const Profile& F = m.F();
  auto hatm = [&](const Profile& p) { return hat_numeric(p, fd_order) / B; };

  Profile hatF = hatm(F);
  Profile hat2F = hatm(hatF);
  Profile phi = 2.0 * hatF / F;
  Profile alpha = -2.0 * hat2F / F;
  Profile beta = -1.0 * hat2F / F - hatF * hatF / (F * F) +
                 map(F, [k = m.k()](double f) { return k / (f * f); });
  Profile scalar = alpha + 2.0 * beta;

  // Radial acceleration of the unit frame vector; identically zero for
  // this metric class, computed here by finite differences as a check.
  Profile invB = map(B, [](double b) { return 1.0 / b; });
  Profile accel =
      (hat_numeric(invB, fd_order) + hat_numeric(B, fd_order) / (B * B)) / B;

  RicciTable table = ricci_from_metric(m, fd_order);
  FrameGeometry out{std::move(alpha),  std::move(beta), std::move(scalar),
                    std::move(phi),    std::move(accel), 0.0, 0.0};
  out.alpha_path_diff = max_abs(out.alpha - table.ee);
  out.beta_path_diff = max_abs(out.beta - table.NN);
  return out;
}

double lie_residual(const WarpedMetric3& m, const Profile& gamma,
                    const Profile& phi_conf, int fd_order) {
  require_same_grid(m.grid(), gamma.grid(), "lie_residual");
  require_same_grid(m.grid(), phi_conf.grid(), "lie_residual");
  const double db2 = m.dbar(kFiducialY) * m.dbar(kFiducialY);

  Profile g0 = m.B() * m.B();
  Profile g1 = m.F() * m.F();
  Profile v = gamma / m.B();
  Profile dv = hat_numeric(v, fd_order);
  Profile dg0 = hat_numeric(g0, fd_order);
  Profile dg1 = hat_numeric(g1, fd_order);

  double worst = 0.0, gmax = 0.0;
  for (int i = 0; i < gamma.size(); ++i) {
    const double rxx =
        v[i] * dg0[i] + 2.0 * g0[i] * dv[i] - 2.0 * phi_conf[i] * g0[i];
    const double ryy = v[i] * dg1[i] - 2.0 * phi_conf[i] * g1[i];
    const double rzz = db2 * ryy;
    worst = std::max({worst, std::abs(rxx), std::abs(ryy), std::abs(rzz)});
    gmax = std::max({gmax, std::abs(g0[i]), std::abs(g1[i]),
                     std::abs(g1[i] * db2)});
  }
  return worst / gmax;
}

ConformalRecompute conformal_recompute(const WarpedMetric3& m,
                                       const ConformalFactor& cf,
                                       int fd_order) {
  require_same_grid(m.grid(), cf.grid(), "conformal_recompute");
  Profile scale = map(cf.phi(), [](double p) { return std::exp(p); });
  WarpedMetric3 rescaled(m.B() * scale, m.F() * scale, m.k(), m.compact());
  FrameGeometry fg = frame_geometry(rescaled, fd_order);
  return {std::move(fg.scalar), std::move(fg.alpha), std::move(fg.beta)};
}

}  // namespace sliceconf
