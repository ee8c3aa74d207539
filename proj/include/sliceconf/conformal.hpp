#ifndef SLICECONF_CONFORMAL_HPP
#define SLICECONF_CONFORMAL_HPP

#include <string>
#include <vector>

#include "sliceconf/curvature.hpp"
#include "sliceconf/metric.hpp"

namespace sliceconf {

/// Conformal factor with cached radial derivatives up to third order and
/// nu = exp(-phi).
class ConformalFactor {
 public:
  /// Builds the derivative cache by repeated application of hat().
  static ConformalFactor make(const Profile& phi, int fd_order = 4);

  /// Injects explicit derivative profiles.  Used for synthetic premise
  /// checks and for factors expressed in a transformed frame, where the
  /// derivatives are not grid derivatives of phi.  Consistency between phi
  /// and the injected profiles is not enforced.
  static ConformalFactor with_derivatives(Profile phi, Profile hat1,
                                          Profile hat2, Profile hat3);

  const Profile& phi() const { return phi_; }
  const Profile& hat1() const { return hat1_; }
  const Profile& hat2() const { return hat2_; }
  const Profile& hat3() const { return hat3_; }
  const Profile& nu() const { return nu_; }
  const Grid& grid() const { return phi_.grid(); }

 private:
  ConformalFactor(Profile phi, Profile h1, Profile h2, Profile h3);
  Profile phi_, hat1_, hat2_, hat3_, nu_;
};

enum class TransformKind { isometry, homothety, proper };

std::string to_string(TransformKind k);

/// isometry when phi vanishes, homothety when it is a nonzero constant,
/// proper otherwise; all at tolerance tol.
TransformKind classify(const ConformalFactor& cf, double tol);

/// Slice Laplacian of the factor under the axial reduction:
/// hat2 + phi_sheet * hat1.
Profile laplacian(const ConformalFactor& cf, const Profile& phi_sheet);

/// The two published forms of the transformed-scalar-curvature law.  They
/// differ by the sheet-coupling term 4 phi_sheet hat1; the finite-difference
/// oracle adjudicates which one matches a direct recomputation.
enum class ScalarLaw { uncoupled, sheet_coupled };

/// Scalar curvature of the rescaled metric:
///   uncoupled:      e^{-2phi} [R' - 2 hat1^2 - 4 hat2]
///   sheet_coupled:  e^{-2phi} [R' - 4 hat2 - 4 phi_sheet hat1 - 2 hat1^2]
Profile transformed_scalar(const ConformalFactor& cf,
                           const Profile& phi_sheet, const Profile& Rp,
                           ScalarLaw law);

/// Frame components of the transformed Ricci tensor, reported in the
/// original orthonormal frame.  The uncoupled law reads
///   NN = -(hat2 + hat1^2 + phi_sheet hat1 / 2 - alpha)
///   ee = -(2 hat2 - beta)
/// and the sheet-coupled law
///   ee = alpha - 2 hat2 - phi_sheet hat1
///   NN = beta - hat2 - hat1^2 - (3/2) phi_sheet hat1.
struct TransformedRicci {
  Profile ee;
  Profile NN;
};

TransformedRicci transformed_ricci(const ConformalFactor& cf,
                                   const Profile& phi_sheet,
                                   const RicciData& r,
                                   ScalarLaw law = ScalarLaw::uncoupled);

/// Trace-free part of the Ricci tensor in frame components:
/// g_ee = (2/3)(alpha - beta), g_NN = -(1/3)(alpha - beta).
struct GData {
  Profile g_ee;
  Profile g_NN;
};

GData g_tensor(const RicciData& r);

/// Integrand of the sphere criterion: (2/3)(alpha - beta) hat1^2.
Profile criterion_scalar(const RicciData& r, const ConformalFactor& cf);

/// Same scalar computed through nu and its gradient -nu hat1; equals
/// criterion_scalar to rounding.
Profile criterion_scalar_nu_form(const RicciData& r,
                                 const ConformalFactor& cf);

struct CriterionIntegral {
  double value;
  bool compact_domain;  // false (with warning) when the sheet is not k = 1
  std::string warning;
};

/// Quadrature of criterion_scalar against the volume density B F^2 A2 with
/// sheet area A2 = 4 pi for k = 1.  The vanishing of the integral is the
/// sphere-isometry criterion; non-negativity is the equal-curvature variant.
CriterionIntegral criterion_integral(const RicciData& r,
                                     const ConformalFactor& cf,
                                     const WarpedMetric3& metric);

/// Pointwise inequality gate.  margin >= 0 (or > 0 when strict) means the
/// gate holds at a point; worst_margin is the minimum over applicable
/// samples and holds reports whether the gate holds everywhere.
struct GateReport {
  std::string name;
  double worst_margin;
  bool holds;
  bool strict;
  int inapplicable;  // samples excluded (division by a vanishing slope)
};

/// Evaluates the inequality gates on the factor and, when profiles are
/// supplied, the non-negativity and original-equality gates on the
/// transformed scalar curvature.
std::vector<GateReport> gate_checks(const ConformalFactor& cf,
                                    const Profile& Rp, const Profile& Rtilde,
                                    double tol_eq = 1e-6);

/// Scalar curvature forced on the slice by demanding that the transformed
/// scalar curvature be constant: -2 hat1^{-1} (hat3 - hat1 hat2 - hat1^3).
/// Errors where hat1 vanishes (the transformation degenerates to a
/// homothety branch there).
Profile required_scalar_curvature(const ConformalFactor& cf);

/// Diagnostics for the constant-transformed-curvature analysis:
///   scalar_gradient   the closed-form expression for hat(R')
///   reduced_transformed  R~' under vanishing third derivatives,
///                        -2 e^{-2phi} hat2
///   equal_curvature_balance  hat2 + hat1^2 / (1 + e^{-2phi})
struct ConstantTransformedDiagnostics {
  Profile scalar_gradient;
  Profile reduced_transformed;
  Profile equal_curvature_balance;
};

ConstantTransformedDiagnostics constant_transformed_diagnostics(
    const ConformalFactor& cf, const Profile& Rp);

/// Sphere-isometry theorem premise sets.
///   einstein_sphere             compact + Einstein + proper + R~' >= 0
///   equal_curvature_sphere      compact + nonvanishing sheet expansion +
///                               proper + R~' >= 0 + R~' = R' + phi < 0 +
///                               curvature positivity gate
///   constant_transformed_sphere compact + nonvanishing sheet expansion +
///                               proper + R~' constant + curvature
///                               positivity + vanishing third derivative +
///                               concavity/balance/positivity trio
enum class TheoremKind {
  einstein_sphere,
  equal_curvature_sphere,
  constant_transformed_sphere
};

std::string to_string(TheoremKind k);

struct TheoremInputs {
  const RicciData* ricci = nullptr;
  const ConformalFactor* factor = nullptr;
  const Profile* phi_sheet = nullptr;
  const Profile* rtilde = nullptr;
  bool compact = false;
  double tol = 1e-8;
  double tol_eq = 1e-6;
};

struct ConditionVerdict {
  std::string name;
  bool holds;
  double value;  // margin or residual backing the verdict
  // Non-gating verdicts are reported but do not enter criteria_met.  The
  // Einstein theorem gates only on compactness, properness and the
  // Einstein test; the sphere conclusion there does not use the sign of
  // the transformed curvature, which is still reported.
  bool gating = true;
};

struct TheoremReport {
  TheoremKind kind;
  std::vector<ConditionVerdict> conditions;
  bool criteria_met;
};

TheoremReport theorem_premises(TheoremKind kind, const TheoremInputs& in);

}  // namespace sliceconf

#endif
