#pragma once

// The scalar functions that fix the medium's linear response: the vacuum
// polarization C* and the medium functions A*, B* (and D*), in full
// kinematics, in the long-wavelength expansion, in the static long-wavelength
// limit, and the truncated Drude forms at T = 0.

#include <optional>

#include "relplasma/core.hpp"
#include "relplasma/quadrature.hpp"

namespace relplasma {

/// Renormalized vacuum polarization C*(q_M^2) below the pair threshold.
///
/// For 0 < qm2 < 4 uses h arccot(h) with h = sqrt(4/qm2 - 1); for qm2 < 0 the
/// real continuation k artanh(1/k), k = sqrt(1 - 4/qm2). Near qm2 = 0 the
/// power series of the closed form is used. Throws DomainError for qm2 >= 4.
double vacuum_C(double qm2, double e2);

/// C*(qm2)/qm2, finite on the light cone.
double vacuum_C_over_qm2(double qm2, double e2);

/// y / sqrt(|1 - y^2|); the helper that appears in the T = 0 moment integrals.
double sigma_helper(double y);

struct LogKernels {
  double f1 = 0.0;
  double f2 = 0.0;
};

/// Angular-integrated log kernels f1, f2 at x = omega_p/m.
///
/// Each pair of logarithms differing only in the sign of b is folded into a
/// single ln|.| of a ratio, so f1 and f2 keep full relative accuracy when b is
/// small. Returns nullopt exactly at a breakpoint. Requires kin.b() > 0.
std::optional<LogKernels> log_kernels(double x, double p, const Kinematics& kin);
std::optional<LogKernels> log_kernels(double x, const Kinematics& kin);

struct ScalarValue {
  double value = 0.0;
  double errEst = 0.0;
};

/// B* in full kinematics by quadrature. Throws LightConeSingular when
/// |qm2| < kLightConeGuard and DomainError when qmag = 0.
ScalarValue medium_B_full(const Kinematics& kin, const ThermoState& state,
                          double tol = kDefaultTolerance);
/// D* = A* - (1 + 3 qm2 / (2 qmag^2)) B* in full kinematics.
ScalarValue medium_D_full(const Kinematics& kin, const ThermoState& state,
                          double tol = kDefaultTolerance);
/// A* in full kinematics. The D* and B* integrands are combined pointwise
/// before integration.
ScalarValue medium_A_full(const Kinematics& kin, const ThermoState& state,
                          double tol = kDefaultTolerance);

/// I^(j)(a^2) = int_1^inf dx n_F(x) sqrt(x^2-1) / (x^2 - a^2)^j, j = 0, 1, 2.
struct MomentIntegrals {
  double i0 = 0.0;
  double i1 = 0.0;
  double i2 = 0.0;
  double errEst = 0.0;
};

/// Closed forms at t = 0, quadrature otherwise. Requires 0 <= a2 < 1.
MomentIntegrals moment_integrals(double a2, const ThermoState& state,
                                 double tol = kDefaultTolerance);
/// Always by quadrature, also at t = 0.
MomentIntegrals moment_integrals_quadrature(double a2, const ThermoState& state,
                                            double tol = kDefaultTolerance);

/// (a^2/b^2) B* in the b -> 0 limit at fixed 0 < a < 1.
double longwave_B(double a, const ThermoState& state, double tol = kDefaultTolerance);
/// A* in the b -> 0 limit at fixed 0 < a < 1.
double longwave_A(double a, const ThermoState& state, double tol = kDefaultTolerance);

/// A*, B* at omega = 0 to leading order in |q|.
struct StationaryScalars {
  double aStar = 0.0;
  double bStar = 0.0;
  double errEst = 0.0;
};

/// Closed forms at t = 0, quadrature otherwise. Requires qmag > 0.
StationaryScalars stationary_scalars(double qmag, const ThermoState& state,
                                     double tol = kDefaultTolerance);
StationaryScalars stationary_scalars_quadrature(double qmag, const ThermoState& state,
                                                double tol = kDefaultTolerance);

/// O(e^2) corrections in the T = 0 Drude forms.
double drude_g_e(double zeta);
double drude_g_m(double zeta);
/// a_e^2 = omega_e^2 / 4m^2 = (e^2 / 12 pi^2) (zeta^2 - 1)^{3/2} / zeta.
double drude_ae2(double zeta, double e2);

struct DrudeResponse {
  double eps = 1.0;
  double muInv = 1.0;
  double ae2 = 0.0;
  double am2 = 0.0;
};

/// Truncated Drude forms at T = 0:
///   eps   = 1 - a_e^2/a^2 + (e^2/3pi^2) g_e
///   mu^-1 = 1 - a_m^2/a^2 - (5e^2/6pi^2) g_m,   a_m^2 = 2 a_e^2.
/// Requires t = 0, zeta > 1 and a > 0.
DrudeResponse drude_scalars(double a, const ThermoState& state);

enum class RegimeChoice { Auto, Full, LongWavelength, Stationary, Vacuum };

/// Auto-selection thresholds. The long-wavelength expansion is in b/a and,
/// for A*, in b/a^2, so both are bounded.
inline constexpr double kLongwaveMaxB = 1e-3;
inline constexpr double kLongwaveMaxA = 0.9;
inline constexpr double kLongwaveMaxBOverA2 = 0.03;

Regime select_regime(const Kinematics& kin, const ThermoState& state);

/// Evaluate the scalar functions in the chosen (or auto-selected) regime.
ScalarTriple evaluate_scalars(const Kinematics& kin, const ThermoState& state,
                              RegimeChoice choice = RegimeChoice::Auto,
                              double tol = kDefaultTolerance);

}  // namespace relplasma
