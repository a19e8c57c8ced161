#pragma once

// Dispersion relation |q|^2 - mu eps w^2 + 2 mu tau w |q| = 0 at fixed w,
// refractive index n = |q|/w, and negative-index band scans.

#include <functional>
#include <utility>
#include <vector>

#include "relplasma/core.hpp"
#include "relplasma/response.hpp"

namespace relplasma {

using ResponseProvider = std::function<ResponseSet(double omega, double qmag)>;

enum class DispersionMode { SelfConsistent, LongWavelength };

struct DispersionOptions {
  int gridPoints = 512;
  /// Largest |q| scanned; 0 selects 10 w + 10 m_TF.
  double qmax = 0.0;
  double tol = kDefaultTolerance;
  RegimeChoice regime = RegimeChoice::Auto;
};

struct DispersionSolution {
  double omega = 0.0;
  std::vector<double> qroots;
  std::vector<double> nIndex;
  std::vector<double> residual;
  /// eps < 0 and mu^-1 < 0 at the root.
  std::vector<bool> leftHanded;
  std::vector<Regime> regime;
  /// Grid points dropped with |mu^-1| < 1e-12.
  int poleNearby = 0;
  /// Grid points dropped on the light cone.
  int lightConeSkipped = 0;
};

inline constexpr double kPoleGuard = 1e-12;
inline constexpr double kResidualTolerance = 1e-9;

/// R(q) = q^2 - (eps/mu^-1) w^2 + 2 (tau/mu^-1) w q.
double dispersion_residual(const ResponseSet& r, double omega, double qmag);

/// Grid scan on (0, qmax] plus bisection of every sign change of R.
/// Sign changes whose bisected |R| exceeds kResidualTolerance are poles of
/// mu and are dropped.
DispersionSolution solve_dispersion(double omega, const ResponseProvider& responses,
                                    double qmax, int gridPoints = 512);

/// SelfConsistent: responses from scalar_functions at each (w, q).
/// LongWavelength: tau = 0 and eps, mu at q -> 0, so q = sqrt(mu eps) w when
/// mu eps > 0 and no root otherwise.
DispersionSolution solve_dispersion(double omega, const ThermoState& state,
                                    DispersionMode mode,
                                    const DispersionOptions& opts = {});

/// eps and mu^-1 at q -> 0 (vacuum regime for an empty medium). Requires 0 < w < 2.
ResponseSet longwave_responses(double omega, const ThermoState& state,
                               double tol = kDefaultTolerance);

struct BandReport {
  std::vector<double> omegaGrid;
  std::vector<double> epsVals;
  std::vector<double> muInvVals;
  std::vector<std::pair<double, double>> negativeBand;
};

/// Long-wavelength eps and mu^-1 on a uniform grid; intervals where both are
/// negative, with interior edges refined by bisection of max(eps, mu^-1).
BandReport negative_index_scan(const ThermoState& state, double omegaMin, double omegaMax,
                               int nPoints, double tol = kDefaultTolerance);

}  // namespace relplasma
