#pragma once

// Adaptive Gauss-Kronrod integration over the occupied momentum range.
//
// Integrals over x = omega_p/m in [1, inf) are weighted by the Fermi
// occupation and cut off where the remaining tail is negligible. The
// integrands of the full-kinematics scalar functions carry ln|.| singularities
// wherever one of the eight L1/L2 arguments vanishes; those points become
// panel edges; the open Kronrod rule never samples them.

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "relplasma/core.hpp"

namespace relplasma {

struct IntegralResult {
  double value = 0.0;
  double errEst = 0.0;
  int panels = 0;
  bool converged = true;
};

/// Sorted, strictly increasing x-values (all > 1) where an integrand has an
/// integrable singularity.
class Breakpoints {
 public:
  Breakpoints() = default;
  explicit Breakpoints(std::vector<double> points);

  const std::vector<double>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<double> points_;
};

struct QuadOptions {
  double absTol = kDefaultTolerance;
  /// Also accept errEst <= relTol * |value|. Zero disables.
  double relTol = 0.0;
  int maxPanels = 10000;
  /// Upper integration limit for t > 0; 0 selects it from the tail bound.
  double cutoff = 0.0;
};

/// Thrown when the panel budget is exhausted; carries the best estimate.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(IntegralResult best);
  const IntegralResult& best() const { return best_; }

 private:
  IntegralResult best_;
};

using Integrand = std::function<double(double)>;

/// Integrand over the momentum variable: receives x = omega_p/m and
/// p = sqrt(x^2 - 1) = |p|/m, the latter computed without cancellation.
using MomentumIntegrand = std::function<double(double x, double p)>;

/// Adaptive G10/K21 integration of f over [lo, hi] with panel edges at every
/// break inside the interval. Throws NonConvergence.
IntegralResult integrate(const Integrand& f, double lo, double hi,
                         std::span<const double> breaks,
                         const QuadOptions& opts = {});

/// Upper limit X such that the Fermi-weighted tail of f beyond X is below
/// tol/10. For t = 0 this is zeta.
double fermi_cutoff(const MomentumIntegrand& f, const ThermoState& state, double tol);

/// Integral of n_F(x) f(x) over x in [1, inf).
///
/// Internally integrates in u = arccosh(x), which removes the square-root
/// behaviour of the momentum measure at x = 1.
IntegralResult integrate_semi_infinite(const MomentumIntegrand& f,
                                       const ThermoState& state,
                                       const Breakpoints& breaks,
                                       const QuadOptions& opts = {});

/// Zeros in x > 1 of the L1 arguments ax + b sqrt(x^2-1) + a^2 - b^2 and the
/// L2 arguments ax + b sqrt(x^2-1) + a^2 under the four sign choices of
/// (+-a, +-b). Requires kin.qmag() > 0.
Breakpoints locate_log_singularities(const Kinematics& kin);

}  // namespace relplasma
