#include "relplasma/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "relplasma/limits.hpp"
#include "relplasma/roots.hpp"

namespace relplasma {

namespace {

struct GridValue {
  double q;
  double r;
};

std::optional<double> safe_residual(const ResponseProvider& responses, double omega,
                                    double q, DispersionSolution& sol) {
  try {
    const ResponseSet r = responses(omega, q);
    if (std::abs(r.muInv) < kPoleGuard) {
      ++sol.poleNearby;
      return std::nullopt;
    }
    const double v = dispersion_residual(r, omega, q);
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const LightConeSingular&) {
    ++sol.lightConeSkipped;
    return std::nullopt;
  }
}

}  // namespace

double dispersion_residual(const ResponseSet& r, double omega, double qmag) {
  return qmag * qmag - (r.eps / r.muInv) * omega * omega +
         2.0 * (r.tau / r.muInv) * omega * qmag;
}

DispersionSolution solve_dispersion(double omega, const ResponseProvider& responses,
                                    double qmax, int gridPoints) {
  if (!(omega > 0.0)) throw DomainError("dispersion needs omega > 0");
  if (!(qmax > 0.0) || gridPoints < 2) throw DomainError("invalid dispersion grid");
  DispersionSolution sol;
  sol.omega = omega;

  std::vector<GridValue> grid;
  for (int i = 1; i <= gridPoints; ++i) {
    const double q = qmax * i / gridPoints;
    if (auto v = safe_residual(responses, omega, q, sol)) grid.push_back({q, *v});
  }

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const GridValue& lo = grid[i];
    const GridValue& hi = grid[i + 1];
    if (lo.r != 0.0 && (lo.r < 0.0) == (hi.r < 0.0)) continue;
    bool failed = false;
    auto f = [&](double q) {
      const ResponseSet r = responses(omega, q);
      const double v = dispersion_residual(r, omega, q);
      if (!std::isfinite(v)) failed = true;
      return v;
    };
    BisectionResult root;
    try {
      root = bisect(f, lo.q, hi.q, lo.r, hi.r);
    } catch (const LightConeSingular&) {
      ++sol.lightConeSkipped;
      continue;
    }
    if (failed || !(std::abs(root.value) <= kResidualTolerance)) continue;
    if (!sol.qroots.empty() && sol.qroots.back() == root.root) continue;
    const ResponseSet at = responses(omega, root.root);
    sol.qroots.push_back(root.root);
    sol.nIndex.push_back(root.root / omega);
    sol.residual.push_back(root.value);
    sol.leftHanded.push_back(at.eps < 0.0 && at.muInv < 0.0);
    sol.regime.push_back(Regime::FullKinematics);
  }
  return sol;
}

ResponseSet longwave_responses(double omega, const ThermoState& state, double tol) {
  if (!(omega > 0.0) || !(omega < 2.0)) {
    throw DomainError("long-wavelength responses need 0 < omega < 2");
  }
  const RegimeChoice choice =
      state.medium_empty() ? RegimeChoice::Vacuum : RegimeChoice::LongWavelength;
  return evaluate_responses(make_kinematics(omega, 0.0), state, choice, tol).full;
}

DispersionSolution solve_dispersion(double omega, const ThermoState& state,
                                    DispersionMode mode, const DispersionOptions& opts) {
  if (!(omega > 0.0)) throw DomainError("dispersion needs omega > 0");
  if (mode == DispersionMode::LongWavelength) {
    DispersionSolution sol;
    sol.omega = omega;
    const ResponseSet r = longwave_responses(omega, state, opts.tol);
    if (std::abs(r.muInv) < kPoleGuard) {
      ++sol.poleNearby;
      return sol;
    }
    const double muEps = r.eps / r.muInv;
    if (!(muEps > 0.0)) return sol;
    const double q = std::sqrt(muEps) * omega;
    sol.qroots.push_back(q);
    sol.nIndex.push_back(q / omega);
    sol.residual.push_back(q * q - muEps * omega * omega);
    sol.leftHanded.push_back(r.eps < 0.0 && r.muInv < 0.0);
    sol.regime.push_back(state.medium_empty() ? Regime::Vacuum : Regime::LongWavelength);
    return sol;
  }

  const double qmax = opts.qmax > 0.0
                          ? opts.qmax
                          : 10.0 * omega + 10.0 * std::sqrt(thomas_fermi_mass2(state, opts.tol));
  auto provider = [&](double w, double q) {
    return evaluate_responses(make_kinematics(w, q), state, opts.regime, opts.tol).full;
  };
  DispersionSolution sol = solve_dispersion(omega, provider, qmax, opts.gridPoints);
  for (std::size_t i = 0; i < sol.qroots.size(); ++i) {
    sol.regime[i] = select_regime(make_kinematics(omega, sol.qroots[i]), state);
  }
  return sol;
}

BandReport negative_index_scan(const ThermoState& state, double omegaMin, double omegaMax,
                               int nPoints, double tol) {
  if (!(omegaMin > 0.0) || !(omegaMax > omegaMin) || nPoints < 2) {
    throw DomainError("invalid frequency grid");
  }
  BandReport report;
  for (int i = 0; i < nPoints; ++i) {
    const double w = omegaMin + (omegaMax - omegaMin) * i / (nPoints - 1);
    const ResponseSet r = longwave_responses(w, state, tol);
    report.omegaGrid.push_back(w);
    report.epsVals.push_back(r.eps);
    report.muInvVals.push_back(r.muInv);
  }
  auto g = [&](double w) {
    const ResponseSet r = longwave_responses(w, state, tol);
    return std::max(r.eps, r.muInv);
  };
  auto gAt = [&](int i) { return std::max(report.epsVals[i], report.muInvVals[i]); };
  auto edge = [&](int i) {
    return bisect(g, report.omegaGrid[i], report.omegaGrid[i + 1], gAt(i), gAt(i + 1)).root;
  };

  int i = 0;
  while (i < nPoints) {
    if (!(gAt(i) < 0.0)) {
      ++i;
      continue;
    }
    const double low = i == 0 ? report.omegaGrid[0] : edge(i - 1);
    int j = i;
    while (j + 1 < nPoints && gAt(j + 1) < 0.0) ++j;
    const double high = j + 1 < nPoints ? edge(j) : report.omegaGrid[j];
    report.negativeBand.emplace_back(low, high);
    i = j + 1;
  }
  return report;
}

}  // namespace relplasma
