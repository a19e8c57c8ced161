#include "relplasma/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "relplasma/quadrature.hpp"
#include "relplasma/response.hpp"
#include "relplasma/scalar_functions.hpp"

namespace relplasma {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

double nr_cutoff(const NRState& nr) {
  if (nr.t() == 0.0) return nr.pF();
  return std::sqrt(2.0 * (std::max(nr.xiPrime(), 0.0) + 50.0 * nr.t()));
}

QuadOptions fine(double absTol) {
  QuadOptions o;
  o.absTol = absTol;
  o.relTol = 1e-12;
  return o;
}

}  // namespace

NRState::NRState(double xiPrime, double t) : xiPrime_(xiPrime), t_(t) {
  if (!std::isfinite(xiPrime)) throw DomainError("xiPrime must be finite");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be finite and >= 0");
}

double NRState::pF() const { return xiPrime_ > 0.0 ? std::sqrt(2.0 * xiPrime_) : 0.0; }

NRState nr_state(const ThermoState& state) { return NRState(state.zeta() - 1.0, state.t()); }

double nr_occupation(double p, const NRState& nr) {
  const double e = 0.5 * p * p - nr.xiPrime();
  if (nr.t() == 0.0) return e < 0.0 ? 1.0 : (e == 0.0 ? 0.5 : 0.0);
  return fermi_dirac(e / nr.t());
}

double lindhard_chi_e(double omega, double qmag, const NRState& nr, double e2, double tol) {
  if (!(qmag > 0.0)) throw DomainError("Lindhard susceptibility needs qmag > 0");
  const double pmax = nr_cutoff(nr);
  if (!(pmax > 0.0)) return 0.0;
  const double q = qmag;
  const double half = 0.5 * q * q;
  std::vector<double> breaks;
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      const double p = (s1 * half + s2 * omega) / q;
      if (p > 0.0 && p < pmax) breaks.push_back(p);
    }
  }
  auto integrand = [&](double p) {
    const double lo = p * q - half;
    const double hi = p * q + half;
    const double num = lo * lo - omega * omega;
    const double den = hi * hi - omega * omega;
    if (num == 0.0 || den == 0.0) return 0.0;
    // num - den = -2 p q^3
    const double r = -2.0 * p * q * q * q / den;
    const double lg = std::abs(r) < 0.5 ? std::log1p(r) : std::log(std::abs(num / den));
    return p * nr_occupation(p, nr) * lg;
  };
  const double pref = e2 / (2.0 * kPi2 * q * q * q);
  const auto r = integrate(integrand, 0.0, pmax, breaks, fine(tol / pref));
  return -pref * r.value;
}

double lindhard_static_closed(double qmag, const NRState& nr, double e2) {
  const double pF = nr.pF();
  if (!(pF > 0.0)) return 0.0;
  const double u = qmag / (2.0 * pF);
  double shape = 0.5;
  if (u != 1.0) {
    shape += (1.0 - u * u) / (4.0 * u) * std::log(std::abs((1.0 + u) / (1.0 - u)));
  }
  return e2 * pF / (kPi2 * qmag * qmag) * shape;
}

double nr_plasmon_omega2(const NRState& nr, double e2) {
  if (nr.t() == 0.0) {
    const double pF = nr.pF();
    return e2 / (3.0 * kPi2) * pF * pF * pF;
  }
  const auto r = integrate([&](double p) { return p * p * nr_occupation(p, nr); }, 0.0,
                           nr_cutoff(nr), {}, fine(1e-16));
  return e2 / kPi2 * r.value;
}

std::pair<double, double> pauli_landau(const NRState& nr, double e2) {
  if (nr.t() != 0.0) throw DomainError("Pauli/Landau split is given at t = 0");
  const double base = e2 * nr.pF() / (12.0 * kPi2);
  return {3.0 * base, -base};
}

double thomas_fermi_mass2(const ThermoState& state, double tol) {
  if (state.t() > 0.0) return thomas_fermi_mass2_quadrature(state, tol);
  const double zeta = state.zeta();
  if (zeta <= 1.0) return 0.0;
  const double root = std::sqrt((zeta - 1.0) * (zeta + 1.0));
  return state.e2() / (4.0 * kPi2) * (std::acosh(zeta) + 3.0 * zeta * root);
}

double thomas_fermi_mass2_quadrature(const ThermoState& state, double tol) {
  const double unit = state.e2() / kPi2;
  const auto r = integrate_semi_infinite(
      [](double x, double p) { return (1.5 * x * x - 0.5) / p; }, state, {},
      fine(tol / unit));
  return unit * r.value;
}

double thomas_fermi_mass2_nr(const NRState& nr, double e2) {
  if (nr.t() == 0.0) return e2 / kPi2 * nr.pF();
  const auto r = integrate([&](double p) { return nr_occupation(p, nr); }, 0.0,
                           nr_cutoff(nr), {}, fine(1e-16));
  return e2 / kPi2 * r.value;
}

PlasmonFrequencies plasmon_frequency(const ThermoState& state, double tol) {
  if (state.t() != 0.0) throw DomainError("plasmon frequency is computed at t = 0");
  PlasmonFrequencies out;
  if (state.zeta() <= 1.0) return out;
  out.omegaE = 2.0 * std::sqrt(drude_ae2(state.zeta(), state.e2()));
  auto eps = [&](double omega) {
    return evaluate_responses(make_kinematics(omega, 0.0), state,
                              RegimeChoice::LongWavelength, tol)
        .full.eps;
  };
  const double lo = 0.5 * out.omegaE;
  const double hi = 2.0 * out.omegaE;
  const double flo = eps(lo);
  const double fhi = eps(hi);
  if (!(flo * fhi < 0.0)) {
    throw RootNotBracketed("long-wavelength eps has no zero near the Drude frequency");
  }
  out.OmegaE = bisect(eps, lo, hi, flo, fhi).root;
  return out;
}

}  // namespace relplasma
