#pragma once

// Nonrelativistic reference formulas (Lindhard, Thomas-Fermi, Drude plasmon,
// Pauli/Landau) and the relativistic Thomas-Fermi mass and plasmon frequency.

#include <utility>

#include "relplasma/core.hpp"
#include "relplasma/roots.hpp"

namespace relplasma {

/// Nonrelativistic gas: xiPrime = zeta - 1 and t, both in units of m.
class NRState {
 public:
  NRState(double xiPrime, double t);

  double xiPrime() const { return xiPrime_; }
  double t() const { return t_; }
  /// sqrt(2 xiPrime), zero for an empty gas.
  double pF() const;
  /// False outside xiPrime <= 0.1, t <= 0.1, where the expansion in p/m and
  /// T/m is not trustworthy. Callers warn; nothing refuses.
  bool within_validity() const { return xiPrime_ <= 0.1 && t_ <= 0.1; }

 private:
  double xiPrime_;
  double t_;
};

NRState nr_state(const ThermoState& state);

/// n'(p) = 1/(exp((p^2/2 - xiPrime)/t) + 1), the step at t = 0.
double nr_occupation(double p, const NRState& nr);

/// Real part of the Lindhard electric susceptibility after angular integration:
///   chi = -(e^2 / 2 pi^2 q^3) int_0^inf dp p n'(p)
///         ln|((pq - q^2/2)^2 - w^2) / ((pq + q^2/2)^2 - w^2)|.
double lindhard_chi_e(double omega, double qmag, const NRState& nr, double e2 = kDefaultE2,
                      double tol = kDefaultTolerance);

/// Static T = 0 closed form (e^2 pF / pi^2 q^2) F(q / 2pF).
double lindhard_static_closed(double qmag, const NRState& nr, double e2 = kDefaultE2);

/// omega_e^2 = (e^2/pi^2) int dp p^2 n'(p); (e^2/3pi^2) pF^3 at t = 0.
double nr_plasmon_omega2(const NRState& nr, double e2 = kDefaultE2);

/// (chiPauli, chiLandau) = (e^2 pF / 4pi^2, -e^2 pF / 12pi^2). Requires t = 0.
std::pair<double, double> pauli_landau(const NRState& nr, double e2 = kDefaultE2);

/// m_TF^2 = (e^2/4pi^2)[arccosh zeta + 3 zeta sqrt(zeta^2-1)] at t = 0,
/// quadrature of (e^2/pi^2) int dx n_F (3x^2/2 - 1/2)/sqrt(x^2-1) otherwise.
double thomas_fermi_mass2(const ThermoState& state, double tol = kDefaultTolerance);
/// Always by quadrature.
double thomas_fermi_mass2_quadrature(const ThermoState& state,
                                     double tol = kDefaultTolerance);
/// (e^2/pi^2) int dp n'(p); (e^2/pi^2) pF at t = 0.
double thomas_fermi_mass2_nr(const NRState& nr, double e2 = kDefaultE2);

struct PlasmonFrequencies {
  double omegaE = 0.0;
  double OmegaE = 0.0;
};

/// omegaE = 2 sqrt(a_e^2); OmegaE is the zero of the assembled long-wavelength
/// eps(omega) at q = 0, searched in [omegaE/2, 2 omegaE]. Throws
/// RootNotBracketed if eps keeps one sign there. Requires t = 0.
PlasmonFrequencies plasmon_frequency(const ThermoState& state,
                                     double tol = kDefaultTolerance);

}  // namespace relplasma
