#pragma once

// Acceptance checks shared by the `check` subcommand and the acceptance test.

#include <cstdint>
#include <string>
#include <vector>

#include "relplasma/core.hpp"
#include "relplasma/limits.hpp"

namespace relplasma {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string measured;
  std::string expected;
};

std::string format_check(const CheckResult& r);

CheckResult check_stationary_closed_form();
CheckResult check_thomas_fermi();
CheckResult check_pauli_landau();
CheckResult check_drude_frequencies();
CheckResult check_simultaneous_negativity();
CheckResult check_route_equivalence();
CheckResult check_lindhard();
CheckResult check_derivative_identity();
CheckResult check_vacuum_polarization();
CheckResult check_dispersion_stub();
CheckResult check_assembly_identities();
/// In-process part of CLI determinism: two sweeps give identical bytes and
/// the CSV round-trips.
CheckResult check_sweep_determinism();

std::vector<CheckResult> run_checks();

/// C*(qm2) for qm2 < 4 from its spectral representation
///   C(Q) = (Q/pi)(e^2/12pi) int_0^1 du sqrt(1-u)(1+u/2)/(4 - Q u),
/// by Simpson's rule after u = 1 - v^2.
double vacuum_C_spectral(double qm2, double e2, int intervals = 4000);

struct MonteCarloEstimate {
  double value = 0.0;
  double stdError = 0.0;
};

/// Static Lindhard susceptibility by direct sampling of the 3D momentum
/// integral over a ball, in the symmetrized variable p -> p - q/2.
MonteCarloEstimate lindhard_monte_carlo(double qmag, const NRState& nr, double e2,
                                        std::uint64_t samples, std::uint64_t seed);

}  // namespace relplasma
