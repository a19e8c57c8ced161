#include "relplasma/core.hpp"

#include <cmath>
#include <sstream>

namespace relplasma {

namespace {

std::string light_cone_message(double qm2) {
  std::ostringstream out;
  out << "kinematics on the light cone (|q_M^2| = " << std::abs(qm2)
      << " < " << kLightConeGuard << "); use a limiting regime";
  return out.str();
}

}  // namespace

LightConeSingular::LightConeSingular(double qm2)
    : std::runtime_error(light_cone_message(qm2)), qm2_(qm2) {}

ThermoState::ThermoState(double t, double zeta, double e2)
    : t_(t), zeta_(zeta), e2_(e2) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("temperature must be finite and >= 0");
  }
  if (!std::isfinite(zeta) || zeta < 0.0) {
    throw DomainError("chemical potential must be finite and >= 0");
  }
  if (!std::isfinite(e2) || e2 <= 0.0) {
    throw DomainError("coupling e^2 must be finite and > 0");
  }
}

Kinematics::Kinematics(double omega, double qmag)
    : omega_(omega), qmag_(qmag), qm2_((omega - qmag) * (omega + qmag)) {}

Kinematics make_kinematics(double omega, double qmag) {
  if (!std::isfinite(omega) || !std::isfinite(qmag)) {
    throw DomainError("kinematics must be finite");
  }
  if (omega < 0.0 || qmag < 0.0) {
    throw DomainError("frequency and wavevector must be >= 0");
  }
  return Kinematics(omega, qmag);
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::FullKinematics:
      return "full";
    case Regime::LongWavelength:
      return "longwave";
    case Regime::Stationary:
      return "stationary";
    case Regime::Vacuum:
      return "vacuum";
  }
  return "unknown";
}

double fermi_dirac(double u) {
  if (u > 0.0) {
    const double e = std::exp(-u);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(u));
}

double fermi_occupation(double x, const ThermoState& state) {
  if (!(x >= 1.0)) {
    throw DomainError("fermi_occupation requires x >= 1");
  }
  const double zeta = state.zeta();
  if (state.t() == 0.0) {
    if (x < zeta) return 1.0;
    if (x > zeta) return 0.0;
    return 0.5;
  }
  const double t = state.t();
  return fermi_dirac((x - zeta) / t) + fermi_dirac((x + zeta) / t);
}

}  // namespace relplasma
