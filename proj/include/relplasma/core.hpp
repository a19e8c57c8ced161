#pragma once

// Shared domain types for the relativistic electron-gas response library.
//
// Every quantity is expressed in electron-mass units (hbar = c = m = 1):
// energies, frequencies, momenta and temperatures are divided by m, and
// squared momenta by m^2.

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relplasma {

/// e^2 from the renormalization condition e^2 / (4 pi) = 1/137.
inline constexpr double kDefaultE2 = 4.0 * std::numbers::pi / 137.0;

/// Full-kinematics formulas divide by q_M^2; below this |q_M^2| they refuse.
inline constexpr double kLightConeGuard = 1e-8;

inline constexpr double kDefaultTolerance = 1e-9;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LightConeSingular : public std::runtime_error {
 public:
  explicit LightConeSingular(double qm2);
  double qm2() const { return qm2_; }

 private:
  double qm2_;
};

/// Temperature T/m, chemical potential xi/m and squared coupling of the gas.
class ThermoState {
 public:
  ThermoState(double t, double zeta, double e2 = kDefaultE2);

  double t() const { return t_; }
  double zeta() const { return zeta_; }
  double e2() const { return e2_; }

  /// True when no particles are present: T = 0 and no Fermi sea (zeta <= 1).
  bool medium_empty() const { return t_ == 0.0 && zeta_ <= 1.0; }

 private:
  double t_;
  double zeta_;
  double e2_;
};

/// Probe frequency omega/m and wavevector magnitude |q|/m.
///
/// a = omega/2 and b = |q|/2 are the halved variables used by the angular
/// integrals; qm2 = omega^2 - |q|^2 is the Minkowski invariant.
class Kinematics {
 public:
  double omega() const { return omega_; }
  double qmag() const { return qmag_; }
  double a() const { return 0.5 * omega_; }
  double b() const { return 0.5 * qmag_; }
  double qm2() const { return qm2_; }

 private:
  friend Kinematics make_kinematics(double omega, double qmag);
  Kinematics(double omega, double qmag);

  double omega_;
  double qmag_;
  double qm2_;
};

Kinematics make_kinematics(double omega, double qmag);

enum class Regime { FullKinematics, LongWavelength, Stationary, Vacuum };

std::string_view to_string(Regime regime);

/// The continued scalar functions A*, B*, C* and D* at one kinematic point.
struct ScalarTriple {
  double aStar = 0.0;
  double bStar = 0.0;
  double cStar = 0.0;
  double dStar = 0.0;
  /// (a^2/b^2) B*, the combination that stays finite as b -> 0. Set in the
  /// long-wavelength and full-kinematics regimes.
  double bScaled = 0.0;
  double errEst = 0.0;
  Regime regime = Regime::Vacuum;
};

/// The six response coefficients. sigma is the magnetoelectric coefficient
/// multiplying q-hat x E in H.
struct ResponseSet {
  double eps = 1.0;
  double muInv = 1.0;
  double epsPrime = 0.0;
  double muPrimeInv = 0.0;
  double tau = 0.0;
  double sigma = 0.0;
};

struct Susceptibilities {
  double chiE = 0.0;
  double chiEPrime = 0.0;
  double chiEM = 0.0;
  double chiM = 0.0;
  double chiMPrime = 0.0;
  double chiME = 0.0;
};

/// Electron plus positron occupation at energy x = omega_p/m >= 1.
///
/// Returns 1/(exp((x-zeta)/t)+1) + 1/(exp((x+zeta)/t)+1) for t > 0 and the
/// step Theta(zeta - x) (1/2 exactly at x = zeta) for t = 0.
double fermi_occupation(double x, const ThermoState& state);

/// 1/(exp(u)+1) without overflow for any finite u.
double fermi_dirac(double u);

}  // namespace relplasma
