#pragma once

// Response coefficients from the scalar functions, medium susceptibilities
// and the constitutive tensors
//   D = epsT E + tauT B,   H = muInvT B + sigmaT E.

#include <array>

#include "relplasma/core.hpp"
#include "relplasma/scalar_functions.hpp"

namespace relplasma {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Generic form (regime Full, Stationary, Vacuum with qmag > 0):
///   eps     = 1 + (2 - w^2/qm2) C + A + (1 - w^2/q^2) B
///   mu^-1   = 1 + (2 + q^2/qm2) C + A - 2 (w^2/q^2) B
///   eps'    = -mu'^-1 = (q^2/qm2) C - A
///   tau     = sigma = (w/q) ((q^2/qm2) C - B)
/// Long-wavelength regime, with P = (a^2/b^2) B (ScalarTriple::bScaled):
///   eps     = 1 + C + A + (b^2/a^2 - 1) P
///   mu^-1   = 1 + 2C + A - 2P
///   tau     = w q C/qm2 - (b/a) P
/// which also covers qmag = 0. Throws LightConeSingular when
/// |qm2| < kLightConeGuard and DomainError when qmag = 0 outside the
/// long-wavelength and vacuum regimes.
ResponseSet assemble_responses(const ScalarTriple& scalars, const Kinematics& kin);

/// The same scalars with A* = B* = D* = 0.
ScalarTriple vacuum_part(const ScalarTriple& scalars);

Susceptibilities susceptibilities(const ResponseSet& full, const ResponseSet& vacuumOnly);

struct ConstitutiveTensors {
  Mat3 epsT{};
  Mat3 muInvT{};
  Mat3 tauT{};
  Mat3 sigmaT{};
  Vec3 qhat{};
};

/// epsT = eps I + eps' qhat qhat^T, muInvT likewise, and
/// tauT[j][k] = tau eps_{jkl} qhat_l, sigmaT likewise.
/// Throws DomainError for a zero or non-finite direction.
ConstitutiveTensors constitutive_tensors(const ResponseSet& r, const Vec3& qdir);

struct Fields {
  Vec3 d{};
  Vec3 h{};
};

Fields apply(const ConstitutiveTensors& c, const Vec3& e, const Vec3& b);

struct ResponseEvaluation {
  ScalarTriple scalars;
  ResponseSet full;
  ResponseSet vacuum;
  Susceptibilities chi;
};

ResponseEvaluation evaluate_responses(const Kinematics& kin, const ThermoState& state,
                                      RegimeChoice choice = RegimeChoice::Auto,
                                      double tol = kDefaultTolerance);

}  // namespace relplasma
