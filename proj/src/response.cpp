#include "relplasma/response.hpp"

#include <cmath>

namespace relplasma {

namespace {

Mat3 levi_civita_dot(double coeff, const Vec3& n) {
  Mat3 m{};
  m[0][1] = coeff * n[2];
  m[1][0] = -coeff * n[2];
  m[1][2] = coeff * n[0];
  m[2][1] = -coeff * n[0];
  m[2][0] = coeff * n[1];
  m[0][2] = -coeff * n[1];
  return m;
}

Mat3 longitudinal(double diag, double proj, const Vec3& n) {
  Mat3 m{};
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) m[j][k] = proj * n[j] * n[k];
    m[j][j] += diag;
  }
  return m;
}

Vec3 times(const Mat3& m, const Vec3& v) {
  Vec3 out{};
  for (int j = 0; j < 3; ++j) {
    out[j] = m[j][0] * v[0] + m[j][1] * v[1] + m[j][2] * v[2];
  }
  return out;
}

}  // namespace

ResponseSet assemble_responses(const ScalarTriple& s, const Kinematics& kin) {
  const double w = kin.omega();
  const double q = kin.qmag();
  const double qm2 = kin.qm2();
  const bool longwave = s.regime == Regime::LongWavelength;
  const bool vacuum = s.regime == Regime::Vacuum;
  if (std::abs(qm2) < kLightConeGuard) throw LightConeSingular(qm2);
  if (!(q > 0.0) && !longwave && !vacuum) {
    throw DomainError("response assembly needs qmag > 0 outside the long-wavelength regime");
  }

  const double cOver = s.cStar / qm2;
  ResponseSet r;
  r.epsPrime = q * q * cOver - s.aStar;
  if (longwave || !(q > 0.0)) {
    const double a = kin.a();
    const double b = kin.b();
    const double p = s.bScaled;
    const double ratio = a > 0.0 ? b / a : 0.0;
    r.eps = 1.0 + s.cStar + s.aStar + (ratio * ratio - 1.0) * p;
    r.muInv = 1.0 + 2.0 * s.cStar + s.aStar - 2.0 * p;
    r.tau = w * q * cOver - ratio * p;
  } else {
    const double w2q2 = (w * w) / (q * q);
    r.eps = 1.0 + (2.0 - w * w / qm2) * s.cStar + s.aStar + (1.0 - w2q2) * s.bStar;
    r.muInv = 1.0 + (2.0 + q * q / qm2) * s.cStar + s.aStar - 2.0 * w2q2 * s.bStar;
    r.tau = (w / q) * (q * q * cOver - s.bStar);
  }
  r.muPrimeInv = -r.epsPrime;
  r.sigma = r.tau;
  return r;
}

ScalarTriple vacuum_part(const ScalarTriple& scalars) {
  ScalarTriple v;
  v.cStar = scalars.cStar;
  v.regime = scalars.regime;
  return v;
}

Susceptibilities susceptibilities(const ResponseSet& full, const ResponseSet& vacuumOnly) {
  Susceptibilities chi;
  chi.chiE = full.eps - vacuumOnly.eps;
  chi.chiEPrime = full.epsPrime - vacuumOnly.epsPrime;
  chi.chiEM = full.tau - vacuumOnly.tau;
  chi.chiM = -(full.muInv - vacuumOnly.muInv);
  chi.chiMPrime = -(full.muPrimeInv - vacuumOnly.muPrimeInv);
  chi.chiME = -(full.sigma - vacuumOnly.sigma);
  return chi;
}

ConstitutiveTensors constitutive_tensors(const ResponseSet& r, const Vec3& qdir) {
  const double norm = std::hypot(qdir[0], qdir[1], qdir[2]);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("wavevector direction must be a nonzero finite vector");
  }
  ConstitutiveTensors c;
  c.qhat = {qdir[0] / norm, qdir[1] / norm, qdir[2] / norm};
  c.epsT = longitudinal(r.eps, r.epsPrime, c.qhat);
  c.muInvT = longitudinal(r.muInv, r.muPrimeInv, c.qhat);
  c.tauT = levi_civita_dot(r.tau, c.qhat);
  c.sigmaT = levi_civita_dot(r.sigma, c.qhat);
  return c;
}

Fields apply(const ConstitutiveTensors& c, const Vec3& e, const Vec3& b) {
  Fields f;
  const Vec3 de = times(c.epsT, e);
  const Vec3 db = times(c.tauT, b);
  const Vec3 hb = times(c.muInvT, b);
  const Vec3 he = times(c.sigmaT, e);
  for (int j = 0; j < 3; ++j) {
    f.d[j] = de[j] + db[j];
    f.h[j] = hb[j] + he[j];
  }
  return f;
}

ResponseEvaluation evaluate_responses(const Kinematics& kin, const ThermoState& state,
                                      RegimeChoice choice, double tol) {
  ResponseEvaluation out;
  out.scalars = evaluate_scalars(kin, state, choice, tol);
  out.full = assemble_responses(out.scalars, kin);
  out.vacuum = assemble_responses(vacuum_part(out.scalars), kin);
  out.chi = susceptibilities(out.full, out.vacuum);
  return out;
}

}  // namespace relplasma
