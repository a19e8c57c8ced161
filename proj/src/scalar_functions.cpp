#include "relplasma/scalar_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace relplasma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
// Internal integrals also stop at this relative accuracy; the scalar
// integrands are differences of O(1) terms and cannot do much better.
constexpr double kQuadRelTol = 1e-12;
constexpr double kVacuumSeriesRadius = 1e-3;

QuadOptions quad_options(double absTol) {
  QuadOptions opts;
  opts.absTol = absTol;
  opts.relTol = kQuadRelTol;
  return opts;
}

// sum_{n>=1} Q^(n-1)/n * B(n+2, n+2), B(k+1,k+1) = (k!)^2/(2k+1)!.
double vacuum_series_over_q(double q) {
  double beta = 1.0 / 30.0;  // k = 2
  double power = 1.0;
  double sum = 0.0;
  for (int n = 1; n <= 12; ++n) {
    sum += power * beta / n;
    const int k = n + 1;
    beta *= (k + 1.0) / (2.0 * (2.0 * k + 3.0));
    power *= q;
  }
  return sum;
}

// ln|(alpha - beta)/(alpha + beta)|, the difference of two logarithms that
// differ only in the sign of the b-term.
std::optional<double> folded_log(double alpha, double beta) {
  const double num = alpha - beta;
  const double den = alpha + beta;
  if (num == 0.0 || den == 0.0) return std::nullopt;
  const double r = -2.0 * beta / den;
  if (std::abs(r) < 0.5) return std::log1p(r);
  return std::log(std::abs(num) / std::abs(den));
}

void require_full_kinematics(const Kinematics& kin) {
  if (!(kin.qmag() > 0.0)) {
    throw DomainError("full-kinematics scalars need qmag > 0");
  }
  if (std::abs(kin.qm2()) < kLightConeGuard) throw LightConeSingular(kin.qm2());
}

double full_prefactor(const Kinematics& kin, double e2) {
  const double a = kin.a();
  const double b = kin.b();
  return -e2 / (4.0 * kPi2 * (a * a - b * b));
}

double bracket_B(double x, double p, const Kinematics& kin) {
  const auto k = log_kernels(x, p, kin);
  if (!k) return 0.0;
  const double a = kin.a();
  const double b = kin.b();
  return p + (x * x + a * a - b * b) / (4.0 * b) * k->f1 -
         (2.0 * a * x) / (4.0 * b) * k->f2;
}

double bracket_D(double x, double p, const Kinematics& kin) {
  const auto k = log_kernels(x, p, kin);
  if (!k) return 0.0;
  const double a = kin.a();
  const double b = kin.b();
  return p + (1.0 + 2.0 * a * a - 2.0 * b * b) / (8.0 * b) * k->f1;
}

// Sum of the magnitudes of the cancelling terms in the B* and D* brackets.
double bracket_magnitude(double x, double p, const Kinematics& kin, double kB) {
  const auto k = log_kernels(x, p, kin);
  if (!k) return 0.0;
  const double a = kin.a();
  const double b = kin.b();
  const double termsB = p + std::abs((x * x + a * a - b * b) / (4.0 * b) * k->f1) +
                        std::abs((2.0 * a * x) / (4.0 * b) * k->f2);
  const double termsD = p + std::abs((1.0 + 2.0 * a * a - 2.0 * b * b) / (8.0 * b) * k->f1);
  return termsD + std::abs(kB) * termsB;
}

// Absolute accuracy reachable in double precision for a bracket integral,
// from a coarse midpoint estimate of the integral of the term magnitudes.
double roundoff_floor(const Kinematics& kin, const ThermoState& state, double kB) {
  const double top = state.t() > 0.0 ? std::max(state.zeta(), 1.0) + 40.0 * state.t()
                                     : state.zeta();
  if (!(top > 1.0)) return 0.0;
  const double umax = std::acosh(top);
  constexpr int kSamples = 64;
  const double du = umax / kSamples;
  double sum = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double u = (i + 0.5) * du;
    const double x = std::cosh(u);
    const double p = std::sinh(u);
    sum += bracket_magnitude(x, p, kin, kB) * p * du;
  }
  return 256.0 * std::numeric_limits<double>::epsilon() * sum;
}

// 1 + 3 qm2 / (2 |q|^2)
double d_coefficient(const Kinematics& kin) {
  const double a = kin.a();
  const double b = kin.b();
  return 1.0 + 1.5 * (a * a - b * b) / (b * b);
}

// arctan(y)/y
double atan_over(double y) {
  if (std::abs(y) < 0.1) {
    double sum = 0.0;
    double term = 1.0;
    const double y2 = y * y;
    for (int k = 0; k < 12; ++k) {
      sum += (k % 2 == 0 ? 1.0 : -1.0) * term / (2.0 * k + 1.0);
      term *= y2;
    }
    return sum;
  }
  return std::atan(y) / y;
}

// (arctan(y) - y/(1+y^2)) / y^3
double atan_defect_over_cube(double y) {
  if (std::abs(y) < 0.1) {
    double sum = 0.0;
    double term = 1.0;
    const double y2 = y * y;
    for (int k = 1; k <= 12; ++k) {
      sum += (k % 2 == 1 ? 1.0 : -1.0) * (2.0 * k) / (2.0 * k + 1.0) * term;
      term *= y2;
    }
    return sum;
  }
  return (std::atan(y) - y / (1.0 + y * y)) / (y * y * y);
}

void require_moment_domain(double a2) {
  if (!(a2 >= 0.0) || !(a2 < 1.0)) {
    throw DomainError("moment integrals need 0 <= a^2 < 1");
  }
}

struct LongwaveValues {
  double bScaled = 0.0;  // (a^2/b^2) B*
  double aStar = 0.0;
  double errEst = 0.0;
};

LongwaveValues longwave_values(double a, const ThermoState& state, double tol) {
  if (!(a > 0.0) || !(a < 1.0)) {
    throw DomainError("long-wavelength scalars need 0 < a < 1");
  }
  const double a2 = a * a;
  const double e2 = state.e2();
  const double unit = e2 / (4.0 * kPi2);
  const MomentIntegrals m = moment_integrals(a2, state, 0.5 * tol * a2 / unit);
  LongwaveValues out;
  out.bScaled = unit * (2.0 / (3.0 * a2) * m.i0 + (1.0 + 14.0 * a2) / (3.0 * a2) * m.i1 +
                        4.0 * a2 * m.i2);
  // A* = D* + (1 + 3 qm2/2|q|^2) B* with a^2 D* = -(e^2/4pi^2)[I0 + (1+2a^2) I1/2]
  // reduces to +(3e^2/2pi^2)[I1 + a^2 I2].
  out.aStar = 1.5 * e2 / kPi2 * (m.i1 + a2 * m.i2);
  out.errEst = unit * m.errEst * (3.0 / a2 + 6.0);
  return out;
}

}  // namespace

double vacuum_C(double qm2, double e2) {
  if (!std::isfinite(qm2)) throw DomainError("qm2 must be finite");
  if (qm2 >= 4.0) {
    throw DomainError("vacuum polarization above the pair threshold is not supported");
  }
  if (std::abs(qm2) < kVacuumSeriesRadius) {
    return e2 / (2.0 * kPi2) * qm2 * vacuum_series_over_q(qm2);
  }
  double hArccot = 0.0;
  if (qm2 > 0.0) {
    const double h = std::sqrt(4.0 / qm2 - 1.0);
    hArccot = h > 0.0 ? h * std::atan(1.0 / h) : 0.0;
  } else {
    const double k = std::sqrt(1.0 - 4.0 / qm2);
    hArccot = k * std::atanh(1.0 / k);
  }
  return -e2 / (12.0 * kPi2) *
         (1.0 / 3.0 + 2.0 * (1.0 + 2.0 / qm2) * (hArccot - 1.0));
}

double vacuum_C_over_qm2(double qm2, double e2) {
  if (std::abs(qm2) < kVacuumSeriesRadius) {
    return e2 / (2.0 * kPi2) * vacuum_series_over_q(qm2);
  }
  return vacuum_C(qm2, e2) / qm2;
}

double sigma_helper(double y) { return y / std::sqrt(std::abs(1.0 - y * y)); }

std::optional<LogKernels> log_kernels(double x, double p, const Kinematics& kin) {
  const double a = kin.a();
  const double b = kin.b();
  if (!(b > 0.0)) throw DomainError("log kernels need b > 0");
  const double beta = b * p;
  const double c1 = a * a - b * b;
  const double c2 = a * a;
  const auto p1 = folded_log(a * x + c1, beta);
  const auto p2 = folded_log(-a * x + c1, beta);
  const auto p3 = folded_log(a * x + c2, beta);
  const auto p4 = folded_log(-a * x + c2, beta);
  if (!p1 || !p2 || !p3 || !p4) return std::nullopt;
  return LogKernels{*p1 + *p2, *p4 - *p3};
}

std::optional<LogKernels> log_kernels(double x, const Kinematics& kin) {
  if (!(x >= 1.0)) throw DomainError("log kernels need x >= 1");
  return log_kernels(x, std::sqrt((x - 1.0) * (x + 1.0)), kin);
}

ScalarValue medium_B_full(const Kinematics& kin, const ThermoState& state, double tol) {
  require_full_kinematics(kin);
  if (state.medium_empty()) return {};
  const double pref = full_prefactor(kin, state.e2());
  const double a = kin.a();
  const double b = kin.b();
  // B* enters eps with the weight (1 - a^2/b^2).
  const double weight = std::max(1.0, a * a / (b * b));
  const auto breaks = locate_log_singularities(kin);
  const auto r = integrate_semi_infinite(
      [&](double x, double p) { return bracket_B(x, p, kin); }, state, breaks,
      quad_options(std::max(tol / (std::abs(pref) * weight), roundoff_floor(kin, state, 1.0))));
  return {pref * r.value, std::abs(pref) * r.errEst};
}

ScalarValue medium_D_full(const Kinematics& kin, const ThermoState& state, double tol) {
  require_full_kinematics(kin);
  if (state.medium_empty()) return {};
  const double pref = full_prefactor(kin, state.e2());
  const auto breaks = locate_log_singularities(kin);
  const auto r = integrate_semi_infinite(
      [&](double x, double p) { return bracket_D(x, p, kin); }, state, breaks,
      quad_options(std::max(tol / std::abs(pref), roundoff_floor(kin, state, 0.0))));
  return {pref * r.value, std::abs(pref) * r.errEst};
}

ScalarValue medium_A_full(const Kinematics& kin, const ThermoState& state, double tol) {
  require_full_kinematics(kin);
  if (state.medium_empty()) return {};
  const double pref = full_prefactor(kin, state.e2());
  const double k = d_coefficient(kin);
  const auto breaks = locate_log_singularities(kin);
  const auto r = integrate_semi_infinite(
      [&](double x, double p) { return bracket_D(x, p, kin) + k * bracket_B(x, p, kin); },
      state, breaks,
      quad_options(std::max(tol / std::abs(pref), roundoff_floor(kin, state, k))));
  return {pref * r.value, std::abs(pref) * r.errEst};
}

MomentIntegrals moment_integrals_quadrature(double a2, const ThermoState& state,
                                            double tol) {
  require_moment_domain(a2);
  MomentIntegrals out;
  if (state.medium_empty()) return out;
  const auto opts = quad_options(tol);
  const auto r0 = integrate_semi_infinite([](double, double p) { return p; }, state, {}, opts);
  const auto r1 = integrate_semi_infinite(
      [a2](double x, double p) { return p / (x * x - a2); }, state, {}, opts);
  const auto r2 = integrate_semi_infinite(
      [a2](double x, double p) {
        const double d = x * x - a2;
        return p / (d * d);
      },
      state, {}, opts);
  out.i0 = r0.value;
  out.i1 = r1.value;
  out.i2 = r2.value;
  out.errEst = std::max({r0.errEst, r1.errEst, r2.errEst});
  return out;
}

MomentIntegrals moment_integrals(double a2, const ThermoState& state, double tol) {
  require_moment_domain(a2);
  if (state.t() > 0.0) return moment_integrals_quadrature(a2, state, tol);
  MomentIntegrals out;
  const double zeta = state.zeta();
  if (zeta <= 1.0) return out;

  // Euler substitution sqrt((x-1)(x+1)) = t (x+1) at n_F = Theta(zeta - x):
  //   I0 = [zeta sqrt(zeta^2-1) - arccosh(zeta)] / 2
  //   I1 = arccosh(zeta) - arctan(s/S)/s,  s = sigma(a), S = sigma(zeta)
  // and, differentiating I1 with ds/d(a^2) = 1 / (2 s (1-a^2)^2),
  //   I2 = [arctan(y) - y/(1+y^2)] / (2 y^3 S^3 (1-a^2)^2),  y = s/S.
  const double root = std::sqrt((zeta - 1.0) * (zeta + 1.0));
  const double arccosh = std::acosh(zeta);
  const double invS = root / zeta;
  const double s = std::sqrt(a2 / (1.0 - a2));
  const double y = s * invS;
  const double oneMinus = 1.0 - a2;
  out.i0 = 0.5 * (zeta * root - arccosh);
  out.i1 = arccosh - invS * atan_over(y);
  out.i2 = atan_defect_over_cube(y) * invS * invS * invS / (2.0 * oneMinus * oneMinus);
  return out;
}

double longwave_B(double a, const ThermoState& state, double tol) {
  return longwave_values(a, state, tol).bScaled;
}

double longwave_A(double a, const ThermoState& state, double tol) {
  return longwave_values(a, state, tol).aStar;
}

StationaryScalars stationary_scalars_quadrature(double qmag, const ThermoState& state,
                                                double tol) {
  if (!(qmag > 0.0)) throw DomainError("stationary scalars need qmag > 0");
  StationaryScalars out;
  if (state.medium_empty()) return out;
  const double e2 = state.e2();
  const double aUnit = e2 / (6.0 * kPi2);
  const double bUnit = e2 / (kPi2 * qmag * qmag);
  const auto ra = integrate_semi_infinite([](double, double p) { return 1.0 / p; }, state,
                                          {}, quad_options(tol / aUnit));
  const auto rb = integrate_semi_infinite(
      [](double x, double p) { return (1.5 * x * x - 0.5) / p; }, state, {},
      quad_options(tol / bUnit));
  out.aStar = -aUnit * ra.value;
  out.bStar = bUnit * rb.value;
  out.errEst = std::max(aUnit * ra.errEst, bUnit * rb.errEst);
  return out;
}

StationaryScalars stationary_scalars(double qmag, const ThermoState& state, double tol) {
  if (!(qmag > 0.0)) throw DomainError("stationary scalars need qmag > 0");
  if (state.t() > 0.0) return stationary_scalars_quadrature(qmag, state, tol);
  StationaryScalars out;
  const double zeta = state.zeta();
  if (zeta <= 1.0) return out;
  const double e2 = state.e2();
  const double arccosh = std::acosh(zeta);
  const double root = std::sqrt((zeta - 1.0) * (zeta + 1.0));
  out.aStar = -e2 / (6.0 * kPi2) * arccosh;
  out.bStar = e2 / (4.0 * kPi2) * (arccosh + 3.0 * zeta * root) / (qmag * qmag);
  return out;
}

double drude_g_e(double zeta) {
  const double s = sigma_helper(zeta);
  return std::acosh(zeta) - 1.0 / s - 7.0 / (6.0 * s * s * s);
}

double drude_g_m(double zeta) {
  const double s = sigma_helper(zeta);
  return std::acosh(zeta) - 1.0 / s - 14.0 / (15.0 * s * s * s);
}

double drude_ae2(double zeta, double e2) {
  if (zeta <= 1.0) return 0.0;
  const double r2 = (zeta - 1.0) * (zeta + 1.0);
  return e2 / (12.0 * kPi2) * r2 * std::sqrt(r2) / zeta;
}

DrudeResponse drude_scalars(double a, const ThermoState& state) {
  if (state.t() != 0.0) throw DomainError("Drude forms are derived at t = 0");
  if (!(state.zeta() > 1.0)) throw DomainError("Drude forms need zeta > 1");
  if (!(a > 0.0)) throw DomainError("Drude forms need a > 0");
  const double e2 = state.e2();
  const double zeta = state.zeta();
  DrudeResponse out;
  out.ae2 = drude_ae2(zeta, e2);
  out.am2 = 2.0 * out.ae2;
  out.eps = 1.0 - out.ae2 / (a * a) + e2 / (3.0 * kPi2) * drude_g_e(zeta);
  out.muInv = 1.0 - out.am2 / (a * a) - 5.0 * e2 / (6.0 * kPi2) * drude_g_m(zeta);
  return out;
}

Regime select_regime(const Kinematics& kin, const ThermoState& state) {
  if (state.medium_empty()) return Regime::Vacuum;
  const double a = kin.a();
  const double b = kin.b();
  if (kin.omega() == 0.0 && b < kLongwaveMaxB) return Regime::Stationary;
  if (a > 0.0 && b < kLongwaveMaxB && a < kLongwaveMaxA &&
      b <= kLongwaveMaxBOverA2 * a * a) {
    return Regime::LongWavelength;
  }
  return Regime::FullKinematics;
}

ScalarTriple evaluate_scalars(const Kinematics& kin, const ThermoState& state,
                              RegimeChoice choice, double tol) {
  Regime regime = Regime::FullKinematics;
  switch (choice) {
    case RegimeChoice::Auto:
      regime = select_regime(kin, state);
      break;
    case RegimeChoice::Full:
      regime = Regime::FullKinematics;
      break;
    case RegimeChoice::LongWavelength:
      regime = Regime::LongWavelength;
      break;
    case RegimeChoice::Stationary:
      regime = Regime::Stationary;
      break;
    case RegimeChoice::Vacuum:
      regime = Regime::Vacuum;
      break;
  }

  const double e2 = state.e2();
  ScalarTriple out;
  out.regime = regime;
  switch (regime) {
    case Regime::Vacuum:
      out.cStar = vacuum_C(kin.qm2(), e2);
      break;
    case Regime::Stationary: {
      if (kin.omega() != 0.0) throw DomainError("stationary regime needs omega = 0");
      const auto s = stationary_scalars(kin.qmag(), state, tol);
      out.aStar = s.aStar;
      out.bStar = s.bStar;
      // 1 + 3 qm2 / 2|q|^2 = -1/2 at omega = 0.
      out.dStar = s.aStar + 0.5 * s.bStar;
      out.cStar = vacuum_C(kin.qm2(), e2);
      out.errEst = s.errEst;
      break;
    }
    case Regime::LongWavelength: {
      const double a = kin.a();
      const double b = kin.b();
      const auto lw = longwave_values(a, state, tol);
      const double ratio = (b * b) / (a * a);
      out.aStar = lw.aStar;
      out.bStar = ratio * lw.bScaled;
      out.bScaled = lw.bScaled;
      out.dStar = lw.aStar - out.bStar - 1.5 * (1.0 - ratio) * lw.bScaled;
      out.cStar = vacuum_C(kin.qm2(), e2);
      out.errEst = lw.errEst;
      break;
    }
    case Regime::FullKinematics: {
      const auto bs = medium_B_full(kin, state, tol);
      const auto as = medium_A_full(kin, state, tol);
      out.aStar = as.value;
      out.bStar = bs.value;
      out.dStar = as.value - d_coefficient(kin) * bs.value;
      if (kin.a() > 0.0) {
        const double r = kin.a() / kin.b();
        out.bScaled = r * r * bs.value;
      }
      out.cStar = vacuum_C(kin.qm2(), e2);
      out.errEst = std::max(as.errEst, bs.errEst);
      break;
    }
  }
  return out;
}

}  // namespace relplasma
