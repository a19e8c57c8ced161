#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "relplasma/response.hpp"
#include "relplasma/scalar_functions.hpp"

using namespace relplasma;

namespace {

constexpr double kE2 = kDefaultE2;
const double kPi2 = M_PI * M_PI;

double rel(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }

// Reference values from 30-digit quadrature of the full-kinematics integrals.
struct FrozenPoint {
  double omega, q, t, zeta, bStar, aStar;
};
const FrozenPoint kFrozen[] = {
    {0.2, 0.5, 0.0, 2.0, 0.114978410403225, 0.0392897572131657},
    {0.6, 0.3, 0.1, 1.5, 0.00401075237845183, 0.00531162793971769},
    {0.0, 0.4, 0.0, 2.0, 0.198306550434411, -0.00201168784641199},
    {1.0, 0.2, 0.0, 3.0, 0.00145943650376128, 0.0151282299951983},
};

double direct_L(double sa, double sb, double c, double a, double b, double x) {
  return std::log(std::abs(sa * a * x + sb * b * std::sqrt(x * x - 1.0) + c));
}

}  // namespace

TEST_CASE("vacuum polarization vanishes at zero and has the small-q slope") {
  CHECK(vacuum_C(0.0, kE2) == 0.0);
  CHECK(vacuum_C(1e-3, kE2) * 60.0 * kPi2 / (kE2 * 1e-3) == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(vacuum_C_over_qm2(0.0, kE2) == doctest::Approx(kE2 / (60.0 * kPi2)).epsilon(1e-15));
}

TEST_CASE("vacuum polarization below threshold") {
  const double c = vacuum_C(0.4, kE2);
  CHECK(rel(c, kE2 * 0.4 / (60.0 * kPi2)) < 0.12);
  CHECK(c == doctest::Approx(6.47824190425524e-5).epsilon(1e-12));
}

TEST_CASE("vacuum polarization spacelike continuation") {
  CHECK(vacuum_C(-1.0, kE2) == doctest::Approx(-1.40403802210434e-4).epsilon(1e-12));
}

TEST_CASE("vacuum polarization is continuous across the series switch") {
  for (double s : {1.0, -1.0}) {
    const double below = vacuum_C(s * 0.999999e-3, kE2) / (s * 0.999999e-3);
    const double above = vacuum_C(s * 1.000001e-3, kE2) / (s * 1.000001e-3);
    CHECK(rel(below, above) < 1e-8);
  }
}

TEST_CASE("vacuum polarization refuses the pair region") {
  CHECK_THROWS_AS(vacuum_C(4.0, kE2), DomainError);
  CHECK_THROWS_AS(vacuum_C(5.0, kE2), DomainError);
  CHECK_NOTHROW(vacuum_C(3.99, kE2));
}

TEST_CASE("log kernels match the direct sum of logarithms") {
  const Kinematics kin = make_kinematics(2.0, 1.0);
  const double a = kin.a();
  const double b = kin.b();
  const double x = 2.0;
  const double c1 = a * a - b * b;
  const double c2 = a * a;
  const double f1 = -direct_L(1, 1, c1, a, b, x) - direct_L(-1, 1, c1, a, b, x) +
                    direct_L(1, -1, c1, a, b, x) + direct_L(-1, -1, c1, a, b, x);
  const double f2 = direct_L(1, 1, c2, a, b, x) + direct_L(-1, -1, c2, a, b, x) -
                    direct_L(1, -1, c2, a, b, x) - direct_L(-1, 1, c2, a, b, x);
  const auto k = log_kernels(x, kin);
  REQUIRE(k);
  CHECK(k->f1 == doctest::Approx(f1).epsilon(1e-13));
  CHECK(k->f2 == doctest::Approx(f2).epsilon(1e-13));
}

TEST_CASE("f2 vanishes for a static probe") {
  const Kinematics kin = make_kinematics(0.0, 0.7);
  for (double x : {1.01, 1.3, 2.0, 5.0}) {
    const auto k = log_kernels(x, kin);
    REQUIRE(k);
    CHECK(k->f2 == 0.0);
  }
}

TEST_CASE("f1 at small b follows its leading term") {
  // f1 / sqrt(x^2-1) -> -(2b/a) [1/(x + a) + 1/(a - x)] ... summed over the
  // two L1 pairs: d/d(beta) of ln|(c +- a x - beta)/(c +- a x + beta)|.
  const double a = 0.3;
  const double b = 1e-5;
  const Kinematics kin = make_kinematics(2.0 * a, 2.0 * b);
  for (double x : {1.2, 1.7, 2.5}) {
    const double p = std::sqrt(x * x - 1.0);
    const double lead = -2.0 * b * p * (1.0 / (a * x + a * a) + 1.0 / (-a * x + a * a));
    const auto k = log_kernels(x, kin);
    REQUIRE(k);
    CHECK(rel(k->f1, lead) < 1e-8);
  }
}

TEST_CASE("log kernels need a wavevector") {
  CHECK_THROWS_AS(log_kernels(1.5, make_kinematics(1.0, 0.0)), DomainError);
}

TEST_CASE("full-kinematics scalars against frozen references") {
  for (const auto& p : kFrozen) {
    CAPTURE(p.omega);
    CAPTURE(p.q);
    const ThermoState s(p.t, p.zeta);
    const Kinematics kin = make_kinematics(p.omega, p.q);
    const auto b = medium_B_full(kin, s);
    const auto a = medium_A_full(kin, s);
    CHECK(std::abs(b.value - p.bStar) <= 1e-9);
    CHECK(std::abs(a.value - p.aStar) <= 1e-9);
    CHECK(b.errEst <= 1e-9);
    CHECK(a.errEst <= 1e-9);
  }
}

TEST_CASE("D* is A* less the B* combination") {
  const ThermoState s(0.0, 2.0);
  const Kinematics kin = make_kinematics(0.2, 0.5);
  const double k = 1.0 + 1.5 * kin.qm2() / (kin.qmag() * kin.qmag());
  const double d = medium_D_full(kin, s).value;
  CHECK(std::abs(d - (medium_A_full(kin, s).value - k * medium_B_full(kin, s).value)) < 1e-9);
  const auto triple = evaluate_scalars(kin, s, RegimeChoice::Full);
  CHECK(std::abs(triple.dStar - (triple.aStar - k * triple.bStar)) < 1e-15);
}

TEST_CASE("full-kinematics scalars vanish without a Fermi sea") {
  const ThermoState s(0.0, 1.0);
  const Kinematics kin = make_kinematics(0.3, 0.2);
  CHECK(medium_B_full(kin, s).value == 0.0);
  CHECK(medium_A_full(kin, s).value == 0.0);
  CHECK(medium_D_full(kin, s).value == 0.0);
}

TEST_CASE("full-kinematics scalars refuse the light cone") {
  const ThermoState s(0.0, 2.0);
  CHECK_THROWS_AS(medium_B_full(make_kinematics(0.3, 0.3), s), LightConeSingular);
  CHECK_THROWS_AS(medium_A_full(make_kinematics(0.3, 0.3 + 1e-9), s), LightConeSingular);
  CHECK_THROWS_AS(medium_B_full(make_kinematics(0.3, 0.0), s), DomainError);
}

TEST_CASE("static full-kinematics A* approaches the closed form") {
  const ThermoState s(0.0, 2.0);
  const double a = medium_A_full(make_kinematics(0.0, 2e-4), s).value;
  CHECK(std::abs(a + kE2 / (6.0 * kPi2) * std::acosh(2.0)) < 1e-6);
}

TEST_CASE("static full-kinematics B* approaches the Debye mass") {
  // At omega = 0 the q -> 0 limit of the bracket integral is
  // (e^2/pi^2) int dx n_F x = (e^2/pi^2) zeta sqrt(zeta^2-1) at t = 0.
  const ThermoState s(0.0, 2.0);
  const double q = 2e-3;
  const double b = medium_B_full(make_kinematics(0.0, q), s).value;
  CHECK(rel(q * q * b, kE2 / kPi2 * 2.0 * std::sqrt(3.0)) < 1e-5);
}

TEST_CASE("moment integrals at zero temperature") {
  const ThermoState s(0.0, 2.0);
  const auto m = moment_integrals(0.01, s);
  CHECK(m.i0 == doctest::Approx(0.5 * (2.0 * std::sqrt(3.0) - std::acosh(2.0))).epsilon(1e-14));
  CHECK(m.i1 == doctest::Approx(0.453109538850556).epsilon(1e-13));
  CHECK(m.i2 == doctest::Approx(0.218910277333768).epsilon(1e-13));
  const auto q = moment_integrals_quadrature(0.01, s);
  CHECK(rel(q.i0, m.i0) < 1e-8);
  CHECK(rel(q.i1, m.i1) < 1e-8);
  CHECK(rel(q.i2, m.i2) < 1e-8);
}

TEST_CASE("moment integrals across the series switch and at a = 0") {
  for (double zeta : {1.01, 1.5, 3.0, 10.0}) {
    const ThermoState s(0.0, zeta);
    for (double a2 : {0.0, 1e-6, 0.001, 0.1, 0.5, 0.9}) {
      CAPTURE(zeta);
      CAPTURE(a2);
      const auto m = moment_integrals(a2, s);
      const auto q = moment_integrals_quadrature(a2, s, 1e-13);
      CHECK(rel(q.i1, m.i1) < 1e-9);
      CHECK(rel(q.i2, m.i2) < 1e-9);
    }
  }
}

TEST_CASE("second moment is the a^2 derivative of the first") {
  const ThermoState s(0.0, 2.0);
  const double h = 1e-4;
  const double fd = (moment_integrals(0.01 + h, s).i1 - moment_integrals(0.01 - h, s).i1) / (2 * h);
  CHECK(rel(moment_integrals(0.01, s).i2, fd) < 1e-5);
}

TEST_CASE("moment integrals vanish without a Fermi sea") {
  const auto m = moment_integrals(0.3, ThermoState(0.0, 1.0));
  CHECK(m.i0 == 0.0);
  CHECK(m.i1 == 0.0);
  CHECK(m.i2 == 0.0);
  CHECK_THROWS_AS(moment_integrals(1.0, ThermoState(0.0, 2.0)), DomainError);
}

TEST_CASE("long-wavelength scalars from the moments") {
  const ThermoState s(0.0, 2.0);
  const double a = 0.1;
  const auto m = moment_integrals(a * a, s);
  const double unit = kE2 / (4.0 * kPi2);
  const double p = unit * (2.0 / (3.0 * a * a) * m.i0 + (1.0 + 14.0 * a * a) / (3.0 * a * a) * m.i1 +
                           4.0 * a * a * m.i2);
  CHECK(longwave_B(a, s) == doctest::Approx(p).epsilon(1e-14));
  CHECK(longwave_A(a, s) == doctest::Approx(1.5 * kE2 / kPi2 * (m.i1 + a * a * m.i2)).epsilon(1e-14));
  CHECK(longwave_A(a, ThermoState(0.0, 1.0)) == 0.0);
  CHECK(longwave_B(a, ThermoState(0.0, 1.0)) == 0.0);
  CHECK_THROWS_AS(longwave_A(0.0, s), DomainError);
  CHECK_THROWS_AS(longwave_B(1.0, s), DomainError);
}

TEST_CASE("full kinematics approaches the long-wavelength scalars") {
  const double b = 1e-4;
  for (double zeta : {1.5, 2.0, 5.0}) {
    const ThermoState s(0.0, zeta);
    for (double a : {0.05, 0.1}) {
      const Kinematics kin = make_kinematics(2.0 * a, 2.0 * b);
      CHECK(rel(medium_B_full(kin, s).value * a * a / (b * b), longwave_B(a, s)) < 1e-3);
      CHECK(rel(medium_A_full(kin, s).value, longwave_A(a, s)) < 1e-3);
    }
  }
}

TEST_CASE("the full-to-long-wavelength gap closes like b^2") {
  const ThermoState s(0.0, 2.0);
  const double a = 0.01;
  auto gap = [&](double b) {
    return medium_A_full(make_kinematics(2.0 * a, 2.0 * b), s).value - longwave_A(a, s);
  };
  const double ratio = gap(5e-5) / gap(2.5e-5);
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("stationary scalars") {
  const ThermoState s(0.0, 2.0);
  const auto c = stationary_scalars(0.1, s);
  const double mtf2 = kE2 / (4.0 * kPi2) * (std::acosh(2.0) + 6.0 * std::sqrt(3.0));
  CHECK(c.aStar == doctest::Approx(-kE2 / (6.0 * kPi2) * std::acosh(2.0)).epsilon(1e-15));
  CHECK(c.bStar == doctest::Approx(mtf2 / 0.01).epsilon(1e-15));
  const auto q = stationary_scalars_quadrature(0.1, s);
  CHECK(rel(q.aStar, c.aStar) < 1e-10);
  CHECK(rel(q.bStar, c.bStar) < 1e-10);
  const auto empty = stationary_scalars(0.1, ThermoState(0.0, 1.0));
  CHECK(empty.aStar == 0.0);
  CHECK(empty.bStar == 0.0);
}

TEST_CASE("stationary scalars at finite temperature approach the cold limit") {
  const auto warm = stationary_scalars(0.1, ThermoState(1e-4, 2.0));
  const auto cold = stationary_scalars(0.1, ThermoState(0.0, 2.0));
  CHECK(rel(warm.aStar, cold.aStar) < 1e-6);
  CHECK(rel(warm.bStar, cold.bStar) < 1e-6);
}

TEST_CASE("Drude forms") {
  const ThermoState s(0.0, 2.0);
  const double ae2 = kE2 / (12.0 * kPi2) * 1.5 * std::sqrt(3.0);
  CHECK(drude_ae2(2.0, kE2) == doctest::Approx(ae2).epsilon(1e-15));
  const auto d = drude_scalars(0.5 * std::sqrt(ae2), s);
  CHECK(d.am2 == 2.0 * d.ae2);
  CHECK(d.eps == doctest::Approx(-3.001).epsilon(1e-3));
  CHECK(d.muInv == doctest::Approx(-6.999).epsilon(1e-3));
  CHECK(drude_g_e(2.0) == doctest::Approx(-0.307).epsilon(1e-3));
  CHECK(drude_ae2(1.0, kE2) == 0.0);
  CHECK_THROWS_AS(drude_scalars(0.1, ThermoState(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(drude_scalars(0.1, ThermoState(0.1, 2.0)), DomainError);
}

TEST_CASE("assembled long-wavelength response tracks the Drude forms") {
  // The O(a^0) terms of the assembled response differ from the Drude forms
  // by fixed multiples of I2(0); what is left is O(a^2).
  const ThermoState s(0.0, 2.0);
  const double i2 = moment_integrals(0.0, s).i2;
  const double offE = kE2 / (12.0 * kPi2) * 13.0 * i2;
  const double offM = -kE2 / (12.0 * kPi2) * 30.0 * i2;
  const double ae = std::sqrt(drude_ae2(2.0, kE2));
  double prevE = 0.0;
  double prevM = 0.0;
  for (double f : {0.3, 0.15, 0.075}) {
    const double a = f * ae;
    const auto ev = evaluate_responses(make_kinematics(2.0 * a, 0.0), s,
                                       RegimeChoice::LongWavelength);
    const auto d = drude_scalars(a, s);
    const double ce = (ev.full.eps - d.eps - offE) / (a * a);
    const double cm = (ev.full.muInv - d.muInv - offM) / (a * a);
    if (prevE != 0.0) {
      CHECK(ce == doctest::Approx(prevE).epsilon(0.05));
      CHECK(cm == doctest::Approx(prevM).epsilon(0.05));
    }
    prevE = ce;
    prevM = cm;
  }
}

TEST_CASE("regime selection") {
  const ThermoState medium(0.0, 2.0);
  CHECK(select_regime(make_kinematics(0.3, 0.2), ThermoState(0.0, 1.0)) == Regime::Vacuum);
  CHECK(select_regime(make_kinematics(0.0, 1e-4), medium) == Regime::Stationary);
  CHECK(select_regime(make_kinematics(0.0, 0.1), medium) == Regime::FullKinematics);
  CHECK(select_regime(make_kinematics(0.2, 1e-4), medium) == Regime::LongWavelength);
  CHECK(select_regime(make_kinematics(0.02, 1e-4), medium) == Regime::FullKinematics);
  CHECK(select_regime(make_kinematics(1.9, 1e-4), medium) == Regime::FullKinematics);
  CHECK(select_regime(make_kinematics(0.2, 0.3), medium) == Regime::FullKinematics);
}

TEST_CASE("evaluate_scalars by regime") {
  const ThermoState s(0.0, 2.0);
  const auto lw = evaluate_scalars(make_kinematics(0.2, 2e-4), s, RegimeChoice::LongWavelength);
  CHECK(lw.regime == Regime::LongWavelength);
  CHECK(lw.bScaled == doctest::Approx(longwave_B(0.1, s)));
  CHECK(lw.bStar == doctest::Approx(1e-6 * lw.bScaled));
  const auto full = evaluate_scalars(make_kinematics(0.2, 2e-4), s, RegimeChoice::Full);
  CHECK(rel(full.bScaled, lw.bScaled) < 1e-3);
  const auto st = evaluate_scalars(make_kinematics(0.0, 0.1), s, RegimeChoice::Stationary);
  CHECK(st.dStar == doctest::Approx(st.aStar + 0.5 * st.bStar));
  const auto vac = evaluate_scalars(make_kinematics(0.3, 0.1), s, RegimeChoice::Vacuum);
  CHECK(vac.aStar == 0.0);
  CHECK(vac.cStar == vacuum_C(0.08, kE2));
  CHECK_THROWS_AS(evaluate_scalars(make_kinematics(0.1, 0.1), s, RegimeChoice::Stationary),
                  DomainError);
}
