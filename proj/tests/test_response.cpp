#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "relplasma/response.hpp"

using namespace relplasma;

namespace {

const double kPi2 = M_PI * M_PI;

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Mat3 rotation(double alpha, double beta, double gamma) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const Mat3 rz1{{{ca, -sa, 0}, {sa, ca, 0}, {0, 0, 1}}};
  const Mat3 ry{{{cb, 0, sb}, {0, 1, 0}, {-sb, 0, cb}}};
  const Mat3 rz2{{{cg, -sg, 0}, {sg, cg, 0}, {0, 0, 1}}};
  auto mul = [](const Mat3& x, const Mat3& y) {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) m[i][j] += x[i][k] * y[k][j];
    return m;
  };
  return mul(rz1, mul(ry, rz2));
}

}  // namespace

TEST_CASE("empty scalars give the trivial response") {
  ScalarTriple s;
  s.regime = Regime::FullKinematics;
  const auto r = assemble_responses(s, make_kinematics(0.3, 0.2));
  CHECK(r.eps == 1.0);
  CHECK(r.muInv == 1.0);
  CHECK(r.epsPrime == 0.0);
  CHECK(r.muPrimeInv == 0.0);
  CHECK(r.tau == 0.0);
  CHECK(r.sigma == 0.0);
}

TEST_CASE("vacuum-only response") {
  const Kinematics kin = make_kinematics(0.3, 0.2);
  ScalarTriple s;
  s.cStar = 1e-4;
  s.regime = Regime::Vacuum;
  const auto r = assemble_responses(s, kin);
  const double qm2 = 0.05;
  CHECK(r.epsPrime == doctest::Approx(0.04 / qm2 * 1e-4));
  CHECK(r.muPrimeInv == -r.epsPrime);
  CHECK(r.tau == doctest::Approx(0.3 * 0.2 / qm2 * 1e-4));
  CHECK(r.sigma == r.tau);
  CHECK(r.eps == doctest::Approx(1.0 + (2.0 - 0.09 / qm2) * 1e-4));
  CHECK(r.muInv == doctest::Approx(1.0 + (2.0 + 0.04 / qm2) * 1e-4));
}

TEST_CASE("generic assembly against hand expansion") {
  const Kinematics kin = make_kinematics(0.5, 0.25);
  ScalarTriple s;
  s.aStar = 0.01;
  s.bStar = 0.02;
  s.cStar = 0.003;
  s.regime = Regime::FullKinematics;
  const auto r = assemble_responses(s, kin);
  const double w2 = 0.25, q2 = 0.0625, qm2 = w2 - q2;
  CHECK(r.eps == doctest::Approx(1 + (2 - w2 / qm2) * 0.003 + 0.01 + (1 - w2 / q2) * 0.02));
  CHECK(r.muInv == doctest::Approx(1 + (2 + q2 / qm2) * 0.003 + 0.01 - 2 * (w2 / q2) * 0.02));
  CHECK(r.epsPrime == doctest::Approx(q2 / qm2 * 0.003 - 0.01));
  CHECK(r.tau == doctest::Approx(0.5 / 0.25 * (q2 / qm2 * 0.003 - 0.02)));
}

TEST_CASE("long-wavelength assembly at zero wavevector") {
  ScalarTriple s;
  s.aStar = 0.01;
  s.bScaled = 0.5;
  s.cStar = 0.002;
  s.regime = Regime::LongWavelength;
  const auto r = assemble_responses(s, make_kinematics(0.2, 0.0));
  CHECK(r.eps == doctest::Approx(1 + 0.002 + 0.01 - 0.5));
  CHECK(r.muInv == doctest::Approx(1 + 2 * 0.002 + 0.01 - 1.0));
  CHECK(r.epsPrime == doctest::Approx(-0.01));
  CHECK(r.tau == 0.0);
}

TEST_CASE("long-wavelength and generic forms agree at small b") {
  const ThermoState st(0.0, 2.0);
  const Kinematics kin = make_kinematics(0.2, 2e-4);
  const auto lw = evaluate_responses(kin, st, RegimeChoice::LongWavelength);
  const auto full = evaluate_responses(kin, st, RegimeChoice::Full);
  CHECK(std::abs(lw.full.eps - full.full.eps) < 1e-5);
  CHECK(std::abs(lw.full.muInv - full.full.muInv) < 1e-5);
  CHECK(std::abs(lw.full.tau - full.full.tau) < 1e-5);
}

TEST_CASE("assembly refuses the light cone and a missing wavevector") {
  ScalarTriple s;
  s.regime = Regime::FullKinematics;
  CHECK_THROWS_AS(assemble_responses(s, make_kinematics(0.2, 0.2)), LightConeSingular);
  CHECK_THROWS_AS(assemble_responses(s, make_kinematics(0.2, 0.0)), DomainError);
}

TEST_CASE("identities hold on random points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const ThermoState st(unit(rng) < 0.5 ? 0.0 : 0.1 * unit(rng), 3.0 * unit(rng));
    const Kinematics kin = make_kinematics(1.5 * unit(rng), 0.01 + 1.5 * unit(rng));
    if (std::abs(kin.qm2()) < 1e-6) continue;
    const auto ev = evaluate_responses(kin, st);
    CHECK(ev.full.epsPrime + ev.full.muPrimeInv == 0.0);
    CHECK(ev.full.tau - ev.full.sigma == 0.0);
  }
}

TEST_CASE("susceptibilities") {
  ResponseSet a;
  a.eps = 1.5;
  a.muInv = 0.7;
  a.epsPrime = 0.2;
  a.muPrimeInv = -0.2;
  a.tau = 0.1;
  a.sigma = 0.1;
  const auto same = susceptibilities(a, a);
  CHECK(same.chiE == 0.0);
  CHECK(same.chiM == 0.0);
  CHECK(same.chiEM == 0.0);
  const ResponseSet vac;
  const auto chi = susceptibilities(a, vac);
  CHECK(chi.chiE == doctest::Approx(0.5));
  CHECK(chi.chiM == doctest::Approx(0.3));
  CHECK(chi.chiEPrime == doctest::Approx(0.2));
  CHECK(chi.chiMPrime == doctest::Approx(0.2));
  CHECK(chi.chiEM == doctest::Approx(0.1));
  CHECK(chi.chiME == doctest::Approx(-0.1));
}

TEST_CASE("static susceptibilities at small wavevector") {
  const ThermoState st(0.0, 2.0);
  const auto ev = evaluate_responses(make_kinematics(0.0, 2e-4), st, RegimeChoice::Full);
  const double expected = kDefaultE2 / (6.0 * kPi2) * std::acosh(2.0);
  CHECK(std::abs(ev.chi.chiEPrime - expected) < 1e-6);
  CHECK(std::abs(ev.chi.chiM - expected) < 1e-6);
  CHECK(std::abs(ev.chi.chiMPrime - expected) < 1e-6);
}

TEST_CASE("nonrelativistic magnetic susceptibility") {
  const double pF = 1e-2;
  const ThermoState st(0.0, 1.0 + 0.5 * pF * pF);
  const auto ev = evaluate_responses(make_kinematics(0.0, 2e-3), st, RegimeChoice::Stationary);
  const double nr = kDefaultE2 / (4.0 * kPi2) * pF - kDefaultE2 / (12.0 * kPi2) * pF;
  CHECK(std::abs(ev.chi.chiM / nr - 1.0) < 5e-3);
  CHECK(ev.chi.chiM / ev.chi.chiE < 1e-3);
}

TEST_CASE("susceptibilities vanish near the empty gas") {
  const ThermoState st(0.0, 1.0 + 1e-6);
  const auto ev = evaluate_responses(make_kinematics(0.3, 0.2), st, RegimeChoice::Full);
  CHECK(std::abs(ev.chi.chiE) < 1e-4);
  CHECK(std::abs(ev.chi.chiM) < 1e-4);
  CHECK(std::abs(ev.chi.chiEPrime) < 1e-4);
  CHECK(std::abs(ev.chi.chiEM) < 1e-4);
}

TEST_CASE("constitutive tensors along z") {
  ResponseSet r;
  r.eps = 2.0;
  r.muInv = 0.5;
  r.tau = 0.3;
  r.sigma = 0.3;
  const auto c = constitutive_tensors(r, {0.0, 0.0, 3.0});
  CHECK(c.qhat[2] == 1.0);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) CHECK(c.epsT[j][k] == (j == k ? 2.0 : 0.0));
  CHECK(c.tauT[0][1] == 0.3);
  CHECK(c.tauT[1][0] == -0.3);
  for (int j = 0; j < 3; ++j) {
    CHECK(c.tauT[j][2] == 0.0);
    CHECK(c.tauT[2][j] == 0.0);
  }
}

TEST_CASE("field application matches vector algebra") {
  ResponseSet r;
  r.eps = 1.7;
  r.epsPrime = 0.4;
  r.muInv = 0.8;
  r.muPrimeInv = -0.4;
  r.tau = 0.25;
  r.sigma = 0.25;
  const Vec3 qdir{1.0, 2.0, 2.0};
  const Vec3 n{1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
  const Vec3 e{1.0, 0.0, 0.0};
  const Vec3 b{0.0, 1.0, 0.0};
  const auto f = apply(constitutive_tensors(r, qdir), e, b);
  // D = eps E + eps' (n.E) n + tau (B x n), H = mu^-1 B + mu'^-1 (n.B) n + sigma (E x n)
  const Vec3 bxn = cross(b, n);
  const Vec3 exn = cross(e, n);
  for (int j = 0; j < 3; ++j) {
    CHECK(f.d[j] == doctest::Approx(1.7 * e[j] + 0.4 * dot(n, e) * n[j] + 0.25 * bxn[j]));
    CHECK(f.h[j] == doctest::Approx(0.8 * b[j] - 0.4 * dot(n, b) * n[j] + 0.25 * exn[j]));
  }
}

TEST_CASE("constitutive tensors rotate covariantly") {
  ResponseSet r;
  r.eps = 1.3;
  r.epsPrime = -0.2;
  r.muInv = 0.9;
  r.muPrimeInv = 0.2;
  r.tau = 0.05;
  r.sigma = 0.05;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  const Vec3 q{0.3, -0.5, 0.8};
  const auto base = constitutive_tensors(r, q);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat3 R = rotation(ang(rng), ang(rng), ang(rng));
    Vec3 rq{};
    for (int i = 0; i < 3; ++i) rq[i] = R[i][0] * q[0] + R[i][1] * q[1] + R[i][2] * q[2];
    const auto rotated = constitutive_tensors(r, rq);
    auto conj = [&](const Mat3& m) {
      Mat3 out{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) out[i][j] += R[i][k] * m[k][l] * R[j][l];
      return out;
    };
    const Mat3 e = conj(base.epsT);
    const Mat3 t = conj(base.tauT);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(rotated.epsT[i][j] - e[i][j]) < 1e-12);
        CHECK(std::abs(rotated.tauT[i][j] - t[i][j]) < 1e-12);
      }
    }
    CHECK(std::abs(std::hypot(rotated.qhat[0], rotated.qhat[1], rotated.qhat[2]) - 1.0) < 1e-12);
  }
}

TEST_CASE("constitutive tensors need a direction") {
  CHECK_THROWS_AS(constitutive_tensors(ResponseSet{}, {0.0, 0.0, 0.0}), DomainError);
}
