#include "relplasma/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "relplasma/cli.hpp"
#include "relplasma/dispersion.hpp"
#include "relplasma/response.hpp"
#include "relplasma/scalar_functions.hpp"

namespace relplasma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double rel(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

std::string format_check(const CheckResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": measured "
      << r.measured << "; expected " << r.expected;
  return out.str();
}

double vacuum_C_spectral(double qm2, double e2, int intervals) {
  if (intervals % 2) ++intervals;
  auto g = [&](double v) {
    const double u = 1.0 - v * v;
    return 2.0 * v * v * (1.0 + 0.5 * u) / (4.0 - qm2 * u);
  };
  const double h = 1.0 / intervals;
  double sum = g(0.0) + g(1.0);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * g(i * h);
  return qm2 / kPi * e2 / (12.0 * kPi) * sum * h / 3.0;
}

MonteCarloEstimate lindhard_monte_carlo(double qmag, const NRState& nr, double e2,
                                        std::uint64_t samples, std::uint64_t seed) {
  const double pcut = std::sqrt(2.0 * (std::max(nr.xiPrime(), 0.0) + 40.0 * nr.t()));
  const double radius = pcut + 0.5 * qmag;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double sum = 0.0;
  double sum2 = 0.0;
  std::uint64_t taken = 0;
  while (taken < samples) {
    const double x = unit(rng);
    const double y = unit(rng);
    const double z = unit(rng);
    const double r2 = x * x + y * y + z * z;
    if (r2 > 1.0) continue;
    ++taken;
    const double px = radius * x;
    const double py = radius * y;
    const double pz = radius * z;
    const double perp = px * px + py * py;
    const double up = pz + 0.5 * qmag;
    const double down = pz - 0.5 * qmag;
    const double nUp = nr_occupation(std::sqrt(perp + up * up), nr);
    const double nDown = nr_occupation(std::sqrt(perp + down * down), nr);
    const double de = pz * qmag;
    const double f = de != 0.0 ? (nUp - nDown) / de : 0.0;
    sum += f;
    sum2 += f * f;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(sum2 / n - mean * mean, 0.0);
  const double volume = 4.0 * kPi / 3.0 * radius * radius * radius;
  const double scale = -e2 / (qmag * qmag) * volume / (4.0 * kPi * kPi2);
  return {scale * mean, std::abs(scale) * std::sqrt(var / (n - 1.0))};
}

CheckResult check_stationary_closed_form() {
  CheckResult r{1, "stationary chi'_e (zeta=2, t=0, omega=0, b=1e-4)", false, "", ""};
  const ThermoState s(0.0, 2.0);
  const auto ev = evaluate_responses(make_kinematics(0.0, 2e-4), s, RegimeChoice::Full);
  const double expected = kDefaultE2 / (6.0 * kPi2) * std::acosh(2.0);
  const double diff = std::abs(ev.chi.chiEPrime - expected);
  r.pass = diff <= 1e-6;
  r.measured = num(ev.chi.chiEPrime) + " (|diff| " + num(diff) + ")";
  r.expected = num(expected) + " within 1e-6";
  return r;
}

CheckResult check_thomas_fermi() {
  CheckResult r{2, "Thomas-Fermi mass", false, "", ""};
  const ThermoState s(0.0, 2.0);
  const double quad = thomas_fermi_mass2_quadrature(s);
  const double closed = kDefaultE2 / (4.0 * kPi2) * (std::acosh(2.0) + 6.0 * std::sqrt(3.0));
  const double dev = rel(quad, closed);
  const double pF = 1e-2;
  const ThermoState nrs(0.0, 1.0 + 0.5 * pF * pF);
  const double quadNr = thomas_fermi_mass2_quadrature(nrs);
  const double nrForm = kDefaultE2 / kPi2 * pF;
  const double devNr = rel(quadNr, nrForm);
  r.pass = dev <= 1e-8 && devNr <= 1e-3;
  r.measured = num(quad) + " (rel " + num(dev) + "), NR " + num(quadNr) + " (rel " +
               num(devNr) + ")";
  r.expected = num(closed) + " within 1e-8 rel, NR " + num(nrForm) + " within 1e-3";
  return r;
}

CheckResult check_pauli_landau() {
  CheckResult r{3, "Pauli/Landau split", false, "", ""};
  const double pF = 1e-2;
  const NRState nr(0.5 * pF * pF, 0.0);
  const auto [pauli, landau] = pauli_landau(nr);
  const double ratio = pauli / landau;
  const ThermoState s(0.0, 1.0 + 0.5 * pF * pF);
  const auto ev = evaluate_responses(make_kinematics(0.0, 2e-4), s, RegimeChoice::Full);
  const double dev = rel(pauli + landau, ev.chi.chiM);
  r.pass = ratio == -3.0 && dev <= 5e-3;
  r.measured = "ratio " + num(ratio) + ", sum " + num(pauli + landau) + " vs chi_m " +
               num(ev.chi.chiM) + " (rel " + num(dev) + ")";
  r.expected = "ratio -3 exactly, sum within 0.5%";
  return r;
}

CheckResult check_drude_frequencies() {
  CheckResult r{4, "Drude frequencies", false, "", ""};
  const ThermoState s(0.0, 2.0);
  const auto d = drude_scalars(0.01, s);
  const double closed = kDefaultE2 / (12.0 * kPi2) * 1.5 * std::sqrt(3.0);
  const double diff = std::abs(d.ae2 - closed);
  const double pF = 0.05;
  const double nrAe2 = 0.25 * nr_plasmon_omega2(NRState(0.5 * pF * pF, 0.0));
  const double relAe2 = drude_ae2(1.0 + 0.5 * pF * pF, kDefaultE2);
  const double dev = rel(relAe2, nrAe2);
  r.pass = diff <= 1e-12 && d.am2 == 2.0 * d.ae2 && dev <= 1e-2;
  r.measured = "a_e^2 " + num(d.ae2) + " (|diff| " + num(diff) + "), a_m^2/a_e^2 " +
               num(d.am2 / d.ae2) + ", NR ratio dev " + num(dev);
  r.expected = num(closed) + " within 1e-12, 2 exactly, NR within 1%";
  return r;
}

CheckResult check_simultaneous_negativity() {
  CheckResult r{5, "simultaneous negativity (zeta=2, a=a_e/2)", false, "", ""};
  const ThermoState s(0.0, 2.0);
  const double ae = std::sqrt(drude_ae2(2.0, kDefaultE2));
  const ResponseSet lw = longwave_responses(ae, s);
  const auto pf = plasmon_frequency(s);
  const auto band = negative_index_scan(s, 0.2 * ae, 6.0 * ae, 400);
  double upper = 0.0;
  if (!band.negativeBand.empty()) upper = band.negativeBand.front().second;
  const double edgeDev = rel(upper, pf.OmegaE);
  r.pass = lw.eps < 0.0 && lw.muInv < 0.0 && std::abs(lw.eps + 3.0) <= 0.01 &&
           std::abs(lw.muInv + 7.0) <= 0.01 && edgeDev <= 1e-4;
  r.measured = "eps " + num(lw.eps) + ", mu^-1 " + num(lw.muInv) + ", band edge " +
               num(upper) + " vs Omega_e " + num(pf.OmegaE) + " (rel " + num(edgeDev) + ")";
  r.expected = "eps -3.00+-0.01, mu^-1 -7.00+-0.01, edge within 1e-4";
  return r;
}

CheckResult check_route_equivalence() {
  CheckResult r{6, "route equivalence full vs long-wavelength (b=1e-4)", false, "", ""};
  const double b = 1e-4;
  double worstA = 0.0;
  double worstB = 0.0;
  std::string whereA;
  std::string whereB;
  for (double zeta : {1.5, 2.0, 5.0}) {
    const ThermoState s(0.0, zeta);
    for (double a : {0.01, 0.05, 0.1}) {
      const Kinematics kin = make_kinematics(2.0 * a, 2.0 * b);
      const double fullB = medium_B_full(kin, s).value * (a * a) / (b * b);
      const double fullA = medium_A_full(kin, s).value;
      const double devB = rel(fullB, longwave_B(a, s));
      const double devA = rel(fullA, longwave_A(a, s));
      const std::string at = "(zeta=" + num(zeta) + ", a=" + num(a) + ")";
      if (devB > worstB) {
        worstB = devB;
        whereB = at;
      }
      if (devA > worstA) {
        worstA = devA;
        whereA = at;
      }
    }
  }
  r.pass = worstA <= 1e-3 && worstB <= 1e-3;
  r.measured = "max rel dev B* " + num(worstB) + " " + whereB + ", A* " + num(worstA) + " " +
               whereA;
  r.expected = "both within 1e-3";
  return r;
}

CheckResult check_lindhard() {
  CheckResult r{7, "Lindhard vs Thomas-Fermi and Monte Carlo", false, "", ""};
  const NRState cold(0.005, 0.0);
  const double q = 1e-2 * cold.pF();
  const double chi = lindhard_chi_e(0.0, q, cold);
  const double tf = thomas_fermi_mass2_nr(cold) / (q * q);
  const double dev = rel(chi, tf);
  bool pass = dev <= 1e-4;
  std::string mc;
  const NRState warm(0.005, 0.0005);
  std::uint64_t seed = 20240101;
  for (double u : {0.25, 0.5, 1.0}) {
    const double qq = 2.0 * warm.pF() * u;
    const double reduced = lindhard_chi_e(0.0, qq, warm);
    const auto est = lindhard_monte_carlo(qq, warm, kDefaultE2, 10000000, seed++);
    const double z = std::abs(est.value - reduced) / est.stdError;
    pass = pass && z <= 3.0;
    mc += (mc.empty() ? "" : ", ") + ("u=" + num(u) + ": " + num(z) + " SE");
  }
  r.pass = pass;
  r.measured = "static rel dev " + num(dev) + "; Monte Carlo " + mc;
  r.expected = "within 1e-4; each within 3 SE";
  return r;
}

CheckResult check_derivative_identity() {
  CheckResult r{8, "I2 = dI1/da^2 (a^2=0.01, zeta=2)", false, "", ""};
  const ThermoState s(0.0, 2.0);
  const double h = 1e-4;
  const double a2 = 0.01;
  const double fd = (moment_integrals(a2 + h, s).i1 - moment_integrals(a2 - h, s).i1) / (2.0 * h);
  const double i2 = moment_integrals(a2, s).i2;
  const double dev = rel(i2, fd);
  r.pass = dev <= 1e-5;
  r.measured = num(i2) + " vs " + num(fd) + " (rel " + num(dev) + ")";
  r.expected = "within 1e-5";
  return r;
}

CheckResult check_vacuum_polarization() {
  CheckResult r{9, "vacuum polarization", false, "", ""};
  const double ratio = vacuum_C(1e-3, kDefaultE2) * 60.0 * kPi2 / (kDefaultE2 * 1e-3);
  const double c = vacuum_C(-1.0, kDefaultE2);
  const double spectral = vacuum_C_spectral(-1.0, kDefaultE2);
  const double diff = std::abs(c - spectral);
  r.pass = std::abs(ratio - 1.0) <= 1e-2 && diff <= 1e-6;
  r.measured = "series ratio " + num(ratio) + ", C(-1) " + num(c) + " vs spectral " +
               num(spectral) + " (|diff| " + num(diff) + ")";
  r.expected = "ratio within 1%, |diff| within 1e-6";
  return r;
}

CheckResult check_dispersion_stub() {
  CheckResult r{10, "dispersion with eps=2, mu=1, tau=0", false, "", ""};
  auto stub = [](double, double) {
    ResponseSet s;
    s.eps = 2.0;
    s.muInv = 1.0;
    return s;
  };
  const double omega = 0.3;
  const auto sol = solve_dispersion(omega, stub, 10.0 * omega);
  const double n = sol.nIndex.empty() ? 0.0 : sol.nIndex.front();
  const double diff = std::abs(n - std::sqrt(2.0));
  r.pass = sol.nIndex.size() == 1 && diff <= 1e-10;
  r.measured = std::to_string(sol.nIndex.size()) + " root(s), n " + num(n) + " (|diff| " +
               num(diff) + ")";
  r.expected = "one root, n = sqrt(2) within 1e-10";
  return r;
}

CheckResult check_assembly_identities() {
  CheckResult r{11, "assembly identities on 1000 random points", false, "", ""};
  std::mt19937_64 rng(137);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int done = 0;
  int skipped = 0;
  double worstPrime = 0.0;
  double worstTau = 0.0;
  while (done < 1000) {
    const double t = unit(rng) < 0.5 ? 0.0 : 0.2 * unit(rng);
    const double zeta = 3.0 * unit(rng);
    const double omega = 1.8 * unit(rng);
    const double q = 1.8 * unit(rng);
    try {
      const auto ev = evaluate_responses(make_kinematics(omega, q), ThermoState(t, zeta));
      worstPrime = std::max(worstPrime, std::abs(ev.full.epsPrime + ev.full.muPrimeInv));
      worstTau = std::max(worstTau, std::abs(ev.full.tau - ev.full.sigma));
      ++done;
    } catch (const std::exception&) {
      ++skipped;
    }
  }
  r.pass = worstPrime == 0.0 && worstTau == 0.0;
  r.measured = "max |eps'+mu'^-1| " + num(worstPrime) + ", max |tau-sigma| " + num(worstTau) +
               " (" + std::to_string(skipped) + " points resampled)";
  r.expected = "0 and 0";
  return r;
}

CheckResult check_sweep_determinism() {
  CheckResult r{12, "sweep determinism (in-process)", false, "", ""};
  SweepSpec spec;
  spec.t = {0.0, 0.05};
  spec.zeta = {1.0, 2.0};
  spec.omega = {0.0, 0.1, 0.3};
  spec.qmag = {1e-4, 0.1, 0.3};
  auto render = [&] {
    std::ostringstream out;
    write_csv(out, run_sweep(spec));
    return out.str();
  };
  const std::string first = render();
  const std::string second = render();
  std::istringstream in(first);
  std::ostringstream again;
  write_csv(again, read_csv(in));
  r.pass = first == second && again.str() == first;
  r.measured = std::string(first == second ? "identical" : "different") + " output, " +
               (again.str() == first ? "round-trip exact" : "round-trip differs");
  r.expected = "identical output, round-trip exact";
  return r;
}

std::vector<CheckResult> run_checks() {
  return {check_stationary_closed_form(), check_thomas_fermi(),
          check_pauli_landau(),           check_drude_frequencies(),
          check_simultaneous_negativity(), check_route_equivalence(),
          check_lindhard(),               check_derivative_identity(),
          check_vacuum_polarization(),    check_dispersion_stub(),
          check_assembly_identities(),    check_sweep_determinism()};
}

}  // namespace relplasma
