#include "relplasma/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace relplasma {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Kronrod 21-point abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double lo;
  double hi;
  double value;
  double err;
};

struct WorseFirst {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

Panel gauss_kronrod21(const Integrand& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);

  std::array<double, 10> fv1{};
  std::array<double, 10> fv2{};
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  const double scale = std::abs(half);
  resasc *= scale;
  resabs *= scale;

  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > kTiny / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return {lo, hi, resk * half, err};
}

double tolerance_for(const QuadOptions& opts, double value) {
  return std::max(opts.absTol, opts.relTol * std::abs(value));
}

}  // namespace

Breakpoints::Breakpoints(std::vector<double> points) : points_(std::move(points)) {
  std::erase_if(points_, [](double x) { return !std::isfinite(x) || x <= 1.0; });
  std::sort(points_.begin(), points_.end());
  std::vector<double> unique;
  for (double x : points_) {
    if (!unique.empty() && x - unique.back() <= 1e-13 * x) continue;
    unique.push_back(x);
  }
  points_ = std::move(unique);
}

NonConvergence::NonConvergence(IntegralResult best)
    : std::runtime_error([&] {
        std::ostringstream out;
        out << "quadrature did not converge after " << best.panels
            << " panels (value " << best.value << ", error estimate "
            << best.errEst << ")";
        return out.str();
      }()),
      best_(best) {}

IntegralResult integrate(const Integrand& f, double lo, double hi,
                         std::span<const double> breaks,
                         const QuadOptions& opts) {
  if (!(opts.absTol > 0.0) && !(opts.relTol > 0.0)) {
    throw DomainError("quadrature tolerance must be positive");
  }
  if (!(hi > lo)) return {0.0, 0.0, 0, true};

  std::vector<double> edges{lo};
  for (double x : breaks) {
    if (x > lo && x < hi) edges.push_back(x);
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());

  std::priority_queue<Panel, std::vector<Panel>, WorseFirst> active;
  std::vector<Panel> frozen;
  double total = 0.0;
  double totalErr = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i + 1] > edges[i])) continue;
    Panel p = gauss_kronrod21(f, edges[i], edges[i + 1]);
    total += p.value;
    totalErr += p.err;
    active.push(p);
  }
  int panels = static_cast<int>(active.size());

  bool converged = true;
  while (totalErr > tolerance_for(opts, total)) {
    if (active.empty()) {
      converged = false;
      break;
    }
    if (panels >= opts.maxPanels) {
      converged = false;
      break;
    }
    Panel worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const double width = worst.hi - worst.lo;
    if (!(mid > worst.lo && mid < worst.hi) ||
        width <= 16.0 * kEps * std::max(std::abs(worst.lo), std::abs(worst.hi))) {
      // Cannot be refined further in double precision.
      frozen.push_back(worst);
      continue;
    }
    Panel left = gauss_kronrod21(f, worst.lo, mid);
    Panel right = gauss_kronrod21(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    totalErr += left.err + right.err - worst.err;
    active.push(left);
    active.push(right);
    ++panels;
  }

  // Re-sum to drop the drift accumulated by the incremental updates.
  IntegralResult result;
  result.panels = panels;
  double value = 0.0;
  double err = 0.0;
  while (!active.empty()) {
    value += active.top().value;
    err += active.top().err;
    active.pop();
  }
  for (const Panel& p : frozen) {
    value += p.value;
    err += p.err;
  }
  result.value = value;
  result.errEst = err;
  result.converged = converged && err <= tolerance_for(opts, value) * (1.0 + 1e-12);
  if (!result.converged || !std::isfinite(value)) {
    result.converged = false;
    throw NonConvergence(result);
  }
  return result;
}

double fermi_cutoff(const MomentumIntegrand& f, const ThermoState& state, double tol) {
  const double zeta = state.zeta();
  if (state.t() == 0.0) return zeta;
  const double t = state.t();
  const double base = std::max(zeta, 1.0);
  // n_F(x) <= 2 exp(-(x - zeta)/t) above zeta. The integrand is assumed to
  // grow at most like x^4 past the cutoff.
  double x = base + 20.0 * t;
  for (int iter = 0; iter < 10000; ++iter) {
    double mag = 0.0;
    for (double probe : {x, x + t, 1.25 * x}) {
      const double v = std::abs(f(probe, std::sqrt(probe * probe - 1.0))) *
                       std::pow(x / probe, 4.0);
      if (std::isfinite(v)) mag = std::max(mag, v);
    }
    const double growth = std::pow(1.0 + 4.0 * t / x, 5.0);
    const double tail = 2.0 * mag * t * std::exp(-(x - zeta) / t) * growth;
    if (tail < 0.1 * tol) return x;
    x += 2.0 * t;
  }
  return x;
}

IntegralResult integrate_semi_infinite(const MomentumIntegrand& f,
                                       const ThermoState& state,
                                       const Breakpoints& breaks,
                                       const QuadOptions& opts) {
  if (!(opts.absTol > 0.0) && !(opts.relTol > 0.0)) {
    throw DomainError("quadrature tolerance must be positive");
  }
  if (state.medium_empty()) return {0.0, 0.0, 0, true};

  const double xmax = opts.cutoff > 0.0 ? opts.cutoff
                                        : fermi_cutoff(f, state, opts.absTol);
  if (!(xmax > 1.0)) return {0.0, 0.0, 0, true};
  const double umax = std::acosh(xmax);

  std::vector<double> ubreaks;
  for (double x : breaks.points()) {
    if (x > 1.0 && x < xmax) ubreaks.push_back(std::acosh(x));
  }
  if (state.t() > 0.0) {
    // A narrow Fermi edge can fall between all nodes of a wide panel.
    const double zeta = state.zeta();
    const double t = state.t();
    for (double x : {zeta - 10.0 * t, zeta, zeta + 10.0 * t}) {
      if (x > 1.0 && x < xmax) ubreaks.push_back(std::acosh(x));
    }
  }

  const bool step = state.t() == 0.0;
  auto g = [&](double u) {
    const double x = std::cosh(u);
    const double p = std::sinh(u);
    const double weight = step ? 1.0 : fermi_occupation(x, state);
    if (weight == 0.0) return 0.0;
    return weight * f(x, p) * p;
  };
  return integrate(g, 0.0, umax, ubreaks, opts);
}

Breakpoints locate_log_singularities(const Kinematics& kin) {
  if (!(kin.qmag() > 0.0)) {
    throw DomainError("breakpoints need a nonzero wavevector");
  }
  const double a = kin.a();
  const double b = kin.b();
  std::vector<double> found;

  auto residual = [&](double sa, double sb, double c, double x) {
    const double root = std::sqrt(std::max(x * x - 1.0, 0.0));
    const double g = sa * a * x + sb * b * root + c;
    const double scale = std::abs(a * x) + std::abs(b * root) + std::abs(c);
    return std::pair{g, scale};
  };

  for (double c : {a * a - b * b, a * a}) {
    for (double sa : {1.0, -1.0}) {
      // Squaring sa a x + c = -sb b sqrt(x^2-1) removes sb.
      const double qa = b * b - a * a;
      const double qb = -2.0 * sa * a * c;
      const double qc = -(b * b + c * c);
      std::vector<double> candidates;
      if (std::abs(qa) <= 1e-14 * (a * a + b * b)) {
        if (qb != 0.0) candidates.push_back(-qc / qb);
      } else {
        double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0 && disc > -1e-14 * qb * qb) disc = 0.0;
        if (disc >= 0.0) {
          const double sq = std::sqrt(disc);
          const double q = -0.5 * (qb + std::copysign(sq, qb));
          if (q != 0.0) {
            candidates.push_back(q / qa);
            candidates.push_back(qc / q);
          } else {
            candidates.push_back(0.0);
          }
        }
      }
      for (double x0 : candidates) {
        if (!std::isfinite(x0) || x0 <= 1.0) continue;
        for (double sb : {1.0, -1.0}) {
          double x = x0;
          for (int it = 0; it < 3; ++it) {
            const double root = std::sqrt(x * x - 1.0);
            const double g = sa * a * x + sb * b * root + c;
            const double dg = sa * a + sb * b * x / root;
            if (!std::isfinite(dg) || dg == 0.0) break;
            const double next = x - g / dg;
            if (!(next > 1.0) || !std::isfinite(next)) break;
            x = next;
          }
          const auto [g, scale] = residual(sa, sb, c, x);
          if (x > 1.0 && std::abs(g) <= 1e-12 * scale) found.push_back(x);
        }
      }
    }
  }
  return Breakpoints(std::move(found));
}

}  // namespace relplasma
