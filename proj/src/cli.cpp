#include "relplasma/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "relplasma/checks.hpp"
#include "relplasma/dispersion.hpp"
#include "relplasma/limits.hpp"
#include "relplasma/response.hpp"

namespace relplasma {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

double parse_number(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw UsageError("not a number: '" + text + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Folds -0 into 0 so signed zeros from products never reach the output.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

std::string format_double(double v) {
  v = clean(v);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string grid_text(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return format_double(v.get<double>());
  if (v.is_array() && !v.empty()) {
    std::string joined;
    for (const auto& x : v) {
      if (!x.is_number()) throw UsageError("config key '" + key + "' must hold numbers");
      if (!joined.empty()) joined += ',';
      joined += format_double(x.get<double>());
    }
    return joined;
  }
  throw UsageError("config key '" + key + "' must be a grid string, number or array");
}

void merge(SweepOverrides& into, const SweepOverrides& from) {
  auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(into.t, from.t);
  take(into.zeta, from.zeta);
  take(into.omega, from.omega);
  take(into.qmag, from.qmag);
  take(into.regime, from.regime);
  take(into.format, from.format);
  take(into.out, from.out);
  take(into.tol, from.tol);
  take(into.e2, from.e2);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

const char* kCsvHeader =
    "t,zeta,omega,qmag,aStar,bStar,cStar,eps,muInv,epsPrime,tau,chiE,chiM,regime,errEst,flags";

}  // namespace

std::vector<double> parse_grid(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw UsageError("empty grid");
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("range grid must be lo:hi:n, got '" + text + "'");
    const double lo = parse_number(trim(parts[0]));
    const double hi = parse_number(trim(parts[1]));
    const double nd = parse_number(trim(parts[2]));
    const int n = static_cast<int>(nd);
    if (n != nd || n < 1) throw UsageError("range grid needs an integer count >= 1");
    if (n == 1) {
      if (lo != hi) throw UsageError("a one-point range needs lo == hi");
      return {lo};
    }
    for (int i = 0; i < n; ++i) {
      out.push_back(i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
    }
    return out;
  }
  for (const auto& part : split(text, ',')) out.push_back(parse_number(trim(part)));
  return out;
}

RegimeChoice parse_regime(const std::string& text) {
  if (text == "auto") return RegimeChoice::Auto;
  if (text == "full") return RegimeChoice::Full;
  if (text == "longwave") return RegimeChoice::LongWavelength;
  if (text == "stationary") return RegimeChoice::Stationary;
  if (text == "vacuum") return RegimeChoice::Vacuum;
  throw UsageError("unknown regime '" + text + "'");
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + text + "'");
}

SweepOverrides load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  SweepOverrides o;
  for (const auto& [key, value] : j.items()) {
    if (key == "t") {
      o.t = grid_text(value, key);
    } else if (key == "zeta") {
      o.zeta = grid_text(value, key);
    } else if (key == "omega") {
      o.omega = grid_text(value, key);
    } else if (key == "q" || key == "qmag") {
      o.qmag = grid_text(value, key);
    } else if (key == "regime" && value.is_string()) {
      o.regime = value.get<std::string>();
    } else if (key == "format" && value.is_string()) {
      o.format = value.get<std::string>();
    } else if (key == "out" && value.is_string()) {
      o.out = value.get<std::string>();
    } else if (key == "tol" && value.is_number()) {
      o.tol = value.get<double>();
    } else if (key == "e2" && value.is_number()) {
      o.e2 = value.get<double>();
    } else {
      throw UsageError("unknown or mistyped config key '" + key + "'");
    }
  }
  return o;
}

SweepSpec resolve_sweep_spec(const SweepOverrides& flags,
                             const std::optional<SweepOverrides>& config,
                             const char* envTol) {
  SweepSpec spec;
  if (envTol && *envTol) spec.tol = parse_number(envTol);
  SweepOverrides merged;
  if (config) merge(merged, *config);
  merge(merged, flags);
  if (merged.t) spec.t = parse_grid(*merged.t);
  if (merged.zeta) spec.zeta = parse_grid(*merged.zeta);
  if (merged.omega) spec.omega = parse_grid(*merged.omega);
  if (merged.qmag) spec.qmag = parse_grid(*merged.qmag);
  if (merged.regime) spec.regime = parse_regime(*merged.regime);
  if (merged.format) spec.format = parse_format(*merged.format);
  if (merged.out) spec.out = *merged.out;
  if (merged.tol) spec.tol = *merged.tol;
  if (merged.e2) spec.e2 = *merged.e2;
  if (!(spec.tol > 0.0)) throw UsageError("tolerance must be positive");
  if (!(spec.e2 > 0.0)) throw UsageError("e2 must be positive");
  return spec;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  std::vector<SweepRecord> records;
  for (double t : spec.t) {
    for (double zeta : spec.zeta) {
      const ThermoState state(t, zeta, spec.e2);
      for (double omega : spec.omega) {
        for (double q : spec.qmag) {
          SweepRecord rec;
          rec.t = t;
          rec.zeta = zeta;
          rec.omega = omega;
          rec.qmag = q;
          const Kinematics kin = make_kinematics(omega, q);
          rec.regime = std::string(to_string(select_regime(kin, state)));
          if (std::abs(kin.qm2()) < kLightConeGuard) {
            rec.flags.push_back(kFlagLightCone);
            records.push_back(rec);
            continue;
          }
          try {
            const ResponseEvaluation ev = evaluate_responses(kin, state, spec.regime, spec.tol);
            rec.regime = std::string(to_string(ev.scalars.regime));
            rec.aStar = ev.scalars.aStar;
            rec.bStar = ev.scalars.bStar;
            rec.cStar = ev.scalars.cStar;
            rec.eps = ev.full.eps;
            rec.muInv = ev.full.muInv;
            rec.epsPrime = ev.full.epsPrime;
            rec.tau = ev.full.tau;
            rec.chiE = ev.chi.chiE;
            rec.chiM = ev.chi.chiM;
            rec.errEst = ev.scalars.errEst;
            if (std::abs(ev.full.muInv) < kPoleGuard) rec.flags.push_back(kFlagPole);
          } catch (const LightConeSingular&) {
            rec.flags.push_back(kFlagLightCone);
          } catch (const NonConvergence&) {
            rec.flags.push_back(kFlagNonConverged);
          }
          records.push_back(rec);
        }
      }
    }
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kCsvHeader << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : ""; };
  for (const auto& r : records) {
    std::string flags;
    for (const auto& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
    out << format_double(r.t) << ',' << format_double(r.zeta) << ','
        << format_double(r.omega) << ',' << format_double(r.qmag) << ',' << opt(r.aStar)
        << ',' << opt(r.bStar) << ',' << opt(r.cStar) << ',' << opt(r.eps) << ','
        << opt(r.muInv) << ',' << opt(r.epsPrime) << ',' << opt(r.tau) << ','
        << opt(r.chiE) << ',' << opt(r.chiM) << ',' << r.regime << ',' << opt(r.errEst)
        << ',' << flags << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<SweepRecord>& records) {
  ojson arr = ojson::array();
  auto opt = [](const std::optional<double>& v) { return v ? ojson(clean(*v)) : ojson(nullptr); };
  for (const auto& r : records) {
    std::string flags;
    for (const auto& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
    ojson o;
    o["t"] = r.t;
    o["zeta"] = r.zeta;
    o["omega"] = r.omega;
    o["qmag"] = r.qmag;
    o["aStar"] = opt(r.aStar);
    o["bStar"] = opt(r.bStar);
    o["cStar"] = opt(r.cStar);
    o["eps"] = opt(r.eps);
    o["muInv"] = opt(r.muInv);
    o["epsPrime"] = opt(r.epsPrime);
    o["tau"] = opt(r.tau);
    o["chiE"] = opt(r.chiE);
    o["chiM"] = opt(r.chiM);
    o["regime"] = r.regime;
    o["errEst"] = opt(r.errEst);
    o["flags"] = flags;
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << '\n';
}

std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw UsageError("missing or unexpected CSV header");
  }
  std::vector<SweepRecord> records;
  auto opt = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return parse_number(s);
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 16) throw UsageError("CSV row has " + std::to_string(f.size()) + " fields");
    SweepRecord r;
    r.t = parse_number(f[0]);
    r.zeta = parse_number(f[1]);
    r.omega = parse_number(f[2]);
    r.qmag = parse_number(f[3]);
    r.aStar = opt(f[4]);
    r.bStar = opt(f[5]);
    r.cStar = opt(f[6]);
    r.eps = opt(f[7]);
    r.muInv = opt(f[8]);
    r.epsPrime = opt(f[9]);
    r.tau = opt(f[10]);
    r.chiE = opt(f[11]);
    r.chiM = opt(f[12]);
    r.regime = f[13];
    r.errEst = opt(f[14]);
    if (!f[15].empty()) r.flags = split(f[15], ';');
    records.push_back(std::move(r));
  }
  return records;
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  std::vector<SweepRecord> records;
  try {
    records = run_sweep(spec);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (!spec.out.empty()) {
    file.open(spec.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << spec.out << "'\n";
      return 2;
    }
    sink = &file;
  }
  if (spec.format == OutputFormat::Csv) {
    write_csv(*sink, records);
  } else {
    write_json(*sink, records);
  }
  const bool failed = std::any_of(records.begin(), records.end(), [](const SweepRecord& r) {
    return std::find(r.flags.begin(), r.flags.end(), kFlagNonConverged) != r.flags.end();
  });
  return failed ? 1 : 0;
}

LimitsSection parse_limits_section(const std::string& text) {
  if (text == "all" || text == "auto") return LimitsSection::All;
  if (text == "stationary") return LimitsSection::Stationary;
  if (text == "nr") return LimitsSection::NonRelativistic;
  if (text == "drude") return LimitsSection::Drude;
  throw UsageError("unknown limits section '" + text + "'");
}

namespace {

struct LimitRow {
  std::string section;
  std::string quantity;
  double reference = 0.0;
  double value = 0.0;
  /// Relative tolerance, or absolute when absolute is set; none: informational.
  std::optional<double> tol;
  bool absolute = false;
};

double deviation(const LimitRow& r) {
  const double diff = std::abs(r.value - r.reference);
  if (r.absolute) return diff;
  if (r.reference == 0.0) return diff == 0.0 ? 0.0 : std::abs(r.value);
  return diff / std::abs(r.reference);
}

}  // namespace

int cmd_limits(const ThermoState& state, LimitsSection section, double tol,
               std::ostream& out, std::ostream& err) {
  std::vector<LimitRow> rows;
  const double e2 = state.e2();
  const double zeta = state.zeta();
  const bool cold = state.t() == 0.0;
  const bool filled = zeta > 1.0;
  auto want = [&](LimitsSection s) { return section == LimitsSection::All || section == s; };

  if (want(LimitsSection::Stationary)) {
    const double q = 2e-4;
    const auto closed = stationary_scalars(q, state, tol);
    const auto quad = stationary_scalars_quadrature(q, state, tol);
    rows.push_back({"stationary", "A* (closed vs quadrature)", closed.aStar, quad.aStar, 1e-8});
    rows.push_back({"stationary", "m_TF^2 (closed vs quadrature)", thomas_fermi_mass2(state, tol),
                    thomas_fermi_mass2_quadrature(state, tol), 1e-8});
    if (state.medium_empty()) {
      rows.push_back({"stationary", "chi'_e full route, b=1e-4", 0.0, 0.0, 1e-6, true});
    } else {
      const auto ev = evaluate_responses(make_kinematics(0.0, q), state, RegimeChoice::Full, tol);
      rows.push_back({"stationary", "chi'_e full route, b=1e-4", -quad.aStar, ev.chi.chiEPrime,
                      1e-6, true});
      rows.push_back({"stationary", "|q|^2 B* full route, b=1e-4 vs m_TF^2",
                      thomas_fermi_mass2(state, tol), q * q * ev.scalars.bStar, std::nullopt});
    }
  }

  if (want(LimitsSection::NonRelativistic) && cold) {
    const NRState nr = nr_state(state);
    if (!nr.within_validity()) {
      err << "warning: outside the nonrelativistic regime (xi' = " << nr.xiPrime()
          << ", t = " << nr.t() << "; expected both <= 0.1)\n";
    }
    const double pF = nr.pF();
    const auto [pauli, landau] = pauli_landau(nr, e2);
    const double chiM = filled ? e2 / (6.0 * kPi2) * std::acosh(zeta) : 0.0;
    const auto gate = [&](double limit, double t) -> std::optional<double> {
      return pF <= limit ? std::optional<double>(t) : std::nullopt;
    };
    rows.push_back({"nr", "chi_Pauli + chi_Landau vs relativistic chi_m", chiM, pauli + landau,
                    gate(0.05, 5e-3)});
    rows.push_back({"nr", "m_TF^2 NR vs relativistic", thomas_fermi_mass2(state, tol),
                    thomas_fermi_mass2_nr(nr, e2), gate(0.01, 1e-3)});
    rows.push_back({"nr", "omega_e^2/4 NR vs a_e^2", drude_ae2(zeta, e2),
                    0.25 * nr_plasmon_omega2(nr, e2), gate(0.05, 1e-2)});
    if (pF > 0.0) {
      const double q = 1e-2 * pF;
      rows.push_back({"nr", "Lindhard static (q/pF=1e-2) vs m_TF^2/q^2",
                      thomas_fermi_mass2_nr(nr, e2) / (q * q), lindhard_chi_e(0.0, q, nr, e2, tol),
                      1e-4});
    }
  }

  if (want(LimitsSection::Drude) && cold) {
    if (filled) {
      const auto pf = plasmon_frequency(state, tol);
      const double ae = std::sqrt(drude_ae2(zeta, e2));
      const auto drude = drude_scalars(0.5 * ae, state);
      const auto lw = longwave_responses(ae, state, tol);
      rows.push_back({"drude", "a_m^2 / a_e^2", 2.0, drude.am2 / drude.ae2, 0.0});
      rows.push_back({"drude", "Omega_e^2 / omega_e^2", 1.0,
                      pf.OmegaE * pf.OmegaE / (pf.omegaE * pf.omegaE), 2e-3});
      rows.push_back({"drude", "eps at a = a_e/2 (Drude vs assembled)", drude.eps, lw.eps, 1e-2,
                      true});
      rows.push_back({"drude", "mu^-1 at a = a_e/2 (Drude vs assembled)", drude.muInv, lw.muInv,
                      1e-2, true});
    } else {
      rows.push_back({"drude", "a_e^2", 0.0, drude_ae2(zeta, e2), 0.0, true});
    }
  }

  bool ok = true;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-50s %24s %24s %10s %11s %s\n", "section", "quantity",
                "reference", "value", "deviation", "tolerance", "status");
  out << line;
  for (const auto& r : rows) {
    const double dev = deviation(r);
    std::string status = "info";
    std::string tolText = "-";
    if (r.tol) {
      const bool pass = dev <= *r.tol;
      ok = ok && pass;
      status = pass ? "ok" : "FAIL";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1e %s", *r.tol, r.absolute ? "abs" : "rel");
      tolText = buf;
    }
    std::snprintf(line, sizeof line, "%-10s %-50s %24.17g %24.17g %10.3e %11s %s\n",
                  r.section.c_str(), r.quantity.c_str(), r.reference, r.value, dev,
                  tolText.c_str(), status.c_str());
    out << line;
  }
  return ok ? 0 : 1;
}

int cmd_dispersion(const ThermoState& state, const std::vector<double>& omegas,
                   bool selfConsistent, OutputFormat format, double tol, std::ostream& out,
                   std::ostream& err) {
  if (omegas.empty()) {
    err << "error: empty omega grid\n";
    return 2;
  }
  ojson records = ojson::array();
  std::ostringstream csv;
  csv << "omega,eps,muInv,qmag,nIndex,residual,leftHanded,regime\n";
  DispersionOptions opts;
  opts.tol = tol;
  const DispersionMode mode =
      selfConsistent ? DispersionMode::SelfConsistent : DispersionMode::LongWavelength;
  BandReport band;
  try {
    for (double w : omegas) {
      const ResponseSet lw = longwave_responses(w, state, tol);
      const DispersionSolution sol = solve_dispersion(w, state, mode, opts);
      if (sol.qroots.empty()) {
        csv << format_double(w) << ',' << format_double(lw.eps) << ','
            << format_double(lw.muInv) << ",,,,,\n";
        ojson o;
        o["omega"] = w;
        o["eps"] = lw.eps;
        o["muInv"] = lw.muInv;
        o["qmag"] = nullptr;
        o["nIndex"] = nullptr;
        o["residual"] = nullptr;
        o["leftHanded"] = nullptr;
        o["regime"] = nullptr;
        records.push_back(std::move(o));
      }
      for (std::size_t i = 0; i < sol.qroots.size(); ++i) {
        const std::string regime(to_string(sol.regime[i]));
        csv << format_double(w) << ',' << format_double(lw.eps) << ','
            << format_double(lw.muInv) << ',' << format_double(sol.qroots[i]) << ','
            << format_double(sol.nIndex[i]) << ',' << format_double(sol.residual[i]) << ','
            << (sol.leftHanded[i] ? 1 : 0) << ',' << regime << '\n';
        ojson o;
        o["omega"] = w;
        o["eps"] = lw.eps;
        o["muInv"] = lw.muInv;
        o["qmag"] = sol.qroots[i];
        o["nIndex"] = sol.nIndex[i];
        o["residual"] = sol.residual[i];
        o["leftHanded"] = static_cast<bool>(sol.leftHanded[i]);
        o["regime"] = regime;
        records.push_back(std::move(o));
      }
    }
    if (omegas.size() >= 2) {
      const auto [lo, hi] = std::minmax_element(omegas.begin(), omegas.end());
      band = negative_index_scan(state, *lo, *hi, static_cast<int>(omegas.size()), tol);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (format == OutputFormat::Json) {
    ojson doc;
    doc["records"] = records;
    ojson bands = ojson::array();
    for (const auto& [l, h] : band.negativeBand) bands.push_back({l, h});
    doc["negativeBand"] = bands;
    out << doc.dump(2) << '\n';
  } else {
    out << csv.str() << '\n' << "band_low,band_high\n";
    for (const auto& [l, h] : band.negativeBand) {
      out << format_double(l) << ',' << format_double(h) << '\n';
    }
  }
  return 0;
}

int cmd_check(std::ostream& out) {
  const auto results = run_checks();
  bool ok = true;
  for (const auto& r : results) {
    out << format_check(r) << '\n';
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

}  // namespace relplasma
