#pragma once

// Sweep specification, record emission and the report commands behind the
// relplasma tool.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relplasma/core.hpp"
#include "relplasma/scalar_functions.hpp"

namespace relplasma {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Grid text: a scalar, a comma list, or lo:hi:n (n points, ends included).
std::vector<double> parse_grid(const std::string& text);
RegimeChoice parse_regime(const std::string& text);
OutputFormat parse_format(const std::string& text);

struct SweepSpec {
  std::vector<double> t{0.0};
  std::vector<double> zeta{2.0};
  std::vector<double> omega{0.1};
  std::vector<double> qmag{1e-4};
  RegimeChoice regime = RegimeChoice::Auto;
  double tol = kDefaultTolerance;
  double e2 = kDefaultE2;
  OutputFormat format = OutputFormat::Csv;
  std::string out;  // empty: stdout
};

/// Optional overrides, as read from flags or a config file.
struct SweepOverrides {
  std::optional<std::string> t, zeta, omega, qmag, regime, format, out;
  std::optional<double> tol, e2;
};

/// Config file: JSON object with the keys t, zeta, omega, q (grid text,
/// number or array), regime, tol, e2, format, out.
SweepOverrides load_config(const std::string& path);

/// Defaults, then RELPLASMA_TOL, then the config file, then flags.
SweepSpec resolve_sweep_spec(const SweepOverrides& flags,
                             const std::optional<SweepOverrides>& config,
                             const char* envTol);

inline constexpr const char* kFlagLightCone = "LightConeSkipped";
inline constexpr const char* kFlagPole = "PoleNearby";
inline constexpr const char* kFlagNonConverged = "NonConverged";

struct SweepRecord {
  double t = 0.0;
  double zeta = 0.0;
  double omega = 0.0;
  double qmag = 0.0;
  /// Empty when the row is flagged without values.
  std::optional<double> aStar, bStar, cStar, eps, muInv, epsPrime, tau, chiE, chiM;
  std::string regime;
  std::optional<double> errEst;
  std::vector<std::string> flags;
};

/// Grid order: t, zeta, omega, qmag, last index fastest. DomainError from a
/// point (e.g. qm2 >= 4) propagates.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_json(std::ostream& out, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_csv(std::istream& in);

/// Exit status: 0 success, 1 any NonConverged row, 2 bad spec.
int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err);

enum class LimitsSection { All, Stationary, NonRelativistic, Drude };
LimitsSection parse_limits_section(const std::string& text);

/// Side-by-side closed forms, quadrature and NR oracles. Exit 1 if any
/// checked deviation exceeds its tolerance. Warns on err outside the NR gate.
int cmd_limits(const ThermoState& state, LimitsSection section, double tol,
               std::ostream& out, std::ostream& err);

/// Long-wavelength band scan plus dispersion roots on an omega grid.
int cmd_dispersion(const ThermoState& state, const std::vector<double>& omegas,
                   bool selfConsistent, OutputFormat format, double tol,
                   std::ostream& out, std::ostream& err);

/// Runs the acceptance checks; exit 0 iff all pass.
int cmd_check(std::ostream& out);

}  // namespace relplasma
