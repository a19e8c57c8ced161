#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "relplasma/cli.hpp"
#include "relplasma/limits.hpp"

using namespace relplasma;

namespace {

struct StateFlags {
  std::string t = "0";
  std::string zeta = "2";
  std::optional<double> tol;
  std::optional<double> e2;
};

void add_state_flags(CLI::App* cmd, StateFlags& f) {
  cmd->add_option("--t", f.t, "temperature T/m");
  cmd->add_option("--zeta", f.zeta, "chemical potential xi/m");
  cmd->add_option("--tol", f.tol, "absolute tolerance");
  cmd->add_option("--e2", f.e2, "squared coupling");
}

double scalar_of(const std::string& text, const char* name) {
  const auto grid = parse_grid(text);
  if (grid.size() != 1) throw UsageError(std::string("--") + name + " takes a single value here");
  return grid.front();
}

double tolerance(const StateFlags& f) {
  if (f.tol) return *f.tol;
  if (const char* env = std::getenv("RELPLASMA_TOL"); env && *env) {
    return parse_grid(env).front();
  }
  return kDefaultTolerance;
}

ThermoState state_of(const StateFlags& f) {
  return ThermoState(scalar_of(f.t, "t"), scalar_of(f.zeta, "zeta"), f.e2.value_or(kDefaultE2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear electromagnetic response of a relativistic electron gas"};
  app.require_subcommand(1);

  SweepOverrides sweepFlags;
  std::optional<std::string> configPath;
  auto* sweep = app.add_subcommand("sweep", "scalar functions and responses on a grid");
  sweep->add_option("--t", sweepFlags.t, "temperature grid");
  sweep->add_option("--zeta", sweepFlags.zeta, "chemical potential grid");
  sweep->add_option("--omega", sweepFlags.omega, "frequency grid");
  sweep->add_option("--q", sweepFlags.qmag, "wavevector grid");
  sweep->add_option("--regime", sweepFlags.regime, "auto, full, longwave, stationary, vacuum");
  sweep->add_option("--tol", sweepFlags.tol, "absolute tolerance");
  sweep->add_option("--e2", sweepFlags.e2, "squared coupling");
  sweep->add_option("--format", sweepFlags.format, "csv or json");
  sweep->add_option("--out", sweepFlags.out, "output path");
  sweep->add_option("--config", configPath, "JSON config file");

  StateFlags limitsState;
  std::string limitsSection = "all";
  auto* limits = app.add_subcommand("limits", "closed forms against quadrature and NR oracles");
  add_state_flags(limits, limitsState);
  limits->add_option("--regime", limitsSection, "all, stationary, nr, drude");

  StateFlags dispState;
  std::string dispOmega = "0.01:0.3:30";
  std::string dispMode = "longwave";
  std::string dispFormat = "csv";
  auto* dispersion = app.add_subcommand("dispersion", "refractive index and negative-index band");
  add_state_flags(dispersion, dispState);
  dispersion->add_option("--omega", dispOmega, "frequency grid");
  dispersion->add_option("--mode", dispMode, "longwave or self-consistent");
  dispersion->add_option("--format", dispFormat, "csv or json");

  auto* check = app.add_subcommand("check", "acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sweep) {
      std::optional<SweepOverrides> config;
      if (configPath) config = load_config(*configPath);
      const SweepSpec spec =
          resolve_sweep_spec(sweepFlags, config, std::getenv("RELPLASMA_TOL"));
      return cmd_sweep(spec, std::cout, std::cerr);
    }
    if (*limits) {
      return cmd_limits(state_of(limitsState), parse_limits_section(limitsSection),
                        tolerance(limitsState), std::cout, std::cerr);
    }
    if (*dispersion) {
      bool selfConsistent = false;
      if (dispMode == "self-consistent" || dispMode == "selfconsistent") {
        selfConsistent = true;
      } else if (dispMode != "longwave") {
        throw UsageError("unknown dispersion mode '" + dispMode + "'");
      }
      return cmd_dispersion(state_of(dispState), parse_grid(dispOmega), selfConsistent,
                            parse_format(dispFormat), tolerance(dispState), std::cout,
                            std::cerr);
    }
    if (*check) return cmd_check(std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const RootNotBracketed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
