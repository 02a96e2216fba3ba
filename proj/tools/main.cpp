// qlg: command line front end for the lattice gas library.
//
//   qlg run --experiment square_well --out runs/well
//   qlg dispersion --mass 0.1 --samples 64
//   qlg selftest

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <locale>
#include <optional>

#include "qlg/errors.hpp"
#include "runner.hpp"

namespace {

int fail(const std::exception& e, int code) {
  std::cerr << qlg::cli::error_report(e).dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::locale::global(std::locale::classic());
  qlg::cli::RunConfig cfg;
  std::string experiment = "free";
  std::optional<std::string> out;
  int samples = 64;
  double ell = 1.0;

  CLI::App app{"Quantum lattice gas for the 1+1 dimensional Dirac equation"};
  app.set_config("--config", "", "key = value file; command line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--experiment", experiment,
                 "free | square_well | harmonic | kernel | gates_selftest | many_body");
  app.add_option("--grid", cfg.grid_points, "lattice sites");
  app.add_option("--steps", cfg.steps, "time steps");
  app.add_option("--record-every", cfg.record_every, "output cadence in steps");
  app.add_option("--mass", cfg.mass, "mass (inner mass for the well)");
  app.add_option("--barrier-mass", cfg.barrier_mass, "square well barrier mass");
  app.add_option("--well-length", cfg.well_length, "square well length in sites");
  app.add_option("--kappa", cfg.kappa, "oscillator stiffness");
  app.add_option("--level", cfg.level, "oscillator level n");
  app.add_option("--gamma", cfg.gamma, "uniform Lorentz factor (free, many_body)");
  app.add_option("--gamma-profile", cfg.gamma_profile, "oscillator gamma: unit | varying");
  app.add_option("--well-energy", cfg.well_energy, "well root: relativistic | rest_mass");
  app.add_option("--kernel-n", cfg.kernel_n, "path steps N");
  app.add_option("--kernel-m", cfg.kernel_m, "path magnetization M");
  app.add_option("--tau", cfg.tau, "grid time");
  app.add_flag("--snapshots", cfg.snapshots, "many_body: write state snapshots at each record");
  app.add_option("--out", out, "output directory (run) or file (dispersion, '-' for stdout)");
  app.add_option("--seed", cfg.seed, "seed for random initial states");
  app.add_option("--samples", samples, "dispersion rows");
  app.add_option("--ell", ell, "dispersion grid length");

  auto* run = app.add_subcommand("run", "run one experiment and write its outputs");
  auto* disp = app.add_subcommand("dispersion", "emit the grid dispersion table");
  auto* self = app.add_subcommand("selftest", "algebra and kernel self checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << nlohmann::json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump()
              << '\n';
    return 2;
  }

  try {
    if (*run) {
      cfg.experiment = qlg::cli::parse_experiment(experiment);
      cfg.output_path = out.value_or("out");
      const auto manifest = qlg::cli::run(cfg);
      std::cout << manifest["derived"].dump(2) << '\n';
      if (cfg.experiment == qlg::cli::Experiment::gates_selftest && !manifest["derived"]["pass"])
        return 3;
    } else if (*disp) {
      const double m = cfg.mass.value_or(0.1);
      if (!out || *out == "-") {
        qlg::cli::emit_dispersion_table(std::cout, m, ell, cfg.tau, samples);
      } else {
        std::ofstream os(*out, std::ios::binary);
        if (!os) throw qlg::DomainError("cannot open " + *out);
        qlg::cli::emit_dispersion_table(os, m, ell, cfg.tau, samples);
      }
    } else if (*self) {
      const auto report = qlg::cli::selftest_report();
      std::cout << report.dump(2) << '\n';
      return report["pass"] ? 0 : 3;
    }
  } catch (const qlg::Error& e) {
    return fail(e, 1);
  } catch (const std::exception& e) {
    return fail(e, 1);
  }
  return 0;
}
