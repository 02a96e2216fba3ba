#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace qlg::cli {

enum class Experiment { free, square_well, harmonic, kernel, gates_selftest, many_body };

Experiment parse_experiment(const std::string& name);
std::string experiment_name(Experiment e);

// Unset fields take the per-experiment defaults listed in README.md.
struct RunConfig {
  Experiment experiment = Experiment::free;
  std::optional<int> grid_points;
  std::optional<int> steps;
  std::optional<int> record_every;
  std::optional<double> mass;
  std::optional<double> barrier_mass;
  std::optional<double> well_length;
  std::optional<double> kappa;
  std::optional<int> level;
  std::optional<double> gamma;
  std::string gamma_profile = "unit";   // harmonic: unit | varying
  std::string well_energy = "relativistic";  // relativistic | rest_mass
  std::optional<int> kernel_n;
  std::optional<int> kernel_m;
  double tau = 1.0;
  bool snapshots = false;
  std::string output_path = "out";
  std::uint64_t seed = 1;
};

// Fills every unset field; throws qlg::DomainError on invalid values.
RunConfig resolve(RunConfig cfg);

// Writes manifest.json plus the experiment's CSV files under
// cfg.output_path and returns the manifest. Module errors propagate.
nlohmann::json run(const RunConfig& cfg);

// k, p_grid, m_grid, E_grid, E_continuum for samples points spanning
// 0 <= ell k <= pi/2.
void emit_dispersion_table(std::ostream& os, double m, double ell, double tau, int samples);

// Quick algebra and evolution checks; "pass" is false when any residual
// exceeds its bound.
nlohmann::json selftest_report();

// 17 significant digits, '.' decimal point regardless of locale.
std::string format_double(double v);

nlohmann::json error_report(const std::exception& e);

}  // namespace qlg::cli
