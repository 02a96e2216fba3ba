#include "runner.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <locale>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "qlg/analytic.hpp"
#include "qlg/dirac.hpp"
#include "qlg/errors.hpp"
#include "qlg/gates.hpp"
#include "qlg/path_kernel.hpp"
#include "qlg/statevector.hpp"
#include "qlg/version.hpp"

namespace qlg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

Experiment parse_experiment(const std::string& name) {
  if (name == "free") return Experiment::free;
  if (name == "square_well") return Experiment::square_well;
  if (name == "harmonic") return Experiment::harmonic;
  if (name == "kernel") return Experiment::kernel;
  if (name == "gates_selftest") return Experiment::gates_selftest;
  if (name == "many_body") return Experiment::many_body;
  throw DomainError("unknown experiment '" + name + "'");
}

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::free: return "free";
    case Experiment::square_well: return "square_well";
    case Experiment::harmonic: return "harmonic";
    case Experiment::kernel: return "kernel";
    case Experiment::gates_selftest: return "gates_selftest";
    case Experiment::many_body: return "many_body";
  }
  return "?";
}

std::string format_double(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

json error_report(const std::exception& e) {
  std::string kind = "Error";
  if (auto* q = dynamic_cast<const qlg::Error*>(&e)) kind = q->kind();
  return {{"error", {{"kind", kind}, {"message", e.what()}}}};
}

namespace {

template <class T>
void fill(std::optional<T>& v, T d) {
  if (!v) v = d;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

RunConfig resolve(RunConfig c) {
  switch (c.experiment) {
    case Experiment::free:
      fill(c.grid_points, 256);
      fill(c.steps, 1000);
      fill(c.record_every, 100);
      fill(c.mass, 0.1);
      break;
    case Experiment::square_well:
      fill(c.grid_points, 256);
      fill(c.steps, 200);
      fill(c.record_every, 10);
      fill(c.mass, 0.15);
      fill(c.barrier_mass, 1.5);
      fill(c.well_length, 224.0);
      break;
    case Experiment::harmonic:
      fill(c.grid_points, 1024);
      fill(c.steps, 20000);
      fill(c.record_every, 100);
      fill(c.mass, 0.5);
      fill(c.kappa, 0.01 / (double(*c.grid_points) * double(*c.grid_points)));
      fill(c.level, 0);
      break;
    case Experiment::kernel:
      fill(c.kernel_n, 9);
      fill(c.kernel_m, 3);
      fill(c.mass, 0.3);
      break;
    case Experiment::gates_selftest:
      break;
    case Experiment::many_body:
      fill(c.grid_points, 8);
      fill(c.steps, 100);
      fill(c.record_every, 10);
      fill(c.mass, std::asin(0.3));
      break;
  }
  fill(c.gamma, 1.0);
  fill(c.grid_points, 256);
  fill(c.steps, 0);
  fill(c.record_every, 1);
  fill(c.mass, 0.0);
  require(*c.grid_points >= 2, "grid must have at least 2 points");
  require(*c.steps >= 0, "steps must be non-negative");
  require(*c.record_every >= 1, "record-every must be at least 1");
  require(*c.mass >= 0.0, "mass must be non-negative");
  require(*c.gamma >= 1.0, "gamma must be at least 1");
  require(c.tau > 0.0, "tau must be positive");
  require(c.gamma_profile == "unit" || c.gamma_profile == "varying",
          "gamma-profile must be unit or varying");
  require(c.well_energy == "relativistic" || c.well_energy == "rest_mass",
          "well-energy must be relativistic or rest_mass");
  return c;
}

namespace {

json config_json(const RunConfig& c) {
  json j = {{"experiment", experiment_name(c.experiment)},
            {"grid", *c.grid_points},
            {"steps", *c.steps},
            {"record_every", *c.record_every},
            {"mass", *c.mass},
            {"gamma", *c.gamma},
            {"tau", c.tau},
            {"seed", c.seed},
            {"out", c.output_path}};
  if (c.barrier_mass) j["barrier_mass"] = *c.barrier_mass;
  if (c.well_length) j["well_length"] = *c.well_length;
  if (c.kappa) j["kappa"] = *c.kappa;
  if (c.level) j["level"] = *c.level;
  if (c.kernel_n) j["kernel_n"] = *c.kernel_n;
  if (c.kernel_m) j["kernel_m"] = *c.kernel_m;
  if (c.experiment == Experiment::harmonic) j["gamma_profile"] = c.gamma_profile;
  if (c.experiment == Experiment::square_well) j["well_energy"] = c.well_energy;
  if (c.experiment == Experiment::many_body) j["snapshots"] = c.snapshots;
  return j;
}

json versions_json() {
  return {{"qlg", QLG_VERSION_STRING},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                        std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                       std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
}

// FNV-1a over the IEEE bit patterns, little-endian byte order
std::string profile_hash(const std::vector<double>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (double d : v) {
    const auto bits = std::bit_cast<std::uint64_t>(d);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class TimeSeries {
 public:
  explicit TimeSeries(const fs::path& p) : os_(p, std::ios::binary) {
    if (!os_) throw DomainError("cannot open " + p.string());
    os_.imbue(std::locale::classic());
    os_ << "t,site,density,flux0,re_up,im_up,re_down,im_down\n";
  }
  void record(long t, const SpinorField& f) {
    for (std::size_t l = 0; l < f.size(); ++l) {
      const double u = std::norm(f[l].up), d = std::norm(f[l].down);
      os_ << t << ',' << l << ',' << format_double(u + d) << ',' << format_double(u - d) << ','
          << format_double(f[l].up.real()) << ',' << format_double(f[l].up.imag()) << ','
          << format_double(f[l].down.real()) << ',' << format_double(f[l].down.imag()) << '\n';
    }
  }

 private:
  std::ofstream os_;
};

class ErrorSeries {
 public:
  explicit ErrorSeries(const fs::path& p) : os_(p, std::ios::binary) {
    if (!os_) throw DomainError("cannot open " + p.string());
    os_.imbue(std::locale::classic());
    os_ << "t,l2_error_vs_analytic\n";
  }
  void record(long t, double e) { os_ << t << ',' << format_double(e) << '\n'; }

 private:
  std::ofstream os_;
};

bool due(long t, const RunConfig& c) { return t % *c.record_every == 0 || t == *c.steps; }

// Portable uniform draws in [-1, 1): the distribution templates of the
// standard library are implementation defined.
double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * std::ldexp(static_cast<double>(rng() >> 11), -53) - 1.0;
}

SpinorField random_field(std::size_t L, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SpinorField f(L);
  for (auto& p : f.sites) {
    const double a = uniform_pm1(rng), b = uniform_pm1(rng);
    const double c = uniform_pm1(rng), d = uniform_pm1(rng);
    p = {cplx(a, b), cplx(c, d)};
  }
  normalize(f);
  return f;
}

json run_free(const RunConfig& c, const fs::path& out) {
  const auto L = static_cast<std::size_t>(*c.grid_points);
  const CollideParams params = CollideParams::uniform(L, *c.mass, *c.gamma, 1.0, c.tau);
  const Evolution evo(params);
  SpinorField f = random_field(L, c.seed);
  TimeSeries ts(out / "timeseries.csv");
  double drift = 0.0;
  ts.record(0, f);
  for (long t = 1; t <= *c.steps; ++t) {
    evo.step(f);
    drift = std::max(drift, std::abs(l2_norm(f) - 1.0));
    if (due(t, c)) ts.record(t, f);
  }
  return {{"eps", bend_amplitude(*c.mass, *c.gamma, 1.0)},
          {"xi", collide_phase(*c.mass, *c.gamma, 1.0)},
          {"max_norm_drift", drift}};
}

json run_square_well(const RunConfig& c, const fs::path& out) {
  SquareWellSpec spec;
  spec.well_length = *c.well_length;
  spec.inner_mass = *c.mass;
  spec.barrier_mass = *c.barrier_mass;
  spec.grid_points = *c.grid_points;
  spec.energy = c.well_energy == "rest_mass" ? WellEnergy::rest_mass : WellEnergy::relativistic;
  const double k = solve_well_wavenumber(spec);
  const auto coef = well_coefficients(spec, k);
  const WellPlacement place = well_placement(spec);
  const CollideParams params = well_params(spec);
  const Evolution evo(params);
  SpinorField f = well_eigenstate(spec, k);
  const std::vector<double> rho0 = observables(f).density;
  double rho0_norm = 0.0;
  for (double r : rho0) rho0_norm += r * r;
  rho0_norm = std::sqrt(rho0_norm);

  TimeSeries ts(out / "timeseries.csv");
  ErrorSeries es(out / "errors.csv");
  double max_dev = 0.0, max_barrier = 0.0;
  ts.record(0, f);
  es.record(0, 0.0);
  for (long t = 1; t <= *c.steps; ++t) {
    evo.step_rotating(f);
    const auto rho = observables(f).density;
    double diff = 0.0, peak = 0.0, barrier = 0.0;
    for (std::size_t l = 0; l < rho.size(); ++l) {
      diff += (rho[l] - rho0[l]) * (rho[l] - rho0[l]);
      peak = std::max(peak, rho[l]);
      if (l < place.first || l >= place.first + place.width) barrier = std::max(barrier, rho[l]);
    }
    const double dev = std::sqrt(diff) / rho0_norm;
    max_dev = std::max(max_dev, dev);
    max_barrier = std::max(max_barrier, barrier / peak);
    if (due(t, c)) {
      ts.record(t, f);
      es.record(t, dev);
    }
  }
  return {{"k", k},
          {"P", coef.P},
          {"residual", well_residual(spec, k)},
          {"C_over_B", {coef.C.real(), coef.C.imag()}},
          {"well_first_site", place.first},
          {"well_sites", place.width},
          {"eps_inner", bend_amplitude(*c.mass, 1.0, 1.0)},
          {"eps_barrier", bend_amplitude(*c.barrier_mass, 1.0, 1.0)},
          {"gamma_profile_hash", profile_hash(params.gamma)},
          {"max_density_deviation", max_dev},
          {"max_barrier_fraction_of_peak", max_barrier}};
}

json run_harmonic(const RunConfig& c, const fs::path& out) {
  HarmonicSpec spec;
  spec.base_mass = *c.mass;
  spec.stiffness = *c.kappa;
  spec.grid_points = *c.grid_points;
  spec.level = *c.level;
  const GammaProfile g = c.gamma_profile == "varying" ? GammaProfile::varying : GammaProfile::unit;
  const CollideParams params = harmonic_params(spec, g);
  const Evolution evo(params);
  SpinorField f = hermite_state(spec);
  std::vector<double> ref(f.size());
  for (std::size_t l = 0; l < f.size(); ++l) ref[l] = std::abs(f[l].up);

  auto error = [&](const SpinorField& s) {
    double e = 0.0;
    for (std::size_t l = 0; l < s.size(); ++l) {
      const double mod = std::sqrt(std::norm(s[l].up) + std::norm(s[l].down));
      e += (mod - ref[l]) * (mod - ref[l]);
    }
    return std::sqrt(e);
  };

  TimeSeries ts(out / "timeseries.csv");
  ErrorSeries es(out / "errors.csv");
  ts.record(0, f);
  es.record(0, 0.0);
  double best = INFINITY, last = 0.0;
  long best_t = 0;
  for (long t = 1; t <= *c.steps; ++t) {
    evo.step_rotating(f);
    if (due(t, c)) {
      last = error(f);
      if (last < best) {
        best = last;
        best_t = t;
      }
      ts.record(t, f);
      es.record(t, last);
    }
  }
  return {{"b", harmonic_b(spec)},
          {"varsigma", harmonic_varsigma(spec)},
          {"mass_edge", params.mass.front()},
          {"gamma_max", *std::max_element(params.gamma.begin(), params.gamma.end())},
          {"gamma_profile_hash", profile_hash(params.gamma)},
          {"min_l2_error", best},
          {"min_l2_error_t", best_t},
          {"final_l2_error", last}};
}

json run_kernel(const RunConfig& c, const fs::path& out) {
  PathProblem p{*c.kernel_n, *c.kernel_m, *c.mass, c.tau};
  std::ofstream os(out / "kernel.csv", std::ios::binary);
  if (!os) throw DomainError("cannot open kernel.csv");
  os.imbue(std::locale::classic());
  os << "s0,sN,re_enumerate,im_enumerate,re_transfer,im_transfer,abs_diff\n";
  double worst = 0.0;
  const bool enumerable = p.n_steps <= kEnumerationCap;
  for (int s0 : {1, -1})
    for (int sN : {1, -1}) {
      const cplx t = transfer_kernel(p, s0, sN);
      const cplx e = enumerable ? enumerate_kernel(p, s0, sN) : cplx(NAN, NAN);
      const double d = std::abs(e - t);
      if (enumerable) worst = std::max(worst, d);
      os << s0 << ',' << sN << ',' << format_double(e.real()) << ',' << format_double(e.imag())
         << ',' << format_double(t.real()) << ',' << format_double(t.imag()) << ','
         << format_double(d) << '\n';
    }
  json j = {{"path_count", count_paths(p)}, {"eps", p.eps()}};
  if (enumerable) {
    j["enumerated_paths"] = enumerate_path_count(p);
    j["max_enumerate_transfer_diff"] = worst;
  }
  return j;
}

json run_many_body(const RunConfig& c, const fs::path& out) {
  const int L = *c.grid_points;
  const CollideParams params =
      CollideParams::uniform(static_cast<std::size_t>(L), *c.mass, *c.gamma, 1.0, c.tau);
  const ManyBodyEvolution mb(L, params);
  const Evolution lattice(params);
  SpinorField ref = random_field(static_cast<std::size_t>(L), c.seed);
  StateVector s = embed_one_body(ref);

  TimeSeries ts(out / "timeseries.csv");
  ErrorSeries es(out / "errors.csv");
  const fs::path snaps = out / "snapshots";
  if (c.snapshots) fs::create_directories(snaps);
  auto snapshot = [&](long t) {
    if (!c.snapshots) return;
    char name[32];
    std::snprintf(name, sizeof name, "step_%06ld.bin", t);
    std::ofstream os(snaps / name, std::ios::binary);
    write_snapshot(os, s, L, static_cast<std::uint64_t>(t));
  };
  ts.record(0, extract_one_body(s, L));
  es.record(0, 0.0);
  snapshot(0);
  double worst = 0.0, drift = 0.0;
  for (long t = 1; t <= *c.steps; ++t) {
    mb.step(s);
    lattice.step(ref);
    const SpinorField one = extract_one_body(s, L);
    double e = 0.0;
    for (int l = 0; l < L; ++l)
      e += std::norm(one[l].up - ref[l].up) + std::norm(one[l].down - ref[l].down);
    worst = std::max(worst, max_abs_diff(one, ref));
    drift = std::max(drift, std::abs(state_norm(s) - 1.0));
    if (due(t, c)) {
      ts.record(t, one);
      es.record(t, std::sqrt(e));
      snapshot(t);
    }
  }
  return {{"qubits", 2 * L},
          {"eps", bend_amplitude(*c.mass, *c.gamma, 1.0)},
          {"max_amplitude_diff_vs_lattice", worst},
          {"max_norm_drift", drift},
          {"particle_number", particle_number(s)}};
}

}  // namespace

json run(const RunConfig& cfg) {
  const RunConfig c = resolve(cfg);
  const fs::path out = c.output_path;
  fs::create_directories(out);
  json derived;
  switch (c.experiment) {
    case Experiment::free: derived = run_free(c, out); break;
    case Experiment::square_well: derived = run_square_well(c, out); break;
    case Experiment::harmonic: derived = run_harmonic(c, out); break;
    case Experiment::kernel: derived = run_kernel(c, out); break;
    case Experiment::gates_selftest: {
      derived = selftest_report();
      std::ofstream os(out / "selftest.json", std::ios::binary);
      os << derived.dump(2) << '\n';
      break;
    }
    case Experiment::many_body: derived = run_many_body(c, out); break;
  }
  json manifest = {{"config", config_json(c)}, {"versions", versions_json()}, {"derived", derived}};
  std::ofstream os(out / "manifest.json", std::ios::binary);
  os << manifest.dump(2) << '\n';
  return manifest;
}

void emit_dispersion_table(std::ostream& os, double m, double ell, double tau, int samples) {
  require(samples >= 2, "dispersion table needs at least 2 samples");
  require(ell > 0.0 && tau > 0.0, "ell and tau must be positive");
  os << "k,p_grid,m_grid,E_grid,E_continuum\n";
  for (int i = 0; i < samples; ++i) {
    const double k = (std::numbers::pi / 2) / ell * i / (samples - 1);
    os << format_double(k) << ',' << format_double(p_grid(k, ell, tau)) << ','
       << format_double(m_grid(k, m, ell)) << ',' << format_double(grid_dispersion(k, m, ell, tau))
       << ',' << format_double(std::sqrt(k * k + m * m)) << '\n';
  }
}

namespace {

double dense_diff(const SparseMat& a, const Eigen::MatrixXd& b) {
  return (Eigen::MatrixXd(a) - b).cwiseAbs().maxCoeff();
}

}  // namespace

json selftest_report() {
  json r;
  bool ok = true;
  auto check = [&](const std::string& name, double residual, double bound) {
    const bool pass = residual <= bound;
    ok = ok && pass;
    r["checks"][name] = {{"residual", residual}, {"bound", bound}, {"pass", pass}};
  };

  double anti = 0.0;
  for (int Q : {2, 3, 4}) {
    const long d = 1L << Q;
    for (int i = 1; i <= Q; ++i)
      for (int j = 1; j <= Q; ++j) {
        const auto [ai, aid] = jw_ladder(i, Q);
        const auto [aj, ajd] = jw_ladder(j, Q);
        const Eigen::MatrixXd id = (i == j ? 1.0 : 0.0) * Eigen::MatrixXd::Identity(d, d);
        anti = std::max(anti, dense_diff(SparseMat(ai * ajd + ajd * ai), id));
        anti = std::max(anti, dense_diff(SparseMat(ai * aj + aj * ai), Eigen::MatrixXd::Zero(d, d)));
      }
  }
  check("anticommutators_q_le_4", anti, 1e-14);

  Eigen::Matrix4d a1, a2;
  a1 << 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0;
  a2 << 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0;
  check("ladder_q2_display",
        std::max(dense_diff(jw_ladder(1, 2).first, a1), dense_diff(jw_ladder(2, 2).first, a2)),
        0.0);

  const double xi = 0.3;
  const cplx e = std::exp(-I * xi);
  double gate_err = 0.0;
  for (double delta : {0.0, 1.0}) {
    GateSpec sw{I * std::numbers::pi, xi, delta, -0.5, GateFamily::idempotent, 1, std::nullopt};
    Mat4 want = Mat4::Zero();
    want(0, 0) = 1.0;
    want(1, 2) = e;
    want(2, 1) = std::conj(e);
    want(3, 3) = 1.0 - 2.0 * delta;
    gate_err = std::max(gate_err, (conservative_gate(sw) - want).cwiseAbs().maxCoeff());
    GateSpec as{I * std::numbers::pi / 2.0, xi, delta, I, GateFamily::tri_idempotent, 1, std::nullopt};
    want = Mat4::Zero();
    want(0, 0) = 1.0;
    want(1, 2) = -e;
    want(2, 1) = std::conj(e);
    want(3, 3) = (I - 1.0) * delta + 1.0;
    gate_err = std::max(gate_err, (conservative_gate(as) - want).cwiseAbs().maxCoeff());
  }
  check("swap_aswap_display", gate_err, 1e-14);

  double inverse = 0.0;
  for (auto fam : {GateFamily::idempotent, GateFamily::tri_idempotent}) {
    GateSpec g{I * 0.7, 0.2, 1.0, fam == GateFamily::idempotent ? cplx(0.3, 0.1) : cplx(0.5, 0.4), fam, 1, std::nullopt};
    GateSpec h = g;
    h.z = -g.z;
    inverse = std::max(inverse, (conservative_gate(g) * conservative_gate(h) - Mat4::Identity())
                                    .cwiseAbs()
                                    .maxCoeff());
  }
  check("gate_times_inverse", inverse, 1e-12);

  double ladder = 0.0, tri = 0.0;
  for (double g : {1.0, 1.7, 3.2}) {
    const double m = 0.4;
    ladder = std::max(ladder, (chiral_collide_gate(m, g, 1.0) - chiral_collide_gate_ladder(m, g, 1.0))
                                  .cwiseAbs()
                                  .maxCoeff());
    const Mat4 n = chiral_generator(m, g, 1.0);
    tri = std::max(tri, (n * n * n - n).cwiseAbs().maxCoeff());
  }
  check("chiral_gate_ladder_vs_matrix", ladder, 1e-13);
  check("chiral_generator_cubed", tri, 1e-12);

  std::mt19937_64 rng(12345);
  double rot = 0.0;
  for (int i = 0; i < 100; ++i) {
    Vec3 q(uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng));
    Vec3 n(uniform_pm1(rng), uniform_pm1(rng), uniform_pm1(rng));
    q.normalize();
    n.normalize();
    const double angle = 4.0 * uniform_pm1(rng);
    rot = std::max(rot, (rotate_qubit(q, n, angle) - rotate_qubit_rodrigues(q, n, angle)).cwiseAbs().maxCoeff());
  }
  check("rotation_su2_vs_rodrigues", rot, 1e-12);

  const PathProblem p{9, 3, 0.3, 1.0};
  double kern = 0.0;
  for (int s0 : {1, -1})
    for (int sN : {1, -1})
      kern = std::max(kern, std::abs(enumerate_kernel(p, s0, sN) - transfer_kernel(p, s0, sN)));
  check("kernel_enumerate_vs_transfer_n9_m3", kern, 1e-12);
  check("path_count_n9_m3", std::abs(double(count_paths(p)) - 84.0), 0.0);

  r["pass"] = ok;
  return r;
}

}  // namespace qlg::cli
