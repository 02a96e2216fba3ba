#include "qlg/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlg/errors.hpp"

namespace qlg {

namespace {

void validate(const SquareWellSpec& s) {
  if (!(s.well_length > 0.0)) throw DomainError("well length must be positive");
  if (!(s.inner_mass > 0.0)) throw DomainError("inner mass must be positive");
  if (!(s.barrier_mass > s.inner_mass))
    throw DomainError("barrier mass must exceed inner mass");
  if (!(s.ell > 0.0)) throw DomainError("grid length must be positive");
}

void validate(const HarmonicSpec& s) {
  if (!(s.base_mass > 0.0) || !(s.stiffness > 0.0))
    throw DomainError("oscillator needs positive mass and stiffness");
  if (s.grid_points < 2) throw DomainError("lattice needs at least 2 sites");
  if (s.level < 0 || s.level > 10) throw DomainError("level must lie in [0, 10]");
}

}  // namespace

double well_P(const SquareWellSpec& spec, double k) {
  const double m = spec.inner_mass;
  if (spec.energy == WellEnergy::rest_mass) return k / (2.0 * m);
  return k / (std::sqrt(k * k + m * m) + m);
}

double well_residual(const SquareWellSpec& spec, double k) {
  return 1.0 / std::tan(0.5 * k * spec.well_length) - well_P(spec, k);
}

double solve_well_wavenumber(const SquareWellSpec& spec) {
  validate(spec);
  const double L = spec.well_length;
  const double h = std::numbers::pi / (50.0 * L);
  const double kmax = 2.0 * std::numbers::pi / L;
  // cot(kL/2) has its poles at multiples of 2 pi / L, so the scan stays
  // strictly inside the first branch
  double a = h, fa = well_residual(spec, a);
  for (double b = a + h; b < kmax; a = b, b += h) {
    const double fb = well_residual(spec, b);
    if (fa > 0.0 && fb <= 0.0) {
      double lo = a, hi = b;
      while (hi - lo > 1e-12 * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        if (well_residual(spec, mid) > 0.0) lo = mid;
        else hi = mid;
      }
      // finish on the representable grid so the residual is as small as
      // the slope allows
      for (int i = 0; i < 64; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (well_residual(spec, mid) > 0.0) lo = mid;
        else hi = mid;
      }
      return std::abs(well_residual(spec, lo)) < std::abs(well_residual(spec, hi)) ? lo : hi;
    }
    fa = fb;
  }
  throw NoRoot("no crossing of cot(kL/2) = P in (0, 2 pi / L]");
}

WellCoefficients well_coefficients(const SquareWellSpec& spec, double k) {
  const double P = well_P(spec, k);
  const cplx B = 1.0;
  return {B, B * (I * P - 1.0) / (I * P + 1.0), P};
}

Spinor2 well_profile(const SquareWellSpec& spec, double k, double z) {
  const auto c = well_coefficients(spec, k);
  const cplx f = c.B * std::exp(I * (k * z));
  const cplx g = c.C * std::exp(-I * (k * z));
  return {f + g, (f - g) * c.P};
}

WellPlacement well_placement(const SquareWellSpec& spec) {
  validate(spec);
  const long w = std::lround(spec.well_length / spec.ell);
  if (w < 2 || w > spec.grid_points)
    throw DomainError("well must cover between 2 and grid_points sites");
  WellPlacement p;
  p.width = static_cast<std::size_t>(w);
  p.first = (static_cast<std::size_t>(spec.grid_points) - p.width) / 2;
  return p;
}

namespace {

double sampled_norm(const SquareWellSpec& spec, double k, const WellPlacement& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.width; ++i) {
    const Spinor2 v = well_profile(spec, k, (i + 0.5) * spec.ell);
    s += std::norm(v.up) + std::norm(v.down);
  }
  return std::sqrt(s);
}

}  // namespace

SpinorField well_eigenstate(const SquareWellSpec& spec, double k) {
  const WellPlacement p = well_placement(spec);
  SpinorField f(static_cast<std::size_t>(spec.grid_points), spec.ell, spec.ell);
  const double n = sampled_norm(spec, k, p);
  for (std::size_t i = 0; i < p.width; ++i) {
    const Spinor2 v = well_profile(spec, k, (i + 0.5) * spec.ell);
    f[p.first + i] = {v.up / n, v.down / n};
  }
  return f;
}

std::pair<Spinor2, Spinor2> well_wall_values(const SquareWellSpec& spec, double k) {
  const WellPlacement p = well_placement(spec);
  const double n = sampled_norm(spec, k, p);
  Spinor2 a = well_profile(spec, k, 0.0);
  Spinor2 b = well_profile(spec, k, spec.well_length);
  return {{a.up / n, a.down / n}, {b.up / n, b.down / n}};
}

CollideParams well_params(const SquareWellSpec& spec) {
  const WellPlacement p = well_placement(spec);
  const auto G = static_cast<std::size_t>(spec.grid_points);
  CollideParams c = CollideParams::uniform(G, spec.barrier_mass, 1.0, spec.ell, spec.ell);
  for (std::size_t i = 0; i < p.width; ++i) c.mass[p.first + i] = spec.inner_mass;
  return c;
}

double harmonic_b(const HarmonicSpec& spec) {
  return std::sqrt(spec.base_mass * spec.stiffness / 4.0);
}

double harmonic_varsigma(const HarmonicSpec& spec) {
  return std::pow(spec.base_mass * spec.stiffness, 0.25);
}

double hermite(int n, double x) {
  if (n < 0) throw DomainError("negative Hermite order");
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * x;
  for (int j = 1; j < n; ++j) {
    const double h2 = 2.0 * x * h1 - 2.0 * j * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double harmonic_offset(const HarmonicSpec& spec, std::size_t l) {
  return (static_cast<double>(l) - 0.5 * spec.grid_points) * spec.ell;
}

SpinorField hermite_state(const HarmonicSpec& spec) {
  validate(spec);
  const auto L = static_cast<std::size_t>(spec.grid_points);
  const double b = harmonic_b(spec), vs = harmonic_varsigma(spec);
  SpinorField f(L, spec.ell, spec.ell);
  for (std::size_t l = 0; l < L; ++l) {
    const double z = harmonic_offset(spec, l);
    f[l].up = hermite(spec.level, vs * z) * std::exp(-b * z * z);
  }
  normalize(f);
  return f;
}

cplx harmonic_wavenumber(const HarmonicSpec& spec, double z) {
  const double b = harmonic_b(spec);
  const double m = spec.base_mass + 0.5 * spec.stiffness * z * z;
  const cplx inner = std::sqrt(cplx(4.0 * z * z * z * z - m * m * z * z / (b * b)));
  return 2.0 * b * std::sqrt(-2.0 * z * z + inner);
}

HarmonicProfiles harmonic_profiles(const HarmonicSpec& spec) {
  validate(spec);
  const auto L = static_cast<std::size_t>(spec.grid_points);
  HarmonicProfiles p;
  p.mass.resize(L);
  p.gamma.resize(L);
  p.k_abs.resize(L);
  for (std::size_t l = 0; l < L; ++l) {
    const double z = harmonic_offset(spec, l);
    const double m = spec.base_mass + 0.5 * spec.stiffness * z * z;
    const double k = std::abs(harmonic_wavenumber(spec, z));
    p.mass[l] = m;
    p.k_abs[l] = k;
    p.gamma[l] = std::sqrt(k * k + m * m) / m;
  }
  return p;
}

CollideParams harmonic_params(const HarmonicSpec& spec, GammaProfile g) {
  HarmonicProfiles p = harmonic_profiles(spec);
  CollideParams c;
  c.mass = std::move(p.mass);
  c.gamma = g == GammaProfile::varying ? std::move(p.gamma)
                                       : std::vector<double>(c.mass.size(), 1.0);
  c.ell = spec.ell;
  c.tau = spec.ell;
  return c;
}

}  // namespace qlg
