#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qlg/dirac.hpp"
#include "qlg/numerics.hpp"

namespace qlg {

// Energy entering P = k/(E + m).
//   relativistic: E = sqrt(k^2 + m^2)
//   rest_mass:    E = m, i.e. P = k/(2m); this form reproduces the
//                 commonly quoted first crossing at L = 2, m = 0.5
enum class WellEnergy { relativistic, rest_mass };

struct SquareWellSpec {
  double well_length = 2.0;   // L, in the same units as ell
  double inner_mass = 0.5;    // m
  double barrier_mass = 5.0;  // M, must exceed m
  int grid_points = 256;
  double ell = 1.0;
  WellEnergy energy = WellEnergy::relativistic;
};

double well_P(const SquareWellSpec& spec, double k);

// cot(kL/2) - P(k)
double well_residual(const SquareWellSpec& spec, double k);

// Smallest positive root in (0, 2 pi/L); scans in steps of pi/(50 L) and
// bisects. NoRoot when no sign change is found.
double solve_well_wavenumber(const SquareWellSpec& spec);

struct WellCoefficients {
  cplx B;
  cplx C;  // B (iP - 1)/(iP + 1)
  double P;
};
WellCoefficients well_coefficients(const SquareWellSpec& spec, double k);

// Region-II spinor at distance z from the left wall, B = 1, not normalized.
Spinor2 well_profile(const SquareWellSpec& spec, double k, double z);

// Well sites [first, first + width) centred on the grid; site l sits at
// z = (l - first + 1/2) ell from the left wall.
struct WellPlacement {
  std::size_t first = 0;
  std::size_t width = 0;
};
WellPlacement well_placement(const SquareWellSpec& spec);

// Sampled region-II profile, zero in the barriers, unit l2 norm.
SpinorField well_eigenstate(const SquareWellSpec& spec, double k);

// Profile at z = 0 and z = L with the normalization of well_eigenstate.
std::pair<Spinor2, Spinor2> well_wall_values(const SquareWellSpec& spec, double k);

// m inside the well, M outside, gamma = 1 everywhere.
CollideParams well_params(const SquareWellSpec& spec);

struct HarmonicSpec {
  double base_mass = 0.5;  // m
  double stiffness = 0.01 / (1024.0 * 1024.0);  // kappa
  int grid_points = 1024;
  int level = 0;
  double ell = 1.0;
};

double harmonic_b(const HarmonicSpec& spec);        // sqrt(m kappa / 4)
double harmonic_varsigma(const HarmonicSpec& spec); // (m kappa)^(1/4)

// Physicists' Hermite polynomial by three-term recurrence.
double hermite(int n, double x);

// H_n(varsigma z) exp(-b z^2) in the upper component, z measured from the
// grid centre, unit l2 norm. DomainError for n outside [0, 10].
SpinorField hermite_state(const HarmonicSpec& spec);

// Offset of site l from the grid centre.
double harmonic_offset(const HarmonicSpec& spec, std::size_t l);

// 2b sqrt(-2z^2 + sqrt(4z^4 - m(z)^2 z^2 / b^2)), principal branches.
cplx harmonic_wavenumber(const HarmonicSpec& spec, double z);

struct HarmonicProfiles {
  std::vector<double> mass;   // m + kappa z^2 / 2
  std::vector<double> gamma;  // sqrt(|k|^2 + m(z)^2) / m(z)
  std::vector<double> k_abs;
};
HarmonicProfiles harmonic_profiles(const HarmonicSpec& spec);

enum class GammaProfile { unit, varying };

// Collide parameters for the oscillator run. unit keeps gamma = 1; varying
// feeds the gamma profile above into the collide phase.
CollideParams harmonic_params(const HarmonicSpec& spec, GammaProfile g);

}  // namespace qlg
