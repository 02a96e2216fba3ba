#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qlg/numerics.hpp"

namespace qlg {

// Site-sampled collision parameters, natural units (hbar = c = 1).
//
// The bend amplitude eps = sin(gamma m ell)/gamma is what the collide
// operator actually uses; tau is carried along for the dispersion helpers
// and is otherwise implied by eps = m tau.
struct CollideParams {
  std::vector<double> mass;
  std::vector<double> gamma;
  double ell = 1.0;
  double tau = 1.0;

  std::size_t size() const { return mass.size(); }

  static CollideParams uniform(std::size_t L, double m, double gamma = 1.0,
                               double ell = 1.0, double tau = 1.0);
};

double bend_amplitude(double m, double gamma, double ell);  // eps
double collide_phase(double m, double gamma, double ell);   // xi = m ell sqrt(gamma^2-1)

// Inverse of bend_amplitude at gamma = 1: the mass giving bend eps.
double mass_for_bend(double eps, double ell = 1.0);

// U_C acting on (up, down). DomainError for gamma < 1, m < 0 or
// non-finite input.
Mat2 build_collide(double m, double gamma, double ell);
Mat2 build_collide(const CollideParams& params, std::size_t site);

// R = (sigma_x + sigma_z)/sqrt(2); Hermitian and its own inverse.
Mat2 rotation_R();

// up moves one site toward +z, down one site toward -z, periodic.
SpinorField stream(const SpinorField& field);

enum class StepOrder { collide_stream, stream_collide };

// Precomputes U_C per site so repeated steps only do the 2x2 products.
class Evolution {
 public:
  explicit Evolution(const CollideParams& params,
                     StepOrder order = StepOrder::collide_stream);

  std::size_t size() const { return diag_.size(); }

  void step(SpinorField& field) const;
  // R, collide, stream, R. The field is kept in the frame where the
  // Hamiltonian reads sigma_x p + sigma_z m.
  void step_rotating(SpinorField& field) const;

 private:
  void check(const SpinorField& field) const;
  void collide(SpinorField& field) const;
  StepOrder order_;
  std::vector<cplx> diag_, off_ud_, off_du_;
  mutable std::vector<Spinor2> scratch_;
};

SpinorField step(const SpinorField& field, const CollideParams& params,
                 StepOrder order = StepOrder::collide_stream);
SpinorField step_rotating(const SpinorField& field, const CollideParams& params);

struct Observables {
  std::vector<double> density;
  std::vector<double> flux0;  // |up|^2 - |down|^2
  double norm = 0.0;
};

Observables observables(const SpinorField& field);

// Classical comparator with collision weight (m tau)^2; up streams +z like
// the quantum stepper so the two stay comparable.
std::pair<std::vector<double>, std::vector<double>> lattice_boltzmann_step(
    const std::vector<double>& f_up, const std::vector<double>& f_down,
    double m, double tau);

// Grid energy E^2 = sin^2(ell k)/tau^2 + m^2 cos^2(ell k). The mass term
// is squared; see docs/conventions.md.
double grid_dispersion(double k, double m, double ell, double tau);
double p_grid(double k, double ell, double tau);
double m_grid(double k, double m, double ell);

// Momentum-space step diag(e^{-ik ell}, e^{ik ell}) * U_C for a plane
// wave e^{ik z}.
Mat2 momentum_step(double k, double m, double gamma, double ell);

// omega with eigenvalues e^{-i omega}, e^{+i omega} of momentum_step:
// cos omega = sqrt(1 - eps^2) cos(k ell).
double step_eigenphase(double k, double eps, double ell);

// Smallest positive ell with sin(E ell) = E tau. DomainError unless
// E > 0 and 0 < E tau <= 1.
double solve_grid_length(double E, double tau);

}  // namespace qlg
