#include "qlg/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlg/errors.hpp"

namespace qlg {

CollideParams CollideParams::uniform(std::size_t L, double m, double gamma,
                                     double ell, double tau) {
  CollideParams p;
  p.mass.assign(L, m);
  p.gamma.assign(L, gamma);
  p.ell = ell;
  p.tau = tau;
  return p;
}

double bend_amplitude(double m, double gamma, double ell) {
  return std::sin(gamma * m * ell) / gamma;
}

double collide_phase(double m, double gamma, double ell) {
  return m * ell * std::sqrt(gamma * gamma - 1.0);
}

double mass_for_bend(double eps, double ell) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw DomainError("bend amplitude must lie in [0, 1]");
  return std::asin(eps) / ell;
}

Mat2 build_collide(double m, double gamma, double ell) {
  if (!std::isfinite(m) || !std::isfinite(gamma) || !std::isfinite(ell))
    throw DomainError("non-finite collide parameter");
  if (m < 0.0) throw DomainError("negative mass " + std::to_string(m));
  if (gamma < 1.0) throw DomainError("gamma below 1: " + std::to_string(gamma));
  if (ell <= 0.0) throw DomainError("grid length must be positive");
  const double s = std::sin(gamma * m * ell);
  const double rad = gamma * gamma - s * s;
  if (rad < 0.0) throw DomainError("gamma^2 < sin^2(gamma m ell)");
  const double a = std::sqrt(rad) / gamma;
  const double eps = s / gamma;
  const double xi = collide_phase(m, gamma, ell);
  Mat2 u;
  u << a, -I * std::exp(-I * xi) * eps,
       -I * std::exp(I * xi) * eps, a;
  return u;
}

Mat2 build_collide(const CollideParams& params, std::size_t site) {
  if (site >= params.mass.size() || site >= params.gamma.size())
    throw DomainError("site outside collide parameter range");
  return build_collide(params.mass[site], params.gamma[site], params.ell);
}

Mat2 rotation_R() {
  return (pauli::x() + pauli::z()) / std::numbers::sqrt2;
}

SpinorField stream(const SpinorField& field) {
  const std::size_t L = field.size();
  SpinorField out(L, field.ell, field.tau);
  for (std::size_t l = 0; l < L; ++l) {
    out[(l + 1) % L].up = field[l].up;
    out[(l + L - 1) % L].down = field[l].down;
  }
  return out;
}

Evolution::Evolution(const CollideParams& params, StepOrder order)
    : order_(order) {
  const std::size_t L = params.size();
  if (L < 2) throw DomainError("lattice needs at least 2 sites");
  if (params.gamma.size() != L)
    throw DomainError("mass and gamma profiles differ in length");
  diag_.resize(L);
  off_ud_.resize(L);
  off_du_.resize(L);
  for (std::size_t l = 0; l < L; ++l) {
    const Mat2 u = build_collide(params, l);
    diag_[l] = u(0, 0);
    off_ud_[l] = u(0, 1);
    off_du_[l] = u(1, 0);
  }
  scratch_.resize(L);
}

void Evolution::check(const SpinorField& field) const {
  if (field.size() != diag_.size())
    throw DomainError("field and collide parameters differ in length");
}

void Evolution::collide(SpinorField& field) const {
  const std::size_t L = field.size();
  for (std::size_t l = 0; l < L; ++l) {
    const cplx u = field[l].up, d = field[l].down;
    field[l].up = diag_[l] * u + off_ud_[l] * d;
    field[l].down = off_du_[l] * u + diag_[l] * d;
  }
}

void Evolution::step(SpinorField& field) const {
  check(field);
  const std::size_t L = field.size();
  if (order_ == StepOrder::collide_stream) collide(field);
  auto& s = scratch_;
  for (std::size_t l = 0; l < L; ++l) {
    s[(l + 1) % L].up = field[l].up;
    s[(l + L - 1) % L].down = field[l].down;
  }
  field.sites.swap(s);
  if (order_ == StepOrder::stream_collide) collide(field);
}

void Evolution::step_rotating(SpinorField& field) const {
  check(field);
  const double h = 1.0 / std::numbers::sqrt2;
  auto rotate = [h](SpinorField& f) {
    for (auto& p : f.sites) {
      const cplx u = p.up, d = p.down;
      p.up = h * (u + d);
      p.down = h * (u - d);
    }
  };
  rotate(field);
  step(field);
  rotate(field);
}

SpinorField step(const SpinorField& field, const CollideParams& params,
                 StepOrder order) {
  SpinorField out = field;
  Evolution(params, order).step(out);
  return out;
}

SpinorField step_rotating(const SpinorField& field, const CollideParams& params) {
  SpinorField out = field;
  Evolution(params).step_rotating(out);
  return out;
}

Observables observables(const SpinorField& field) {
  Observables o;
  o.density.reserve(field.size());
  o.flux0.reserve(field.size());
  for (const auto& p : field.sites) {
    const double u = std::norm(p.up), d = std::norm(p.down);
    o.density.push_back(u + d);
    o.flux0.push_back(u - d);
  }
  o.norm = l2_norm(field);
  return o;
}

std::pair<std::vector<double>, std::vector<double>> lattice_boltzmann_step(
    const std::vector<double>& f_up, const std::vector<double>& f_down,
    double m, double tau) {
  const double eps = m * tau;
  if (!(eps >= 0.0 && eps <= 1.0))
    throw DomainError("lattice Boltzmann step needs 0 <= m tau <= 1");
  const std::size_t L = f_up.size();
  if (f_down.size() != L) throw DomainError("distribution lengths differ");
  const double w = eps * eps;
  std::vector<double> up(L), down(L);
  for (std::size_t l = 0; l < L; ++l) {
    const double du = w * (f_down[l] - f_up[l]);
    up[(l + 1) % L] = f_up[l] + du;
    down[(l + L - 1) % L] = f_down[l] - du;
  }
  return {std::move(up), std::move(down)};
}

double grid_dispersion(double k, double m, double ell, double tau) {
  const double s = std::sin(ell * k) / tau;
  const double c = m * std::cos(ell * k);
  return std::sqrt(s * s + c * c);
}

double p_grid(double k, double ell, double tau) { return std::sin(ell * k) / tau; }

double m_grid(double k, double m, double ell) { return m * std::cos(ell * k); }

Mat2 momentum_step(double k, double m, double gamma, double ell) {
  Mat2 s = Mat2::Zero();
  s(0, 0) = std::exp(-I * (k * ell));
  s(1, 1) = std::exp(I * (k * ell));
  return s * build_collide(m, gamma, ell);
}

double step_eigenphase(double k, double eps, double ell) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("bend amplitude outside [0, 1]");
  double c = std::sqrt(1.0 - eps * eps) * std::cos(k * ell);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

double solve_grid_length(double E, double tau) {
  const double x = E * tau;
  if (!(E > 0.0) || !(x > 0.0 && x <= 1.0))
    throw DomainError("transcendental relation needs E > 0 and 0 < E tau <= 1");
  return std::asin(x) / E;
}

}  // namespace qlg
