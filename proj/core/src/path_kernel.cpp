#include "qlg/path_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qlg/errors.hpp"

namespace qlg {

namespace {

void validate(const PathProblem& p) {
  if (p.n_steps < 1) throw DomainError("path needs at least one step");
  if (std::abs(p.magnetization) > p.n_steps)
    throw DomainError("|M| exceeds N");
  if ((p.n_steps - p.magnetization) % 2 != 0)
    throw InvalidParity("N - M must be even (N=" + std::to_string(p.n_steps) +
                        ", M=" + std::to_string(p.magnetization) + ")");
  if (!(p.tau > 0.0)) throw DomainError("tau must be positive");
  const double e = p.eps();
  if (!(e >= 0.0 && e <= 1.0)) throw DomainError("m tau must lie in [0, 1]");
}

void validate_spin(int s) {
  if (s != 1 && s != -1) throw DomainError("spin must be +1 or -1");
}

int row(int s) { return s == 1 ? 0 : 1; }

cplx ipow(cplx base, int n) {
  cplx r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

// hist[R] counts continuations s_1..s_{N-1} that give R bends in total
void count_bends(int N, int plus_left, int minus_left, int prev, int sN,
                 int bends, std::vector<std::uint64_t>& hist) {
  if (plus_left == 0 && minus_left == 0) {
    hist[bends + (prev != sN ? 1 : 0)] += 1;
    return;
  }
  if (plus_left > 0)
    count_bends(N, plus_left - 1, minus_left, 1, sN, bends + (prev == -1), hist);
  if (minus_left > 0)
    count_bends(N, plus_left, minus_left - 1, -1, sN, bends + (prev == 1), hist);
}

std::vector<std::uint64_t> bend_histogram(const PathProblem& p, int s0, int sN) {
  const int N = p.n_steps;
  int plus = (N + p.magnetization) / 2;
  int minus = (N - p.magnetization) / 2;
  std::vector<std::uint64_t> hist(N + 1, 0);
  if (s0 == 1) {
    if (plus == 0) return hist;
    --plus;
  } else {
    if (minus == 0) return hist;
    --minus;
  }
  count_bends(N, plus, minus, s0, sN, 0, hist);
  return hist;
}

}  // namespace

std::uint64_t count_paths(const PathProblem& prob) {
  validate(prob);
  const int N = prob.n_steps;
  const int P = (N - prob.magnetization) / 2;
  std::uint64_t c = 1;
  // c stays an exact binomial after every division
  for (int i = 1; i <= P; ++i) c = c * static_cast<std::uint64_t>(N - P + i) / i;
  return c;
}

std::uint64_t enumerate_path_count(const PathProblem& prob) {
  validate(prob);
  if (prob.n_steps > kEnumerationCap)
    throw BudgetExceeded("enumeration capped at N = " + std::to_string(kEnumerationCap));
  std::uint64_t total = 0;
  for (int s0 : {1, -1})
    for (auto h : bend_histogram(prob, s0, 1)) total += h;
  return total;
}

cplx enumerate_kernel(const PathProblem& prob, int s0, int sN, Weighting w) {
  validate(prob);
  validate_spin(s0);
  validate_spin(sN);
  if (prob.n_steps > kEnumerationCap)
    throw BudgetExceeded("enumeration capped at N = " + std::to_string(kEnumerationCap));
  const double e = prob.eps();
  const cplx straight = w == Weighting::unitary ? std::sqrt(1.0 - e * e) : 1.0;
  const cplx bend = I * e;
  const auto hist = bend_histogram(prob, s0, sN);
  const int N = prob.n_steps;
  cplx k = 0.0;
  for (int R = 0; R <= N; ++R) {
    if (hist[R] == 0) continue;
    k += static_cast<double>(hist[R]) * ipow(straight, N - R) * ipow(bend, R);
  }
  return k;
}

cplx enumerate_kernel(const PathProblem& prob, int sN, Weighting w) {
  return enumerate_kernel(prob, 1, sN, w) + enumerate_kernel(prob, -1, sN, w);
}

double mode_angle(int n, int N, ModeGrid grid) {
  if (grid == ModeGrid::exact) return std::numbers::pi * n / (2.0 * N);
  return 2.0 * std::numbers::pi * n / N;
}

Couplings transfer_couplings(double eps) {
  return {-0.5 * std::log(cplx(std::sqrt(1.0 - eps * eps))),
          -0.5 * std::log(I * eps)};
}

Mat2 transfer_matrix(double theta, double eps) {
  const double a = std::sqrt(1.0 - eps * eps);
  Mat2 u;
  u << std::exp(-I * theta) * a, I * eps,
       I * eps, std::exp(I * theta) * a;
  return u;
}

Mat2 transfer_matrix(double theta, const Couplings& c) {
  const cplx e2mu = std::exp(-2.0 * c.mu);
  const cplx e2nu = std::exp(-2.0 * c.nu);
  Mat2 u;
  u << std::exp(-I * theta) * e2mu, e2nu,
       e2nu, std::exp(I * theta) * e2mu;
  return u;
}

Mat2 transfer_stream(double theta) {
  Mat2 s = Mat2::Zero();
  s(0, 0) = std::exp(-I * theta);
  s(1, 1) = std::exp(I * theta);
  return s;
}

Mat2 transfer_collide(double theta, double eps) {
  const double a = std::sqrt(1.0 - eps * eps);
  Mat2 c;
  c << a, I * eps * std::exp(I * theta),
       I * eps * std::exp(-I * theta), a;
  return c;
}

cplx transfer_kernel(const PathProblem& prob, int s0, int sN, ModeGrid grid) {
  validate(prob);
  validate_spin(s0);
  validate_spin(sN);
  const int N = prob.n_steps;
  const int M = prob.magnetization;
  cplx k = 0.0;
  for (int n = -N; n <= N - 1; ++n) {
    const double th = mode_angle(n, N, grid);
    const Mat2 u = transfer_matrix(th, prob.eps());
    Mat2 z = Mat2::Identity();
    for (int i = 0; i < N; ++i) z = z * u;
    k += std::exp(I * (th * M)) * std::exp(-I * (th * (s0 - sN) / 2.0)) *
         z(row(s0), row(sN));
  }
  return k / (2.0 * N);
}

cplx transfer_kernel(const PathProblem& prob, int sN, ModeGrid grid) {
  return transfer_kernel(prob, 1, sN, grid) + transfer_kernel(prob, -1, sN, grid);
}

std::pair<cplx, cplx> transfer_generator_phase(const PathProblem& prob, int n,
                                               ModeGrid grid) {
  validate(prob);
  const double th = mode_angle(n, prob.n_steps, grid);
  const double e = prob.eps();
  // (E tau)^2 = sin^2 theta + eps^2 cos^2 theta
  const double et2 = std::sin(th) * std::sin(th) + e * e * std::cos(th) * std::cos(th);
  if (et2 > 1.0 + 1e-15) throw DomainError("E tau exceeds 1");
  // signed cosine keeps the phases right on the literal grid where
  // |theta| can pass pi/2
  const double c = std::clamp(std::sqrt(1.0 - e * e) * std::cos(th), -1.0, 1.0);
  const double w = std::acos(c);
  return {std::exp(-I * w), std::exp(I * w)};
}

}  // namespace qlg
