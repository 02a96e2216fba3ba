#pragma once

#include <cstdint>
#include <utility>

#include "qlg/numerics.hpp"

namespace qlg {

// N steps with signs s_0..s_{N-1} summing to M. The terminal spin s_N
// only enters through the last bend (s_{N-1}, s_N).
struct PathProblem {
  int n_steps = 1;
  int magnetization = 1;
  double mass = 0.0;
  double tau = 1.0;

  double eps() const { return mass * tau; }
};

inline constexpr int kEnumerationCap = 24;

// Mode grid for the Fourier form of the fixed-magnetization delta.
//   exact:   theta_n = pi n / (2N); exact for every (N, M)
//   literal: theta_n = 2 pi n / N; aliases unless N is odd and |M| < N
enum class ModeGrid { exact, literal };

// unitary: sqrt(1-eps^2) per straight link, i eps per bend.
// feynman: straight links weigh 1 (non-unitary comparison mode).
enum class Weighting { unitary, feynman };

// C(N, P), P = (N - M)/2. InvalidParity when N - M is odd.
std::uint64_t count_paths(const PathProblem& prob);

// Number of sign sequences the enumerator visits (s_0 free).
std::uint64_t enumerate_path_count(const PathProblem& prob);

// Fixed (s0, sN) entry. BudgetExceeded above kEnumerationCap steps.
cplx enumerate_kernel(const PathProblem& prob, int s0, int sN,
                      Weighting w = Weighting::unitary);
// Sum over s0 = +-1 at fixed sN; the default kernel entry.
cplx enumerate_kernel(const PathProblem& prob, int sN,
                      Weighting w = Weighting::unitary);

double mode_angle(int n, int N, ModeGrid grid);

struct Couplings {
  cplx mu;  // -1/2 log sqrt(1 - eps^2)
  cplx nu;  // -1/2 log(i eps), principal branch
};
Couplings transfer_couplings(double eps);

// Per-mode transfer matrix with rows/cols ordered (s = +1, s = -1):
//   [[e^{-i theta} e^{-2 mu}, e^{-2 nu}], [e^{-2 nu}, e^{i theta} e^{-2 mu}]]
Mat2 transfer_matrix(double theta, double eps);
Mat2 transfer_matrix(double theta, const Couplings& c);
// The same matrix split as stream * collide.
Mat2 transfer_stream(double theta);
Mat2 transfer_collide(double theta, double eps);

cplx transfer_kernel(const PathProblem& prob, int s0, int sN,
                     ModeGrid grid = ModeGrid::exact);
cplx transfer_kernel(const PathProblem& prob, int sN,
                     ModeGrid grid = ModeGrid::exact);

// Eigenvalues e^{-i w}, e^{+i w} of the mode-n transfer matrix with
// w = arccos(sqrt(1 - (E tau)^2)), E the grid energy at ell k = theta_n.
std::pair<cplx, cplx> transfer_generator_phase(const PathProblem& prob, int n,
                                               ModeGrid grid = ModeGrid::exact);

}  // namespace qlg
