#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstddef>
#include <vector>

namespace qlg {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using DenseMat = Eigen::MatrixXcd;

// one lattice point: (up, down) amplitudes
struct Spinor2 {
  cplx up{};
  cplx down{};
};

// Periodic one-body field. ell and tau are the grid length and time.
struct SpinorField {
  std::vector<Spinor2> sites;
  double ell = 1.0;
  double tau = 1.0;

  SpinorField() = default;
  explicit SpinorField(std::size_t L, double ell_ = 1.0, double tau_ = 1.0)
      : sites(L), ell(ell_), tau(tau_) {}

  std::size_t size() const { return sites.size(); }
  Spinor2& operator[](std::size_t l) { return sites[l]; }
  const Spinor2& operator[](std::size_t l) const { return sites[l]; }
};

// Sequential sum so the result does not depend on threading.
double l2_norm(const SpinorField& field);

// In-place rescale to unit l2 norm; no-op on the zero field.
void normalize(SpinorField& field);

SpinorField scaled(const SpinorField& field, cplx s);

// max-abs distance between two fields of equal length
double max_abs_diff(const SpinorField& a, const SpinorField& b);

namespace pauli {
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_adjoint(const Mat2& a);

// exp(-i angle A) for an involution A (A*A == 1); throws NotInvolution
// when that fails by more than 1e-12 entrywise.
Mat2 mat_exp_involution(const Mat2& A, double angle);

// ||M M^dagger - 1||_max
double unitarity_defect(const DenseMat& m);

inline double unitarity_defect(const Mat2& m) { return unitarity_defect(DenseMat(m)); }
inline double unitarity_defect(const Mat4& m) { return unitarity_defect(DenseMat(m)); }

}  // namespace qlg
