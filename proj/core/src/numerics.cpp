#include "qlg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlg/errors.hpp"

namespace qlg {

double l2_norm(const SpinorField& field) {
  double s = 0.0;
  for (const auto& p : field.sites) s += std::norm(p.up) + std::norm(p.down);
  return std::sqrt(s);
}

void normalize(SpinorField& field) {
  const double n = l2_norm(field);
  if (n == 0.0) return;
  for (auto& p : field.sites) {
    p.up /= n;
    p.down /= n;
  }
}

SpinorField scaled(const SpinorField& field, cplx s) {
  SpinorField out = field;
  for (auto& p : out.sites) {
    p.up *= s;
    p.down *= s;
  }
  return out;
}

double max_abs_diff(const SpinorField& a, const SpinorField& b) {
  double d = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t l = 0; l < n; ++l) {
    d = std::max(d, std::abs(a[l].up - b[l].up));
    d = std::max(d, std::abs(a[l].down - b[l].down));
  }
  return d;
}

namespace pauli {
Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
Mat2 y() {
  Mat2 m;
  m << 0, -I, I, 0;
  return m;
}
Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

Mat2 mat_mul(const Mat2& a, const Mat2& b) { return a * b; }

Mat2 mat_adjoint(const Mat2& a) { return a.adjoint(); }

Mat2 mat_exp_involution(const Mat2& A, double angle) {
  const double defect = (A * A - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-12))
    throw NotInvolution("matrix squares to identity only within " +
                        std::to_string(defect));
  return std::cos(angle) * Mat2::Identity() - I * std::sin(angle) * A;
}

double unitarity_defect(const DenseMat& m) {
  const DenseMat d = m * m.adjoint() - DenseMat::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

}  // namespace qlg
