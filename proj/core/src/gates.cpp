#include "qlg/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qlg/dirac.hpp"
#include "qlg/errors.hpp"

namespace qlg {

QubitReps qubit_representations(const QubitState& q) {
  QubitReps r;
  const double c = std::cos(q.theta / 2), s = std::sin(q.theta / 2);
  r.hilbert << c, std::exp(I * q.phi) * s;
  r.bloch << std::sin(q.theta) * std::cos(q.phi), std::sin(q.theta) * std::sin(q.phi),
      std::cos(q.theta);
  r.su2 << std::cos(q.theta), std::exp(-I * q.phi) * std::sin(q.theta),
      std::exp(I * q.phi) * std::sin(q.theta), -std::cos(q.theta);
  return r;
}

Vec3 bloch_from_matrix(const Mat2& m) {
  return {0.5 * (m * pauli::x()).trace().real(), 0.5 * (m * pauli::y()).trace().real(),
          0.5 * (m * pauli::z()).trace().real()};
}

namespace {

void check_axis(const Vec3& axis) {
  if (!(std::abs(axis.norm() - 1.0) <= 1e-12))
    throw BadAxis("rotation axis is not a unit vector (|n| = " +
                  std::to_string(axis.norm()) + ")");
}

Mat2 dot_sigma(const Vec3& v) {
  return v.x() * pauli::x() + v.y() * pauli::y() + v.z() * pauli::z();
}

}  // namespace

Mat2 su2_rotation(const Vec3& axis, double angle) {
  return std::cos(angle / 2) * Mat2::Identity() - I * std::sin(angle / 2) * dot_sigma(axis);
}

Vec3 rotate_qubit(const Vec3& q, const Vec3& axis, double angle) {
  check_axis(axis);
  const Mat2 m = su2_rotation(axis, angle) * dot_sigma(q) * su2_rotation(axis, -angle);
  return bloch_from_matrix(m);
}

Vec3 rotate_qubit_rodrigues(const Vec3& q, const Vec3& axis, double angle) {
  check_axis(axis);
  return std::cos(angle) * q + (1 - std::cos(angle)) * axis * axis.dot(q) +
         std::sin(angle) * axis.cross(q);
}

namespace {

SparseMat kron(const SparseMat& a, const SparseMat& b) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (int i = 0; i < a.outerSize(); ++i)
    for (SparseMat::InnerIterator ia(a, i); ia; ++ia)
      for (int j = 0; j < b.outerSize(); ++j)
        for (SparseMat::InnerIterator ib(b, j); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
  SparseMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SparseMat small(std::initializer_list<Eigen::Triplet<double>> t) {
  SparseMat m(2, 2);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

void check_qubit(int i, int Q) {
  if (Q < 1 || Q > 16 || i < 1 || i > Q)
    throw DomainError("need 1 <= i <= Q <= 16 (i=" + std::to_string(i) +
                      ", Q=" + std::to_string(Q) + ")");
}

}  // namespace

std::pair<SparseMat, SparseMat> jw_ladder(int i, int Q) {
  check_qubit(i, Q);
  const SparseMat s3 = small({{0, 0, 1.0}, {1, 1, -1.0}});
  const SparseMat one = small({{0, 0, 1.0}, {1, 1, 1.0}});
  const SparseMat a = small({{0, 1, 1.0}});
  SparseMat out = i == 1 ? a : s3;
  for (int k = 2; k <= Q; ++k) out = kron(out, k < i ? s3 : (k == i ? a : one));
  SparseMat dag = out.transpose();
  return {out, dag};
}

SparseMat unfolded_number(int i, int Q) {
  check_qubit(i, Q);
  const SparseMat n = small({{1, 1, 1.0}});
  const SparseMat one = small({{0, 0, 1.0}, {1, 1, 1.0}});
  SparseMat out = i == 1 ? n : one;
  for (int k = 2; k <= Q; ++k) out = kron(out, k == i ? n : one);
  return out;
}

Mat4 gate_generator(const GateSpec& spec) {
  if (spec.delta != 0.0 && spec.delta != 1.0)
    throw ConstraintViolated("delta must be 0 or 1");
  if (spec.branch != 1 && spec.branch != -1)
    throw ConstraintViolated("branch must be +1 or -1");
  const cplx b = spec.B * std::exp(-I * spec.xi);
  const double b2 = std::norm(b);
  cplx A, D;
  if (spec.family == GateFamily::idempotent) {
    if (spec.A) {
      A = *spec.A;
    } else {
      if (1.0 - 4.0 * b2 < -1e-12) throw ConstraintViolated("idempotent family needs |B| <= 1/2");
      A = 0.5 * (1.0 + spec.branch * std::sqrt(std::max(0.0, 1.0 - 4.0 * b2)));
    }
    D = 1.0 - A;
  } else {
    if (spec.A) {
      A = *spec.A;
    } else {
      if (1.0 - b2 < -1e-12) throw ConstraintViolated("tri-idempotent family needs |B| <= 1");
      A = spec.branch * std::sqrt(std::max(0.0, 1.0 - b2));
    }
    D = -A;
  }
  Mat4 h = Mat4::Zero();
  h(1, 1) = A;
  h(1, 2) = b;
  h(2, 1) = std::conj(b);
  h(2, 2) = D;
  h(3, 3) = spec.delta;
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw ConstraintViolated("generator is not Hermitian");
  const Mat4 h2 = h * h;
  if (spec.family == GateFamily::idempotent) {
    if ((h2 - h).cwiseAbs().maxCoeff() > 1e-12) throw ConstraintViolated("H^2 != H");
  } else {
    if ((h2 * h - h).cwiseAbs().maxCoeff() > 1e-12) throw ConstraintViolated("H^3 != H");
    if ((h2 - h).cwiseAbs().maxCoeff() <= 1e-12)
      throw ConstraintViolated("H^2 == H; generator is idempotent");
  }
  return h;
}

Mat4 conservative_gate(const GateSpec& spec) {
  const Mat4 h = gate_generator(spec);
  const Mat4 one = Mat4::Identity();
  if (spec.family == GateFamily::idempotent) return one + (std::exp(spec.z) - 1.0) * h;
  return one + std::sinh(spec.z) * h + (std::cosh(spec.z) - 1.0) * (h * h);
}

namespace {

// the gate corner is written for eps in [0, 1]
double gate_bend(double m, double gamma, double ell) {
  (void)build_collide(m, gamma, ell);
  const double eps = bend_amplitude(m, gamma, ell);
  if (eps < 0.0) throw DomainError("chiral gate needs sin(gamma m ell) >= 0");
  return eps;
}

}  // namespace

Mat4 chiral_collide_gate(double m, double gamma, double ell) {
  const Mat2 u = build_collide(m, gamma, ell);
  const double eps = gate_bend(m, gamma, ell);
  Mat4 g = Mat4::Zero();
  g(0, 0) = 1.0;
  g.block<2, 2>(1, 1) = u;
  g(3, 3) = std::exp(-I * std::acos(std::sqrt(1.0 - eps * eps)));
  return g;
}

Mat4 chiral_collide_gate_ladder(double m, double gamma, double ell) {
  // qubit 1 (leftmost factor) carries down, qubit 2 carries up, so the
  // tensor index is n_up + 2 n_down
  const auto [ad, add] = jw_ladder(1, 2);
  const auto [au, aud] = jw_ladder(2, 2);
  const Mat4 a_dn = Eigen::MatrixXd(ad).cast<cplx>(), a_dn_dag = Eigen::MatrixXd(add).cast<cplx>();
  const Mat4 a_up = Eigen::MatrixXd(au).cast<cplx>(), a_up_dag = Eigen::MatrixXd(aud).cast<cplx>();
  const Mat4 n_up = a_up_dag * a_up, n_dn = a_dn_dag * a_dn;
  const Mat4 one = Mat4::Identity();

  const double eps = gate_bend(m, gamma, ell);
  const double xi = collide_phase(m, gamma, ell);
  const double c = std::sqrt(1.0 - eps * eps);
  const cplx sh = -I * eps;  // sinh z
  const cplx ez = c + sh;    // e^z
  const cplx b = std::exp(-I * xi);
  return one - n_up - n_dn + n_up * n_dn +
         sh * (b * a_up_dag * a_dn + std::conj(b) * a_dn_dag * a_up) +
         c * (n_up + n_dn - 2.0 * n_up * n_dn) + ez * n_up * n_dn;
}

Mat4 chiral_generator(double m, double gamma, double ell) {
  (void)build_collide(m, gamma, ell);
  const cplx b = std::exp(-I * collide_phase(m, gamma, ell));
  Mat4 n = Mat4::Zero();
  n(1, 2) = b;
  n(2, 1) = std::conj(b);
  n(3, 3) = 1.0;
  return n;
}

}  // namespace qlg
