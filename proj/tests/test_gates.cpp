#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qlg/dirac.hpp"
#include "qlg/errors.hpp"
#include "qlg/gates.hpp"
#include "support.hpp"

using namespace qlg;
using Eigen::MatrixXd;

namespace {

constexpr double pi = std::numbers::pi;

MatrixXd dense(const SparseMat& m) { return MatrixXd(m); }

Mat4 cdense(const SparseMat& m) { return MatrixXd(m).cast<cplx>(); }

// Oracle: Jordan-Wigner string assembled with Eigen's Kronecker product.
MatrixXd jw_oracle(int i, int Q) {
  MatrixXd s3(2, 2), a(2, 2), one = MatrixXd::Identity(2, 2);
  s3 << 1, 0, 0, -1;
  a << 0, 1, 0, 0;
  MatrixXd out = MatrixXd::Identity(1, 1);
  for (int k = 1; k <= Q; ++k) {
    const MatrixXd& f = k < i ? s3 : (k == i ? a : one);
    out = Eigen::kroneckerProduct(out, f).eval();
  }
  return out;
}

GateSpec spec(cplx z, double xi, double delta, cplx B, GateFamily f) {
  GateSpec s;
  s.z = z;
  s.xi = xi;
  s.delta = delta;
  s.B = B;
  s.family = f;
  return s;
}

double maxabs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Qubit, RepresentationsAgree) {
  for (int trial = 0; trial < 50; ++trial) {
    const QubitState q{test::uniform(0, pi), test::uniform(-pi, pi)};
    const auto r = qubit_representations(q);
    EXPECT_NEAR(r.hilbert.norm(), 1.0, 1e-15);
    EXPECT_NEAR(r.bloch.norm(), 1.0, 1e-15);
    // <sigma_i> in the Hilbert state equals the Bloch vector
    const Mat2 sig[3] = {pauli::x(), pauli::y(), pauli::z()};
    for (int i = 0; i < 3; ++i) {
      const cplx e = r.hilbert.adjoint() * sig[i] * r.hilbert;
      EXPECT_NEAR(e.real(), r.bloch[i], 1e-14);
      EXPECT_NEAR(e.imag(), 0.0, 1e-15);
    }
    EXPECT_LT((bloch_from_matrix(r.su2) - r.bloch).norm(), 1e-14);
    EXPECT_LT(((r.su2 * r.su2) - Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Qubit, SimilarityRotationEqualsRodrigues) {
  for (int trial = 0; trial < 100; ++trial) {
    Vec3 n(test::uniform(-1, 1), test::uniform(-1, 1), test::uniform(-1, 1));
    n.normalize();
    const Vec3 q(test::uniform(-1, 1), test::uniform(-1, 1), test::uniform(-1, 1));
    const double a = test::uniform(-2 * pi, 2 * pi);
    EXPECT_LT((rotate_qubit(q, n, a) - rotate_qubit_rodrigues(q, n, a)).norm(), 1e-12);
    EXPECT_LT(unitarity_defect(su2_rotation(n, a)), 1e-12);
  }
  // quarter turn about z takes x to y
  EXPECT_LT((rotate_qubit(Vec3::UnitX(), Vec3::UnitZ(), pi / 2) - Vec3::UnitY()).norm(), 1e-15);
  EXPECT_THROW(rotate_qubit(Vec3::UnitX(), Vec3(1, 1, 0), 0.3), BadAxis);
  EXPECT_THROW(rotate_qubit_rodrigues(Vec3::UnitX(), Vec3(0, 0, 0), 0.3), BadAxis);
}

TEST(Ladder, MatchesKroneckerOracle) {
  for (int Q : {1, 2, 3, 5})
    for (int i = 1; i <= Q; ++i) {
      const auto [a, ad] = jw_ladder(i, Q);
      EXPECT_EQ((dense(a) - jw_oracle(i, Q)).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_EQ((dense(ad) - jw_oracle(i, Q).transpose()).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_EQ((dense(unfolded_number(i, Q)) - dense(ad * a)).cwiseAbs().maxCoeff(), 0.0);
    }
  EXPECT_THROW(jw_ladder(0, 3), DomainError);
  EXPECT_THROW(jw_ladder(4, 3), DomainError);
  EXPECT_THROW(jw_ladder(1, 17), DomainError);
}

TEST(Ladder, DisplayedTwoQubitForms) {
  MatrixXd c1(4, 4), c2(4, 4);
  c1 << 0, 0, 0, 0,
        0, 0, 0, 0,
        1, 0, 0, 0,
        0, 1, 0, 0;
  c2 << 0, 0, 0, 0,
        1, 0, 0, 0,
        0, 0, 0, 0,
        0, 0, -1, 0;
  EXPECT_EQ((dense(jw_ladder(1, 2).second) - c1).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((dense(jw_ladder(2, 2).second) - c2).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((dense(jw_ladder(1, 2).first) - c1.transpose()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((dense(jw_ladder(2, 2).first) - c2.transpose()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Ladder, AnticommutationRelations) {
  for (int Q : {2, 3, 4, 6}) {
    const long d = 1L << Q;
    const MatrixXd one = MatrixXd::Identity(d, d);
    double worst = 0.0;
    for (int i = 1; i <= Q; ++i)
      for (int j = 1; j <= Q; ++j) {
        const auto [ai, aid] = jw_ladder(i, Q);
        const auto [aj, ajd] = jw_ladder(j, Q);
        const MatrixXd want = (i == j ? 1.0 : 0.0) * one;
        worst = std::max(worst, (dense(ai * ajd) + dense(ajd * ai) - want).cwiseAbs().maxCoeff());
        worst = std::max(worst, (dense(ai * aj) + dense(aj * ai)).cwiseAbs().maxCoeff());
        worst = std::max(worst, (dense(aid * ajd) + dense(ajd * aid)).cwiseAbs().maxCoeff());
      }
    EXPECT_LT(worst, 1e-14) << "Q=" << Q;
  }
}

TEST(Gates, DisplayedSwapFamily) {
  for (double xi : {0.0, 0.3, -1.1})
    for (double delta : {0.0, 1.0}) {
      const cplx e = std::exp(-I * xi);
      Mat4 swap = Mat4::Zero(), root = Mat4::Zero();
      swap(0, 0) = 1.0;
      swap(1, 2) = e;
      swap(2, 1) = std::conj(e);
      swap(3, 3) = 1.0 - 2.0 * delta;
      root(0, 0) = 1.0;
      root(1, 1) = root(2, 2) = 0.5 + 0.5 * I;
      root(1, 2) = (0.5 - 0.5 * I) * e;
      root(2, 1) = (0.5 - 0.5 * I) * std::conj(e);
      root(3, 3) = (I - 1.0) * delta + 1.0;
      const auto id = GateFamily::idempotent;
      EXPECT_LT(maxabs(conservative_gate(spec(I * pi, xi, delta, -0.5, id)) - swap), 1e-14);
      EXPECT_LT(maxabs(conservative_gate(spec(I * pi / 2.0, xi, delta, -0.5, id)) - root), 1e-14);
    }
}

TEST(Gates, DisplayedAswapFamily) {
  const double r = 1.0 / std::sqrt(2.0);
  for (double xi : {0.0, 0.3, -1.1})
    for (double delta : {0.0, 1.0}) {
      const cplx e = std::exp(-I * xi);
      Mat4 as = Mat4::Zero(), root = Mat4::Zero();
      as(0, 0) = 1.0;
      as(1, 2) = -e;
      as(2, 1) = std::conj(e);
      as(3, 3) = (I - 1.0) * delta + 1.0;
      root(0, 0) = 1.0;
      root(1, 1) = root(2, 2) = r;
      root(1, 2) = -r * e;
      root(2, 1) = r * std::conj(e);
      root(3, 3) = (std::exp(I * pi / 4.0) - 1.0) * delta + 1.0;
      const auto tri = GateFamily::tri_idempotent;
      EXPECT_LT(maxabs(conservative_gate(spec(I * pi / 2.0, xi, delta, I, tri)) - as), 1e-14);
      EXPECT_LT(maxabs(conservative_gate(spec(I * pi / 4.0, xi, delta, I, tri)) - root), 1e-14);
    }
}

TEST(Gates, LadderFormsOfSwapAndAswap) {
  const auto [a1, a1d] = jw_ladder(1, 2);
  const auto [a2, a2d] = jw_ladder(2, 2);
  const Mat4 A1 = cdense(a1), A1d = cdense(a1d), A2 = cdense(a2), A2d = cdense(a2d);
  const Mat4 n1 = A1d * A1, n2 = A2d * A2, one = Mat4::Identity();
  const double xi = 0.7;
  const cplx e = std::exp(-I * xi);
  for (double delta : {0.0, 1.0}) {
    const Mat4 sw = one - (A1d - e * A2d) * (A1 - std::conj(e) * A2) - 2.0 * (delta - 1.0) * n1 * n2;
    EXPECT_LT(maxabs(conservative_gate(spec(I * pi, xi, delta, -0.5, GateFamily::idempotent)) - sw),
              1e-14);
    const Mat4 as = one + std::conj(e) * A1d * A2 - e * A2d * A1 - n1 - n2 +
                    ((I - 1.0) * delta + 2.0) * n1 * n2;
    EXPECT_LT(
        maxabs(conservative_gate(spec(I * pi / 2.0, xi, delta, I, GateFamily::tri_idempotent)) - as),
        1e-14);
  }
}

TEST(Gates, FamilyIdentitiesAndInverse) {
  for (int trial = 0; trial < 100; ++trial) {
    const double xi = test::uniform(-pi, pi);
    const double delta = trial % 2;
    const double th = test::uniform(-pi, pi);
    const int branch = trial % 4 < 2 ? 1 : -1;
    const cplx z = I * test::uniform(-4.0, 4.0);

    GateSpec g = spec(z, xi, delta, std::polar(test::uniform(0.0, 0.5), th), GateFamily::idempotent);
    g.branch = branch;
    Mat4 h = gate_generator(g);
    EXPECT_LT(maxabs(h * h - h), 1e-12);
    GateSpec gi = g;
    gi.z = -z;
    EXPECT_LT(maxabs(conservative_gate(g) * conservative_gate(gi) - Mat4::Identity()), 1e-12);
    EXPECT_LT(unitarity_defect(conservative_gate(g)), 1e-12);
    // oracle: matrix exponential of the generator
    EXPECT_LT(maxabs(conservative_gate(g) - (z * h).exp()), 1e-12);

    GateSpec t = spec(z, xi, delta, std::polar(test::uniform(0.3, 1.0), th), GateFamily::tri_idempotent);
    t.branch = branch;
    h = gate_generator(t);
    EXPECT_LT(maxabs(h * h * h - h), 1e-12);
    EXPECT_GT((h * h - h).norm(), 0.1);
    gi = t;
    gi.z = -z;
    EXPECT_LT(maxabs(conservative_gate(t) * conservative_gate(gi) - Mat4::Identity()), 1e-12);
    EXPECT_LT(unitarity_defect(conservative_gate(t)), 1e-12);
    EXPECT_LT(maxabs(conservative_gate(t) - (z * h).exp()), 1e-12);
  }
}

TEST(Gates, ConstraintViolations) {
  const auto id = GateFamily::idempotent, tri = GateFamily::tri_idempotent;
  EXPECT_THROW(gate_generator(spec(I, 0.0, 0.5, 0.2, id)), ConstraintViolated);
  EXPECT_THROW(gate_generator(spec(I, 0.0, 0.0, 0.8, id)), ConstraintViolated);
  EXPECT_THROW(gate_generator(spec(I, 0.0, 0.0, 1.5, tri)), ConstraintViolated);
  auto s = spec(I, 0.0, 0.0, 0.2, id);
  s.branch = 0;
  EXPECT_THROW(gate_generator(s), ConstraintViolated);
  s.branch = 1;
  s.A = cplx(0.3, 0.0);
  EXPECT_THROW(gate_generator(s), ConstraintViolated);
  s.A = cplx(0.5, 0.2);
  EXPECT_THROW(gate_generator(s), ConstraintViolated);
  // B = 0 with A = 0 leaves only the n1 n2 corner, which is idempotent
  auto t = spec(I, 0.0, 1.0, 0.0, tri);
  t.A = cplx(0.0);
  EXPECT_THROW(gate_generator(t), ConstraintViolated);
}

TEST(ChiralGate, BlocksMatchCollide) {
  for (int trial = 0; trial < 30; ++trial) {
    const double g = test::uniform(1.0, 2.5);
    const double m = test::uniform(0.0, pi / (2.0 * g));
    const Mat4 u = chiral_collide_gate(m, g, 1.0);
    const Mat2 c = build_collide(m, g, 1.0);
    EXPECT_LT((u.block<2, 2>(1, 1) - c).cwiseAbs().maxCoeff(), 1e-15);
    const double eps = bend_amplitude(m, g, 1.0);
    EXPECT_LT(std::abs(u(3, 3) - std::exp(-I * std::acos(std::sqrt(1 - eps * eps)))), 1e-15);
    EXPECT_EQ(u(0, 0), cplx(1.0));
    EXPECT_LT(unitarity_defect(u), 1e-12);
    EXPECT_LT(maxabs(chiral_collide_gate_ladder(m, g, 1.0) - u), 1e-13);

    const Mat4 n = chiral_generator(m, g, 1.0);
    EXPECT_LT(maxabs(n * n * n - n), 1e-12);
    const cplx z = -I * std::acos(std::sqrt(1 - eps * eps));
    EXPECT_LT(maxabs((z * n).exp() - u), 1e-12);
  }
  EXPECT_THROW(chiral_collide_gate(2.0, 1.0, 2.0), DomainError);
  EXPECT_THROW(chiral_collide_gate(0.1, 0.9, 1.0), DomainError);
}
