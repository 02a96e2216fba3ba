#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <optional>
#include <utility>

#include "qlg/numerics.hpp"

namespace qlg {

using Vec3 = Eigen::Vector3d;
using SparseMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
struct QubitState {
  double theta = 0.0;
  double phi = 0.0;
};

struct QubitReps {
  Eigen::Vector2cd hilbert;
  Vec3 bloch;
  Mat2 su2;  // q . sigma
};

QubitReps qubit_representations(const QubitState& q);

// q_i = Tr(M sigma_i)/2
Vec3 bloch_from_matrix(const Mat2& m);

// U_n(angle) = cos(angle/2) - i n.sigma sin(angle/2)
Mat2 su2_rotation(const Vec3& axis, double angle);

// U_n(angle) (q.sigma) U_n(-angle), read back as a Bloch vector.
// BadAxis when |axis| differs from 1 by more than 1e-12.
Vec3 rotate_qubit(const Vec3& q, const Vec3& axis, double angle);
Vec3 rotate_qubit_rodrigues(const Vec3& q, const Vec3& axis, double angle);

// a_i = sigma_3^{(i-1)} (x) a (x) 1^{(Q-i)}, a = [[0,1],[0,0]], i counted from
// 1 with qubit 1 as the leftmost tensor factor. Returns (a_i, a_i^dagger).
std::pair<SparseMat, SparseMat> jw_ladder(int i, int Q);

// 1^{(i-1)} (x) n (x) 1^{(Q-i)}
SparseMat unfolded_number(int i, int Q);

enum class GateFamily { idempotent, tri_idempotent };

// Two-qubit conservative gate in the basis |00>, |01>, |10>, |11>.
// The hopping element is B e^{-i xi}; A defaults to the family solution
// picked by branch (+1 or -1), D is fixed by the family.
struct GateSpec {
  cplx z = 0.0;
  double xi = 0.0;
  double delta = 0.0;
  cplx B = 0.0;
  GateFamily family = GateFamily::idempotent;
  int branch = 1;
  std::optional<cplx> A;
};

// H with H^2 = H (idempotent) or H^3 = H, H^2 != H (tri-idempotent).
// ConstraintViolated when the identity fails beyond 1e-12.
Mat4 gate_generator(const GateSpec& spec);

// 1 + (e^z - 1) H, or 1 + sinh z H + (cosh z - 1) H^2
Mat4 conservative_gate(const GateSpec& spec);

// Chirality-mixing gate at one site in the basis |0>, |up>, |down>,
// |up down>. The middle block is build_collide(m, gamma, ell); the double
// occupancy picks up e^{-i arccos sqrt(1 - eps^2)}.
Mat4 chiral_collide_gate(double m, double gamma, double ell);

// Same gate assembled from two-mode ladder operators.
Mat4 chiral_collide_gate_ladder(double m, double gamma, double ell);

// Generator N with the gate equal to exp(z N), cosh z = sqrt(1 - eps^2).
Mat4 chiral_generator(double m, double gamma, double ell);

}  // namespace qlg
