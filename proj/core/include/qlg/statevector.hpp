#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "qlg/dirac.hpp"
#include "qlg/numerics.hpp"

namespace qlg {

// Dense many-body state. Bit b of the index is the occupation of qubit
// b + 1; site l, spin a (0 = up, 1 = down) lives on bit 2l + a. Fermionic
// order follows the bit order.
struct StateVector {
  int q = 0;
  std::vector<cplx> amp;

  static StateVector basis(int q, std::uint64_t index);
  std::size_t dim() const { return amp.size(); }
};

inline constexpr int kMaxQubits = 16;

double state_norm(const StateVector& s);

// Applies a 4x4 gate to bits (b, b+1); local index = bit_b + 2 bit_{b+1}.
void apply_pair_gate(StateVector& s, int b, const Mat4& g);

// c_i <-> c_j for bits i != j, with the Jordan-Wigner sign of the
// occupied bits strictly between them.
void apply_fermionic_swap(StateVector& s, int i, int j);

class ManyBodyEvolution {
 public:
  ManyBodyEvolution(int L, const CollideParams& params);
  // collide every site, shift up modes one site toward +z, then shift
  // down modes one site toward -z; both shifts are chains of fermionic
  // swaps that wrap around the lattice
  void step(StateVector& s) const;
  int sites() const { return L_; }

 private:
  int L_;
  std::vector<Mat4> gates_;
};

StateVector many_body_step(const StateVector& s, int L, const CollideParams& params);

// Amplitudes with exactly `bodies` particles, keyed by ascending 1-based
// qubit labels. DomainError unless bodies is 1, 2 or 3.
std::map<std::vector<int>, cplx> sector_project(const StateVector& s, int bodies);

// Probability per particle number 0..Q.
std::vector<double> sector_populations(const StateVector& s);

// Expectation of the total number operator.
double particle_number(const StateVector& s);

// One-body sector <-> lattice spinor field.
StateVector embed_one_body(const SpinorField& f);
SpinorField extract_one_body(const StateVector& s, int L);

// Binary snapshot; layout in docs/snapshot_format.md.
struct Snapshot {
  int q = 0;
  int L = 0;
  std::uint64_t step = 0;
  StateVector state;
};
void write_snapshot(std::ostream& os, const StateVector& s, int L, std::uint64_t step);
Snapshot read_snapshot(std::istream& is);

}  // namespace qlg
