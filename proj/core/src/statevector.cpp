#include "qlg/statevector.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "qlg/errors.hpp"
#include "qlg/gates.hpp"

namespace qlg {

namespace {

void check_q(int q) {
  if (q < 1 || q > kMaxQubits)
    throw DomainError("qubit count must lie in [1, " + std::to_string(kMaxQubits) + "]");
}

}  // namespace

StateVector StateVector::basis(int q, std::uint64_t index) {
  check_q(q);
  StateVector s;
  s.q = q;
  s.amp.assign(std::size_t{1} << q, 0.0);
  if (index >= s.amp.size()) throw DomainError("basis index out of range");
  s.amp[index] = 1.0;
  return s;
}

double state_norm(const StateVector& s) {
  double t = 0.0;
  for (const auto& a : s.amp) t += std::norm(a);
  return std::sqrt(t);
}

void apply_pair_gate(StateVector& s, int b, const Mat4& g) {
  if (b < 0 || b + 1 >= s.q) throw DomainError("gate bits out of range");
  const std::size_t lo = std::size_t{1} << b, hi = lo << 1;
  const std::size_t n = s.amp.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (x & (lo | hi)) continue;
    const std::size_t idx[4] = {x, x | lo, x | hi, x | lo | hi};
    cplx v[4];
    for (int r = 0; r < 4; ++r) v[r] = s.amp[idx[r]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += g(r, c) * v[c];
      s.amp[idx[r]] = acc;
    }
  }
}

void apply_fermionic_swap(StateVector& s, int i, int j) {
  if (i == j) return;
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= s.q) throw DomainError("swap bits out of range");
  const std::size_t mi = std::size_t{1} << i, mj = std::size_t{1} << j;
  const std::size_t between = (mj - 1) & ~((mi << 1) - 1);
  const std::size_t n = s.amp.size();
  for (std::size_t x = 0; x < n; ++x) {
    const bool bi = x & mi, bj = x & mj;
    if (bi && bj) {
      s.amp[x] = -s.amp[x];
    } else if (bi && !bj) {
      const std::size_t y = x ^ mi ^ mj;
      const double sign = (std::popcount(x & between) & 1) ? -1.0 : 1.0;
      const cplx ax = s.amp[x], ay = s.amp[y];
      s.amp[x] = sign * ay;
      s.amp[y] = sign * ax;
    }
  }
}

ManyBodyEvolution::ManyBodyEvolution(int L, const CollideParams& params) : L_(L) {
  if (L < 2 || 2 * L > kMaxQubits)
    throw DomainError("many-body lattice needs 2 <= L <= " + std::to_string(kMaxQubits / 2));
  if (params.size() != static_cast<std::size_t>(L))
    throw DomainError("collide parameters do not match the lattice");
  for (int l = 0; l < L; ++l)
    gates_.push_back(chiral_collide_gate(params.mass[l], params.gamma[l], params.ell));
}

void ManyBodyEvolution::step(StateVector& s) const {
  if (s.q != 2 * L_) throw DomainError("state does not match the lattice");
  for (int l = 0; l < L_; ++l) apply_pair_gate(s, 2 * l, gates_[l]);
  // up: content of site l ends on site l+1, the last site wraps to 0
  for (int l = L_ - 1; l >= 1; --l) apply_fermionic_swap(s, 2 * l, 2 * (l - 1));
  // down: content of site l ends on site l-1, site 0 wraps to L-1
  for (int l = 0; l + 1 < L_; ++l) apply_fermionic_swap(s, 2 * l + 1, 2 * (l + 1) + 1);
}

StateVector many_body_step(const StateVector& s, int L, const CollideParams& params) {
  StateVector out = s;
  ManyBodyEvolution(L, params).step(out);
  return out;
}

std::map<std::vector<int>, cplx> sector_project(const StateVector& s, int bodies) {
  if (bodies < 1 || bodies > 3) throw DomainError("sector projection supports 1, 2 or 3 bodies");
  std::map<std::vector<int>, cplx> out;
  for (std::size_t x = 0; x < s.amp.size(); ++x) {
    if (std::popcount(x) != bodies) continue;
    std::vector<int> key;
    for (int b = 0; b < s.q; ++b)
      if (x & (std::size_t{1} << b)) key.push_back(b + 1);
    out.emplace(std::move(key), s.amp[x]);
  }
  return out;
}

std::vector<double> sector_populations(const StateVector& s) {
  std::vector<double> p(static_cast<std::size_t>(s.q) + 1, 0.0);
  for (std::size_t x = 0; x < s.amp.size(); ++x) p[std::popcount(x)] += std::norm(s.amp[x]);
  return p;
}

double particle_number(const StateVector& s) {
  double n = 0.0;
  for (std::size_t x = 0; x < s.amp.size(); ++x) n += std::popcount(x) * std::norm(s.amp[x]);
  return n;
}

StateVector embed_one_body(const SpinorField& f) {
  const int L = static_cast<int>(f.size());
  StateVector s;
  s.q = 2 * L;
  check_q(s.q);
  s.amp.assign(std::size_t{1} << s.q, 0.0);
  for (int l = 0; l < L; ++l) {
    s.amp[std::size_t{1} << (2 * l)] = f[l].up;
    s.amp[std::size_t{1} << (2 * l + 1)] = f[l].down;
  }
  return s;
}

SpinorField extract_one_body(const StateVector& s, int L) {
  if (s.q != 2 * L) throw DomainError("state does not match the lattice");
  SpinorField f(static_cast<std::size_t>(L));
  for (int l = 0; l < L; ++l) {
    f[l].up = s.amp[std::size_t{1} << (2 * l)];
    f[l].down = s.amp[std::size_t{1} << (2 * l + 1)];
  }
  return f;
}

namespace {

void put_le(std::ostream& os, std::uint64_t v, int bytes) {
  char buf[8];
  for (int i = 0; i < bytes; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(buf, bytes);
}

std::uint64_t get_le(std::istream& is, int bytes) {
  unsigned char buf[8] = {};
  is.read(reinterpret_cast<char*>(buf), bytes);
  if (!is) throw DomainError("truncated snapshot");
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void write_snapshot(std::ostream& os, const StateVector& s, int L, std::uint64_t step) {
  put_le(os, static_cast<std::uint32_t>(s.q), 4);
  put_le(os, static_cast<std::uint32_t>(L), 4);
  put_le(os, step, 8);
  for (const auto& a : s.amp) {
    put_le(os, std::bit_cast<std::uint64_t>(a.real()), 8);
    put_le(os, std::bit_cast<std::uint64_t>(a.imag()), 8);
  }
}

Snapshot read_snapshot(std::istream& is) {
  Snapshot snap;
  snap.q = static_cast<int>(get_le(is, 4));
  snap.L = static_cast<int>(get_le(is, 4));
  snap.step = get_le(is, 8);
  check_q(snap.q);
  snap.state.q = snap.q;
  snap.state.amp.resize(std::size_t{1} << snap.q);
  for (auto& a : snap.state.amp) {
    const double re = std::bit_cast<double>(get_le(is, 8));
    const double im = std::bit_cast<double>(get_le(is, 8));
    a = {re, im};
  }
  return snap;
}

}  // namespace qlg
