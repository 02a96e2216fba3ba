#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "qlg/numerics.hpp"

namespace qlg::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline cplx gaussian_cplx() {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng()), n(rng())};
}

inline SpinorField random_field(std::size_t L) {
  SpinorField f(L);
  for (auto& s : f.sites) {
    s.up = gaussian_cplx();
    s.down = gaussian_cplx();
  }
  normalize(f);
  return f;
}

}  // namespace qlg::test
