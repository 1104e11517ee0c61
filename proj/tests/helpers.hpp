#pragma once

#include <random>

#include "bp/decoration.hpp"
#include "bp/fixture.hpp"

namespace bptest {

using namespace bp;

// Deterministic test RNG (engine outputs mapped by hand).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform(double lo = 0, double hi = 1) {
    return lo + (hi - lo) * ((eng() >> 11) * (1.0 / 9007199254740992.0));
  }
  cx point(double lo = -2, double hi = 2) { return cx(uniform(lo, hi), uniform(lo, hi)); }
  // away from zero, for denominators
  cx unit_box() { return cx(uniform(0.5, 1.5), uniform(0.5, 1.5)); }
  Window window() {
    Window w;
    for (auto& v : w) v = unit_box();
    return w;
  }
};

inline double rel_err(const cx& got, const cx& want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline Mat2 random_sl2(Rng& rng) {
  // unit-determinant via normalization
  Mat2 m = mat2(rng.point(), rng.point(), rng.point(), rng.point());
  cx d = mat_det(m);
  while (std::abs(d) < 0.1) {
    m = mat2(rng.point(), rng.point(), rng.point(), rng.point());
    d = mat_det(m);
  }
  return m / std::sqrt(d);
}

}  // namespace bptest
