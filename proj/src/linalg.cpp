#include "bp/linalg.hpp"

#include <cmath>

namespace bp {

namespace {
// B_0, B_2, B_4, ... (even Bernoulli numbers).
constexpr double kBernoulli[] = {
    1.0,
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
};
constexpr double kPi = 3.14159265358979323846;
constexpr double kPiSq6 = kPi * kPi / 6.0;
}  // namespace

cx dilog(const cx& z) {
  if (std::abs(z) > 1.0) {
    cx lz = std::log(-z);
    return -dilog(1.0 / z) - kPiSq6 - 0.5 * lz * lz;
  }
  if (z.real() > 0.5) {
    return kPiSq6 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z);
  }
  // |z| <= 1, Re z <= 1/2: u = -log(1-z) stays well inside the series radius.
  cx u = -std::log(1.0 - z);
  cx u2 = u * u;
  cx sum = u - u2 / 4.0;
  cx upow = u;
  double fact = 1.0;
  for (std::size_t k = 1; k < sizeof(kBernoulli) / sizeof(kBernoulli[0]); ++k) {
    upow *= u2;
    fact *= (2.0 * k) * (2.0 * k + 1.0);
    cx term = kBernoulli[k] * upow / fact;
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

double bloch_wigner(const cx& z) {
  if (std::abs(z) < Tol::denom || std::abs(z - 1.0) < Tol::denom)
    throw DegenerateShape("bloch_wigner at a degenerate shape (z near 0 or 1)");
  return dilog(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

}  // namespace bp
