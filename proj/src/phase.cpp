#include "weylkit/phase.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace weylkit {

Phase Phase::pi_multiple(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("Phase: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // Reduce the angle mod 2*pi, then the fraction by its gcd.
  num %= 2 * den;
  if (num < 0) num += 2 * den;
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Phase(num, den);
}

Phase Phase::operator*(const Phase& other) const {
  // Angles add: num/den + num'/den' over the common denominator.
  return pi_multiple(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

std::complex<double> Phase::value() const {
  const double angle = M_PI * static_cast<double>(num_) / static_cast<double>(den_);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace weylkit
