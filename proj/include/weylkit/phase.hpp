#pragma once

#include <complex>
#include <cstdint>

namespace weylkit {

/// A unit-modulus phase exp(i*pi*num/den), kept as an exact rational
/// multiple of pi until value() is called. Composition laws of the
/// displacement algebra only ever produce such phases, so products of
/// Phase objects never accumulate floating-point error.
class Phase {
 public:
  /// The trivial phase 1.
  Phase() : num_(0), den_(1) {}

  /// exp(i * pi * num / den).
  static Phase pi_multiple(std::int64_t num, std::int64_t den);

  static Phase one() { return Phase(); }

  Phase operator*(const Phase& other) const;
  Phase& operator*=(const Phase& other) {
    *this = *this * other;
    return *this;
  }

  /// Complex conjugate (angle negated).
  Phase conj() const { return pi_multiple(-num_, den_); }

  std::complex<double> value() const;

  /// Numerator of the angle in units of pi, reduced mod 2*denominator.
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool operator==(const Phase& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }

 private:
  Phase(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  std::int64_t num_;  // normalized to [0, 2*den), gcd-reduced against den
  std::int64_t den_;  // >= 1
};

}  // namespace weylkit
