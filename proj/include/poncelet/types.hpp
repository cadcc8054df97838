#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace poncelet {

/// A point of the plane, identified with x + iy.
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

struct Triangle {
  std::array<Complex, 3> v;

  Complex operator[](std::size_t i) const { return v[i]; }
  Complex& operator[](std::size_t i) { return v[i]; }
};

struct Circle {
  Complex center;
  double radius = 1.0;
};

}  // namespace poncelet
