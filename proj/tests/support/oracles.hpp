#pragma once

// Reference computations for the tests. Each one takes a different route
// from the library: real 2x2 solves instead of complex closed forms,
// reflections instead of dual conics, raw design matrices instead of
// normalized fits.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/family.hpp"
#include "poncelet/types.hpp"

namespace oracle {

using poncelet::Complex;

/// Intersection of the perpendicular bisectors of ab and ac.
inline Complex circumcenter(Complex a, Complex b, Complex c) {
  // 2 (b - a) . x = |b|^2 - |a|^2, same for c
  const long double m11 = 2.0L * (b.real() - a.real()), m12 = 2.0L * (b.imag() - a.imag());
  const long double m21 = 2.0L * (c.real() - a.real()), m22 = 2.0L * (c.imag() - a.imag());
  const long double r1 = (long double)std::norm(b) - std::norm(a);
  const long double r2 = (long double)std::norm(c) - std::norm(a);
  const long double det = m11 * m22 - m12 * m21;
  return {static_cast<double>((r1 * m22 - m12 * r2) / det),
          static_cast<double>((m11 * r2 - r1 * m21) / det)};
}

/// Intersection of the altitudes from a and b.
inline Complex orthocenter(Complex a, Complex b, Complex c) {
  // (x - a) . (c - b) = 0 and (x - b) . (c - a) = 0
  const Complex u = c - b, v = c - a;
  Eigen::Matrix2d m;
  m << u.real(), u.imag(), v.real(), v.imag();
  const Eigen::Vector2d rhs(u.real() * a.real() + u.imag() * a.imag(),
                            v.real() * b.real() + v.imag() * b.imag());
  const Eigen::Vector2d x = m.fullPivLu().solve(rhs);
  return {x(0), x(1)};
}

/// Circumcenter of the medial triangle.
inline Complex nine_point_center(Complex a, Complex b, Complex c) {
  return circumcenter(0.5 * (a + b), 0.5 * (b + c), 0.5 * (c + a));
}

/// o + r^2 (z - o) / |z - o|^2
inline Complex invert(Complex z, Complex o, double r) {
  const Complex d = z - o;
  return o + r * r * d / std::norm(d);
}

inline double power(Complex p, Complex center, double radius) {
  const double dx = p.real() - center.real(), dy = p.imag() - center.imag();
  return dx * dx + dy * dy - radius * radius;
}

/// Elementary symmetric polynomials of three numbers.
inline std::array<Complex, 3> symmetric(const std::array<Complex, 3>& z) {
  return {z[0] + z[1] + z[2], z[0] * z[1] + z[1] * z[2] + z[2] * z[0], z[0] * z[1] * z[2]};
}

/// A line is tangent to the ellipse with foci f1, f2 and major axis L iff the
/// reflection of f1 across it lies at distance L from f2. Returns that gap.
inline double reflection_tangency_gap(Complex p, Complex q, Complex f1, Complex f2,
                                      double major_axis) {
  const Complex d = (q - p) / std::abs(q - p);
  const Complex rel = f1 - p;
  const Complex mirrored = p + d * d * std::conj(rel);
  return std::abs(std::abs(mirrored - f2) - major_axis);
}

/// Conic coefficients through the points from the null space of the raw
/// (unnormalized) design matrix.
inline Eigen::Matrix<double, 6, 1> raw_conic(const std::vector<Complex>& pts) {
  Eigen::MatrixXd d(pts.size(), 6);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double x = pts[i].real(), y = pts[i].imag();
    d.row(static_cast<Eigen::Index>(i)) << x * x, x * y, y * y, x, y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullV);
  Eigen::Matrix<double, 6, 1> v = svd.matrixV().col(5);
  return v / v.norm();
}

/// Ellipse x^2/a^2 + y^2/b^2 = 1 rotated by phi and moved to c.
inline Complex ellipse_point(Complex c, double a, double b, double phi, double t) {
  return c + std::polar(1.0, phi) * Complex{a * std::cos(t), b * std::sin(t)};
}

/// Seed for randomized suites: PONCELET_SEED when set, else a fixed value.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("PONCELET_SEED")) return std::strtoull(s, nullptr, 10);
  return 20261015ULL;
}

/// Random valid family: foci in the disk of radius 0.85, outer semiaxes
/// a in [1, 3], b in [0.4, 1] * a.
class FamilySampler {
 public:
  explicit FamilySampler(std::uint64_t s = seed()) : rng_(s) {}

  poncelet::PonceletFamily next() {
    const Complex f = disk_point(0.85), g = disk_point(0.85);
    const double a = uniform(1.0, 3.0);
    const double b = a * uniform(0.4, 1.0);
    return poncelet::PonceletFamily::from_foci(f, g, a, b);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  Complex disk_point(double radius) {
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, poncelet::kTwoPi));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
