#pragma once

// Conics Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0 and projective maps of the plane.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "poncelet/types.hpp"

namespace poncelet {

enum class ConicType { Ellipse, Parabola, Hyperbola, Degenerate };

std::string_view to_string(ConicType type);

/// Conic held in canonical form: unit-norm coefficient vector whose first
/// nonzero entry is positive. Two conics are equal iff their canonical
/// coefficients are.
class Conic {
 public:
  using Coefficients = std::array<double, 6>;

  /// Throws DegenerateInput if every coefficient is zero or non-finite.
  static Conic from_coefficients(const Coefficients& c);
  /// From the symmetric 3x3 matrix Q with [x y 1] Q [x y 1]^T = 0.
  static Conic from_matrix(const Eigen::Matrix3d& q);
  static Conic unit_circle();

  const Coefficients& coeffs() const { return c_; }
  double A() const { return c_[0]; }
  double B() const { return c_[1]; }
  double C() const { return c_[2]; }
  double D() const { return c_[3]; }
  double E() const { return c_[4]; }
  double F() const { return c_[5]; }

  Eigen::Matrix3d matrix() const;
  double evaluate(Complex p) const;
  Complex gradient(Complex p) const;

 private:
  explicit Conic(const Coefficients& c) : c_(c) {}
  Coefficients c_{};
};

/// Distance between canonical coefficient vectors, insensitive to the sign
/// convention when the leading coefficient is numerically zero.
double canonical_distance(const Conic& a, const Conic& b);

/// Nonsingular 3x3 matrix acting on homogeneous coordinates [x : y : 1].
class ProjectiveMap {
 public:
  /// Throws SingularMap if |det| < 1e-12 after normalizing each row.
  explicit ProjectiveMap(const Eigen::Matrix3d& m);
  static ProjectiveMap identity();
  /// z -> offset + scale * z
  static ProjectiveMap similarity(Complex offset, double scale);
  /// z -> p z + q conj(z) + offset, with complex p, q.
  static ProjectiveMap real_linear(Complex p, Complex q, Complex offset);

  const Eigen::Matrix3d& matrix() const { return m_; }
  ProjectiveMap inverse() const;
  /// (*this) after (inner): z -> this(inner(z)).
  ProjectiveMap after(const ProjectiveMap& inner) const;
  /// Image of an affine point. Points sent to the line at infinity come back
  /// non-finite.
  Complex apply(Complex z) const;

 private:
  Eigen::Matrix3d m_;
};

/// Line ax + by + c = 0 with a^2 + b^2 = 1.
class Line {
 public:
  /// Throws DegenerateInput when a and b both vanish.
  static Line from_coefficients(double a, double b, double c);
  static Line through(Complex p, Complex q);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  Eigen::Vector3d homogeneous() const { return {a_, b_, c_}; }
  double signed_distance(Complex p) const {
    return a_ * p.real() + b_ * p.imag() + c_;
  }

 private:
  Line(double a, double b, double c) : a_(a), b_(b), c_(c) {}
  double a_, b_, c_;
};

/// Least-squares conic through the points: smallest right singular vector of
/// the monomial design matrix [x^2, xy, y^2, x, y, 1], computed on
/// centroid/scale-normalized coordinates. Exact for five independent points.
/// Throws DegenerateInput when fewer than five points are given or the design
/// matrix has rank below five.
Conic conic_fit(std::span<const Complex> points);

ConicType conic_classify(const Conic& c);

/// Conic of M^-T Q M^-1: every point p on c maps to m(p) on the result.
Conic conic_transform(const Conic& c, const ProjectiveMap& m);

/// First-order geometric distance |Q(p)| / |grad Q(p)|.
double conic_residual(const Conic& c, Complex p);

/// Tangent lines to c through o: two when o is exterior, one when o lies on
/// c, none when interior. Throws DegenerateConic for rank-deficient c.
std::vector<Line> tangents_from_point(const Conic& c, Complex o);

/// |l^T Q* l| / (|Q*|_F |l|^2) with Q* the adjugate of c's matrix.
double tangency_residual(const Conic& c, const Line& l);
bool is_tangent(const Conic& c, const Line& l, double tol);

/// Shape of the quadratic part of a central conic.
struct QuadraticShape {
  Complex center;
  /// Direction of the eigenvector of the smaller-magnitude eigenvalue, mod pi.
  double axis_angle = 0.0;
  /// |lambda_small| / |lambda_large| of the 2x2 quadratic part.
  double eigen_ratio = 0.0;
  /// Semi-axis lengths along the two eigen-directions (small, large eig).
  double semi_axis_major = 0.0;
  double semi_axis_minor = 0.0;
};

/// Throws DegenerateConic for parabolas and rank-deficient conics.
QuadraticShape quadratic_shape(const Conic& c);

}  // namespace poncelet
