#pragma once

// Poncelet triangle families between an origin-centered, axis-aligned outer
// ellipse and a nested inner ellipse, parametrized by a unit-modulus lambda.

#include "poncelet/conics.hpp"
#include "poncelet/types.hpp"

namespace poncelet {

/// Inner-ellipse foci f, g in the unit disk plus the real-linear map
/// A(z) = p z + q conj(z) that sends the unit circle to the outer ellipse.
class PonceletFamily {
 public:
  /// Outer semiaxes a >= b > 0. Throws NotNested when a focus leaves the unit
  /// disk and InvalidFamily for bad semiaxes or |f|^2|g|^2 too close to 1.
  static PonceletFamily from_foci(Complex f, Complex g, double a, double b);

  Complex f() const { return f_; }
  Complex g() const { return g_; }
  double p() const { return p_; }
  double q() const { return q_; }
  double a() const { return p_ + q_; }
  double b() const { return p_ - q_; }

  /// A(z) = p z + q conj(z).
  Complex to_world(Complex z) const { return p_ * z + q_ * std::conj(z); }
  /// Length scale of the configuration (the outer major semiaxis).
  double scale() const { return a(); }

 private:
  PonceletFamily(Complex f, Complex g, double p, double q)
      : f_(f), g_(g), p_(p), q_(q) {}
  Complex f_, g_;
  double p_, q_;
};

/// Unit-circle chart triangle for lambda = exp(i theta): the roots of
/// z^3 - s1 z^2 + s2 z - s3 with s1 = f + g + lambda conj(fg),
/// s2 = fg + lambda (conj f + conj g), s3 = lambda. Roots are found as
/// companion-matrix eigenvalues, Newton-polished once, projected onto the unit
/// circle and sorted by argument in [0, 2pi).
/// Throws RootToleranceExceeded if a root is off the circle by more than 1e-6.
Triangle triangle_at(const PonceletFamily& fam, double theta);

/// Vertex-wise A(z).
Triangle affine_image(const PonceletFamily& fam, const Triangle& t);

/// affine_image(triangle_at(theta)).
Triangle world_triangle(const PonceletFamily& fam, double theta);

/// Ellipse given by |z - focus1| + |z - focus2| = major_axis_length.
struct EllipseGeom {
  Complex focus1;
  Complex focus2;
  double major_axis_length = 0.0;

  Conic as_conic() const;
};

/// Inner ellipse in the unit-circle chart: foci f, g, major axis |1 - conj(f) g|.
EllipseGeom inner_ellipse(const PonceletFamily& fam);

/// Inner ellipse pushed through A.
Conic inner_ellipse_world(const PonceletFamily& fam);

/// Largest dual-conic tangency residual of the three side lines of a world
/// triangle against inner_ellipse_world. Zero for every member of the family.
double side_tangency_residual(const PonceletFamily& fam, const Triangle& world);

/// x^2/a^2 + y^2/b^2 = 1
Conic outer_ellipse(const PonceletFamily& fam);

/// Family whose inner conic is the circle (center, r_in) and whose outer
/// ellipse has semiaxes a >= b. The circle pulls back under A to an ellipse
/// whose foci become f, g; the triangle closure identity
/// |1 - conj(f) g| = 2 r_in / b is then checked to 1e-8 relative.
/// Throws CayleyViolation if closure fails, NotNested if a focus leaves the disk.
PonceletFamily family_from_inner_circle(double a, double b, Complex center,
                                        double r_in);

/// Radius r_in that makes (a, b, center, r_in) close, found by bracketing and
/// bisection. Throws CayleyViolation if no admissible radius exists.
double closure_radius(double a, double b, Complex center);

}  // namespace poncelet
