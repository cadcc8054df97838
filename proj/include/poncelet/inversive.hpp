#pragma once

// Circle inversion, triangle centers, and the closed-form circumcenter of the
// inversive triangle together with the projective map that carries the unit
// lambda-circle onto its locus.

#include "poncelet/conics.hpp"
#include "poncelet/family.hpp"
#include "poncelet/types.hpp"

namespace poncelet {

/// Throws DegenerateInput unless radius > 0 and everything is finite.
Circle make_circle(Complex center, double radius);

/// z0 + r^2 / (conj(z) - conj(z0)). Throws CenterSingularity within 1e-12 of z0.
Complex invert_point(Complex z, const Circle& k);

/// Throws CollinearVertices for (numerically) collinear vertices.
Complex circumcenter(const Triangle& t);
Circle circumcircle(const Triangle& t);

Complex barycenter(const Triangle& t);
/// sum(v) - 2 X3
Complex orthocenter(const Triangle& t);
/// Midpoint of circumcenter and orthocenter.
Complex euler_center(const Triangle& t);
/// Center X5, radius R / 2.
Circle euler_circle(const Triangle& t);

/// Vertex-wise inversion. Throws CenterSingularity.
Triangle inversive_triangle(const Triangle& t, const Circle& k);

/// Coefficients of X3' = z0 + (a2 l + a1_const conj(l) + a0) / (b2 l + b1 conj(l) + b0)
/// for l = exp(i theta). Every a_j carries the common factor r^2.
struct InversiveCoefficients {
  Complex a0;
  Complex a1_const;
  Complex a2;
  double b0 = 0.0;
  Complex b1;
  double r2 = 0.0;
  Complex z0;

  Complex b2() const { return std::conj(b1); }
};

/// Relative residuals of the two projectivity hypotheses:
/// |b2 - conj(b1)| / |b1| and |Im(b0)| / |b0|.
struct HypothesisResiduals {
  double conjugacy = 0.0;
  double realness = 0.0;
};

HypothesisResiduals inversive_hypothesis_residuals(const PonceletFamily& fam,
                                                   const Circle& k);

/// Evaluates the closed-form coefficients for the family and the inversion
/// circle. b2 is evaluated from its own expression and cross-checked against
/// b1, obtained from the lambda-coefficient of the circumcircle power of z0;
/// b0 must come out real. Throws HypothesisViolation if either check fails.
InversiveCoefficients inversive_coeffs(const PonceletFamily& fam, const Circle& k);

/// Throws OnCircumcircle when the denominator drops below 1e-10 (the
/// circumcircle passes through the inversion center; the locus point is at
/// infinity).
Complex inversive_circumcenter_closed(const InversiveCoefficients& c, double theta);

/// Reference path: circumcenter(inversive_triangle(world_triangle(theta))).
Complex inversive_circumcenter_direct(const PonceletFamily& fam, const Circle& k,
                                      double theta);

/// The lambda -> X3' map split as a projective map of the lambda plane
/// followed by the similarity z -> z0 + r^2 z.
struct LocusMap {
  ProjectiveMap map;
  Complex z0;
  double r2 = 0.0;

  /// Composite map including the similarity.
  ProjectiveMap world_map() const;
};

/// Real 3x3 form of z -> (k1 z + k2 conj(z) + k3) / (k4 z + k5 conj(z) + k6)
/// acting on [x : y : 1]. Requires k5 = conj(k4) and real k6 (relative
/// tolerance 1e-10); throws HypothesisViolation otherwise and SingularMap when
/// the map is singular.
ProjectiveMap complex_projective_map(Complex k1, Complex k2, Complex k3,
                                     Complex k4, Complex k5, Complex k6);

/// Throws SingularMap when the locus degenerates.
LocusMap projective_map_of_locus(const InversiveCoefficients& c);

/// Exact conic swept by X3': the unit circle pushed through world_map().
Conic inversive_locus_conic(const PonceletFamily& fam, const Circle& k);

/// X3 of the world triangle is real-linear in lambda:
/// X3 = (u1 l + u2 conj(l) + u0) / (p^2 - q^2).
ProjectiveMap circumcenter_locus_map(const PonceletFamily& fam);
/// Exact conic swept by X3. Throws SingularMap when X3 is stationary.
Conic circumcenter_locus_conic(const PonceletFamily& fam);
/// X3 evaluated through circumcenter_locus_map.
Complex circumcenter_closed(const PonceletFamily& fam, double theta);

/// Relative smallest singular value of the stacked circle vectors
/// (1, -2 cx, -2 cy, |c|^2 - r^2); zero iff the circles share a pencil.
double pencil_membership(const Circle& c1, const Circle& c2, const Circle& c3);

struct CollinearityResiduals {
  double collinearity = 0.0;
  double ratio = 0.0;
};

/// Collinearity of X3, O, X3' and the distance ratio
/// |O X3| / |O X3'| = |power(O, circ)| / r^2, both as relative residuals.
/// Throws DegenerateConfiguration when o coincides with x3 or x3p.
CollinearityResiduals collinearity_and_ratio(Complex x3, Complex o, Complex x3p,
                                             const Circle& circ, const Circle& k);

}  // namespace poncelet
