#pragma once

// Power of a point and the two fixed points of constant power over a Poncelet
// family: P3 against the circumcircle and P5 against the Euler circle.

#include <string_view>

#include "poncelet/family.hpp"
#include "poncelet/types.hpp"

namespace poncelet {

/// |p - center|^2 - radius^2
double power(Complex p, const Circle& c);

/// |z0|^2 + zeta z0 + conj(zeta z0), zeta built from the vertices alone.
/// Throws CollinearVertices.
double power_via_zeta(Complex z0, const Triangle& t);

enum class PowerCircleKind { Circumcircle, EulerCircle };

std::string_view to_string(PowerCircleKind kind);

struct PowerPointResult {
  Complex point;
  double invariant_power = 0.0;
  PowerCircleKind kind = PowerCircleKind::Circumcircle;
};

/// P3 and Pi3.
PowerPointResult p3_point(const PonceletFamily& fam);

/// p3 = (f + g - (conj f + conj g) f g) / (1 - |fg|^2), with P3 = A(p3).
Complex p3_preimage(const PonceletFamily& fam);

/// |1 - conj(f) g| - (|p3 - f| + |p3 - g|): positive iff p3 lies strictly
/// inside the unit-chart inner ellipse.
double p3_interiority_margin(const PonceletFamily& fam);

/// Same margin from the closed forms of |p3 - f| and |p3 - g|.
double p3_interiority_margin_closed(const PonceletFamily& fam);

struct P5Constants {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

/// Throws RealnessViolation if either constant comes out non-real.
P5Constants p5_constants(const PonceletFamily& fam);

/// P5 and Pi5 = (p^2 + q^2)(|fg|^2 - 1) gamma1 / gamma2.
/// Throws DegenerateDenominator.
PowerPointResult p5_point(const PonceletFamily& fam);

/// Circumcircle power of w0 written as M1 l + conj(M1 l) + M3.
struct Pi3Affine {
  Complex m1;
  double m3 = 0.0;
};

Pi3Affine pi3_affine_in_lambda(const PonceletFamily& fam, Complex w0);

}  // namespace poncelet
