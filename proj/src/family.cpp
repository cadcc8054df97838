#include "poncelet/family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

constexpr double kUnitCircleTolerance = 1e-6;
constexpr double kClosureTolerance = 1e-8;

double wrapped_arg(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi - 1e-14) a = 0.0;
  return a;
}

// Pre-image under A of the circle (center, r): foci and their sum/product.
struct PreimageFoci {
  Complex f, g;
};

PreimageFoci preimage_foci(double a, double b, Complex center, double r) {
  const double c = std::sqrt(std::max(a * a - b * b, 0.0));
  const Complex mid{center.real() / a, center.imag() / b};
  const double half_focal = r * c / (a * b);
  // foci mid +- i half_focal, recovered from their symmetric functions
  const Complex sum = 2.0 * mid;
  const Complex product = mid * mid + half_focal * half_focal;
  const Complex root = std::sqrt(sum * sum / 4.0 - product);
  return {sum / 2.0 + root, sum / 2.0 - root};
}

double closure_gap(double a, double b, Complex center, double r) {
  const auto foci = preimage_foci(a, b, center, r);
  return std::abs(1.0 - std::conj(foci.f) * foci.g) - 2.0 * r / b;
}

}  // namespace

PonceletFamily PonceletFamily::from_foci(Complex f, Complex g, double a, double b) {
  if (!is_finite(f) || !is_finite(g) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::InvalidFamily, "non-finite family parameter");
  }
  if (!(b > 0.0) || a < b) {
    throw Error(ErrorKind::InvalidFamily, "outer semiaxes must satisfy a >= b > 0");
  }
  if (std::abs(f) >= 1.0 || std::abs(g) >= 1.0) {
    throw Error(ErrorKind::NotNested, "focus outside unit disk");
  }
  if (1.0 - std::norm(f) * std::norm(g) < 1e-10) {
    throw Error(ErrorKind::InvalidFamily, "|f|^2 |g|^2 too close to 1");
  }
  return PonceletFamily(f, g, (a + b) / 2.0, (a - b) / 2.0);
}

Triangle triangle_at(const PonceletFamily& fam, double theta) {
  const Complex f = fam.f(), g = fam.g();
  const Complex lambda = std::polar(1.0, theta);
  const Complex s1 = f + g + lambda * std::conj(f) * std::conj(g);
  const Complex s2 = f * g + lambda * (std::conj(f) + std::conj(g));
  const Complex s3 = lambda;

  // companion matrix of z^3 + c2 z^2 + c1 z + c0
  const Complex c2 = -s1, c1 = s2, c0 = -s3;
  Eigen::Matrix3cd companion;
  companion << 0.0, 0.0, -c0,
               1.0, 0.0, -c1,
               0.0, 1.0, -c2;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::RootToleranceExceeded, "cubic eigen-solver failed");
  }

  Triangle t;
  for (int i = 0; i < 3; ++i) {
    Complex z = solver.eigenvalues()(i);
    const Complex value = ((z + c2) * z + c1) * z + c0;
    const Complex slope = (3.0 * z + 2.0 * c2) * z + c1;
    if (std::abs(slope) > 0.0) z -= value / slope;
    const double modulus = std::abs(z);
    if (!(std::abs(modulus - 1.0) <= kUnitCircleTolerance)) {
      std::ostringstream msg;
      msg << "cubic root off the unit circle: |z| = " << modulus;
      throw Error(ErrorKind::RootToleranceExceeded, msg.str());
    }
    t[static_cast<std::size_t>(i)] = z / modulus;
  }
  std::sort(t.v.begin(), t.v.end(),
            [](Complex x, Complex y) { return wrapped_arg(x) < wrapped_arg(y); });
  return t;
}

Triangle affine_image(const PonceletFamily& fam, const Triangle& t) {
  return {{fam.to_world(t[0]), fam.to_world(t[1]), fam.to_world(t[2])}};
}

Triangle world_triangle(const PonceletFamily& fam, double theta) {
  return affine_image(fam, triangle_at(fam, theta));
}

Conic EllipseGeom::as_conic() const {
  const Complex center = 0.5 * (focus1 + focus2);
  const double semi_major = 0.5 * major_axis_length;
  const double semi_focal = 0.5 * std::abs(focus2 - focus1);
  const double semi_minor2 = semi_major * semi_major - semi_focal * semi_focal;
  if (!(semi_minor2 > 0.0)) {
    throw Error(ErrorKind::DegenerateConic, "major axis not longer than focal distance");
  }
  const Complex dir = semi_focal > 0.0 ? (focus2 - focus1) / (2.0 * semi_focal)
                                       : Complex{1.0, 0.0};
  const Conic local = Conic::from_coefficients(
      {1.0 / (semi_major * semi_major), 0.0, 1.0 / semi_minor2, 0.0, 0.0, -1.0});
  return conic_transform(local, ProjectiveMap::real_linear(dir, 0.0, center));
}

EllipseGeom inner_ellipse(const PonceletFamily& fam) {
  return {fam.f(), fam.g(), std::abs(1.0 - std::conj(fam.f()) * fam.g())};
}

Conic inner_ellipse_world(const PonceletFamily& fam) {
  return conic_transform(inner_ellipse(fam).as_conic(),
                         ProjectiveMap::real_linear(fam.p(), fam.q(), 0.0));
}

double side_tangency_residual(const PonceletFamily& fam, const Triangle& world) {
  const Conic inner = inner_ellipse_world(fam);
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Line side = Line::through(world[i], world[(i + 1) % 3]);
    worst = std::max(worst, tangency_residual(inner, side));
  }
  return worst;
}

Conic outer_ellipse(const PonceletFamily& fam) {
  const double a = fam.a(), b = fam.b();
  return Conic::from_coefficients({1.0 / (a * a), 0.0, 1.0 / (b * b), 0.0, 0.0, -1.0});
}

PonceletFamily family_from_inner_circle(double a, double b, Complex center,
                                        double r_in) {
  if (!(b > 0.0) || a < b || !(r_in > 0.0)) {
    throw Error(ErrorKind::InvalidFamily,
                "need a >= b > 0 and a positive inner radius");
  }
  const auto foci = preimage_foci(a, b, center, r_in);
  if (std::abs(foci.f) >= 1.0 || std::abs(foci.g) >= 1.0) {
    throw Error(ErrorKind::NotNested, "focus outside unit disk");
  }
  const double axis = std::abs(1.0 - std::conj(foci.f) * foci.g);
  const double expected = 2.0 * r_in / b;
  if (std::abs(axis - expected) > kClosureTolerance * expected) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "inner circle does not admit a triangle family: |1 - conj(f) g| = "
        << axis << " but 2 r / b = " << expected;
    throw Error(ErrorKind::CayleyViolation, msg.str());
  }
  return PonceletFamily::from_foci(foci.f, foci.g, a, b);
}

double closure_radius(double a, double b, Complex center) {
  if (!(b > 0.0) || a < b) {
    throw Error(ErrorKind::InvalidFamily, "outer semiaxes must satisfy a >= b > 0");
  }
  // gap(0) = 1 - |mid|^2 > 0 for a center inside the ellipse; march until it
  // turns negative, then bisect.
  double lo = 0.0;
  if (!(closure_gap(a, b, center, lo) > 0.0)) {
    throw Error(ErrorKind::CayleyViolation, "inner circle center outside the outer ellipse");
  }
  constexpr int kSteps = 4096;
  double hi = -1.0;
  for (int i = 1; i <= kSteps; ++i) {
    const double r = b * i / kSteps;
    if (closure_gap(a, b, center, r) <= 0.0) {
      hi = r;
      break;
    }
    lo = r;
  }
  if (hi < 0.0) throw Error(ErrorKind::CayleyViolation, "no closing inner radius");
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (closure_gap(a, b, center, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace poncelet
