#include "poncelet/inversive.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "poncelet/error.hpp"
#include "poncelet/power.hpp"

namespace poncelet {

namespace {

constexpr double kCenterSingularity = 1e-12;
constexpr double kCollinear = 1e-12;
constexpr double kHypothesis = 1e-10;
constexpr double kAtInfinity = 1e-10;

Complex cj(Complex z) { return std::conj(z); }

}  // namespace

Circle make_circle(Complex center, double radius) {
  if (!is_finite(center) || !std::isfinite(radius) || !(radius > 0.0)) {
    throw Error(ErrorKind::DegenerateInput, "circle needs a finite center and radius > 0");
  }
  return {center, radius};
}

Complex invert_point(Complex z, const Circle& k) {
  const Complex d = z - k.center;
  if (std::abs(d) <= kCenterSingularity) {
    throw Error(ErrorKind::CenterSingularity, "point coincides with the inversion center");
  }
  return k.center + k.radius * k.radius / cj(d);
}

Complex circumcenter(const Triangle& t) {
  // circumcenter of {0, u, v} translated back by t[0]
  const Complex u = t[1] - t[0];
  const Complex v = t[2] - t[0];
  const Complex den = cj(u) * v - u * cj(v);
  const double scale = std::max({std::abs(u), std::abs(v), std::abs(v - u)});
  if (!(std::abs(den) > kCollinear * scale * scale)) {
    throw Error(ErrorKind::CollinearVertices, "triangle vertices are collinear");
  }
  return t[0] + (std::norm(u) * v - std::norm(v) * u) / den;
}

Circle circumcircle(const Triangle& t) {
  const Complex c = circumcenter(t);
  const double r = (std::abs(t[0] - c) + std::abs(t[1] - c) + std::abs(t[2] - c)) / 3.0;
  return {c, r};
}

Complex barycenter(const Triangle& t) { return (t[0] + t[1] + t[2]) / 3.0; }

Complex orthocenter(const Triangle& t) {
  return t[0] + t[1] + t[2] - 2.0 * circumcenter(t);
}

Complex euler_center(const Triangle& t) {
  const Complex x3 = circumcenter(t);
  return 0.5 * (x3 + (t[0] + t[1] + t[2] - 2.0 * x3));
}

Circle euler_circle(const Triangle& t) {
  const Circle c = circumcircle(t);
  return {0.5 * (t[0] + t[1] + t[2] - c.center), 0.5 * c.radius};
}

Triangle inversive_triangle(const Triangle& t, const Circle& k) {
  return {{invert_point(t[0], k), invert_point(t[1], k), invert_point(t[2], k)}};
}

namespace {

struct RawCoefficients {
  InversiveCoefficients c;
  Complex b2_printed;
  Complex b0_complex;
};

RawCoefficients raw_coefficients(const PonceletFamily& fam, const Circle& k) {
  const Complex f = fam.f(), g = fam.g();
  const Complex fb = cj(f), gb = cj(g);
  const double p = fam.p(), q = fam.q();
  const Complex z0 = k.center, z0b = cj(z0);
  const double r2 = k.radius * k.radius;
  const double z0n = std::norm(z0);

  RawCoefficients raw;
  InversiveCoefficients& c = raw.c;
  c.z0 = z0;
  c.r2 = r2;
  c.a2 = -p * q * (q * gb * fb - p) * r2;
  c.a1_const = r2 * (p * q * (f * g * p - q));
  c.a0 = -((f + g) * p * q * q - p * p * q * (fb + gb) + (p * p - q * q) * z0) * r2;

  raw.b2_printed = -q * p *
                   (fb * gb * (p * z0 - q * z0b) + (q * q - p * p) * (fb + gb) +
                    p * z0b - q * z0);

  raw.b0_complex = -std::pow(p, 4) + q * (f * g + fb * gb) * std::pow(p, 3) -
                   (z0 * (f + g) + z0b * (fb + gb)) * p * p * q + z0n * p * p -
                   (f * g + fb * gb) * std::pow(q, 3) * p + std::pow(q, 4) +
                   (z0b * (f + g) + z0 * (fb + gb)) * p * q * q - z0n * q * q;

  // The denominator is (p^2 - q^2) times the circumcircle power of z0, so its
  // conj(lambda) coefficient also follows from the power expansion.
  c.b1 = (p * p - q * q) * cj(pi3_affine_in_lambda(fam, z0).m1);
  c.b0 = raw.b0_complex.real();
  return raw;
}

}  // namespace

HypothesisResiduals inversive_hypothesis_residuals(const PonceletFamily& fam,
                                                   const Circle& k) {
  const RawCoefficients raw = raw_coefficients(fam, k);
  HypothesisResiduals out;
  // b1 vanishes identically for a circular outer conic (q = 0), and so does b2
  out.conjugacy = std::abs(raw.b2_printed - cj(raw.c.b1)) /
                  std::max(std::abs(raw.c.b1), 1e-300);
  out.realness = std::abs(raw.b0_complex.imag()) / std::max(std::abs(raw.b0_complex), 1e-300);
  return out;
}

InversiveCoefficients inversive_coeffs(const PonceletFamily& fam, const Circle& k) {
  const RawCoefficients raw = raw_coefficients(fam, k);
  const double scale =
      std::max({std::abs(raw.c.b1), std::abs(raw.b0_complex), 1e-300});
  const double conjugacy = std::abs(raw.b2_printed - cj(raw.c.b1));
  if (conjugacy > kHypothesis * scale) {
    std::ostringstream msg;
    msg << "denominator coefficients not conjugate: |b2 - conj(b1)| = " << conjugacy;
    throw Error(ErrorKind::HypothesisViolation, msg.str());
  }
  if (std::abs(raw.b0_complex.imag()) > kHypothesis * scale) {
    std::ostringstream msg;
    msg << "constant denominator coefficient not real: Im(b0) = "
        << raw.b0_complex.imag();
    throw Error(ErrorKind::HypothesisViolation, msg.str());
  }
  return raw.c;
}

Complex inversive_circumcenter_closed(const InversiveCoefficients& c, double theta) {
  const Complex l = std::polar(1.0, theta);
  const double den = 2.0 * (c.b2() * l).real() + c.b0;
  if (!(std::abs(den) > kAtInfinity)) {
    throw Error(ErrorKind::OnCircumcircle,
                "inversion center lies on the circumcircle; locus point at infinity");
  }
  return c.z0 + (c.a2 * l + c.a1_const * cj(l) + c.a0) / den;
}

Complex inversive_circumcenter_direct(const PonceletFamily& fam, const Circle& k,
                                      double theta) {
  return circumcenter(inversive_triangle(world_triangle(fam, theta), k));
}

ProjectiveMap LocusMap::world_map() const {
  return ProjectiveMap::similarity(z0, r2).after(map);
}

ProjectiveMap complex_projective_map(Complex k1, Complex k2, Complex k3,
                                     Complex k4, Complex k5, Complex k6) {
  const double scale = std::max({std::abs(k4), std::abs(k5), std::abs(k6), 1e-300});
  if (std::abs(k5 - cj(k4)) > kHypothesis * scale ||
      std::abs(k6.imag()) > kHypothesis * scale) {
    throw Error(ErrorKind::HypothesisViolation,
                "denominator is not of the form k4 z + conj(k4 z) + real");
  }
  // k z + m conj(z) at z = x + iy equals (k + m) x + i (k - m) y
  const Complex sx1 = k1 + k2, sy1 = Complex{0, 1} * (k1 - k2);
  const Complex sx2 = k4 + k5, sy2 = Complex{0, 1} * (k4 - k5);
  Eigen::Matrix3d m;
  m << sx1.real(), sy1.real(), k3.real(),
       sx1.imag(), sy1.imag(), k3.imag(),
       sx2.real(), sy2.real(), k6.real();
  return ProjectiveMap(m);
}

LocusMap projective_map_of_locus(const InversiveCoefficients& c) {
  const double r2 = c.r2;
  return {complex_projective_map(c.a2 / r2, c.a1_const / r2, c.a0 / r2, c.b2(), c.b1,
                                 c.b0),
          c.z0, r2};
}

Conic inversive_locus_conic(const PonceletFamily& fam, const Circle& k) {
  const LocusMap lm = projective_map_of_locus(inversive_coeffs(fam, k));
  return conic_transform(Conic::unit_circle(), lm.world_map());
}

ProjectiveMap circumcenter_locus_map(const PonceletFamily& fam) {
  const Complex f = fam.f(), g = fam.g();
  const double p = fam.p(), q = fam.q();
  const double pq = p * q, d = p * p - q * q;
  // -X3 is the conj(w0) coefficient of the circumcircle power expansion
  const Complex u1 = pq * (p - cj(f) * cj(g) * q) / d;
  const Complex u2 = pq * (f * g * p - q) / d;
  const Complex u0 = -pq * (q * f - cj(f) * p + q * g - cj(g) * p) / d;
  return ProjectiveMap::real_linear(u1, u2, u0);
}

Conic circumcenter_locus_conic(const PonceletFamily& fam) {
  return conic_transform(Conic::unit_circle(), circumcenter_locus_map(fam));
}

Complex circumcenter_closed(const PonceletFamily& fam, double theta) {
  const Complex f = fam.f(), g = fam.g();
  const double p = fam.p(), q = fam.q();
  const double pq = p * q, d = p * p - q * q;
  const Complex l = std::polar(1.0, theta);
  return (pq * (p - cj(f) * cj(g) * q) * l + pq * (f * g * p - q) * cj(l) -
          pq * (q * f - cj(f) * p + q * g - cj(g) * p)) /
         d;
}

double pencil_membership(const Circle& c1, const Circle& c2, const Circle& c3) {
  Eigen::Matrix<double, 3, 4> stack;
  const Circle* cs[] = {&c1, &c2, &c3};
  for (int i = 0; i < 3; ++i) {
    const Circle& c = *cs[i];
    stack.row(i) << 1.0, -2.0 * c.center.real(), -2.0 * c.center.imag(),
        std::norm(c.center) - c.radius * c.radius;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(stack);
  const auto& s = svd.singularValues();
  return s(2) / s(0);
}

CollinearityResiduals collinearity_and_ratio(Complex x3, Complex o, Complex x3p,
                                             const Circle& circ, const Circle& k) {
  const Complex d = x3 - o, dp = x3p - o;
  const double nd = std::abs(d), ndp = std::abs(dp);
  if (nd <= 1e-10 || ndp <= 1e-10) {
    throw Error(ErrorKind::DegenerateConfiguration,
                "inversion center coincides with a circumcenter");
  }
  const double expected =
      std::abs((std::norm(d) - circ.radius * circ.radius) / (k.radius * k.radius));
  if (!(expected > 0.0)) {
    throw Error(ErrorKind::DegenerateConfiguration,
                "inversion center lies on the circumcircle");
  }
  CollinearityResiduals out;
  out.collinearity = std::abs((d * cj(dp)).imag()) / (nd * ndp);
  out.ratio = std::abs(nd / ndp - expected) / expected;
  return out;
}

}  // namespace poncelet
