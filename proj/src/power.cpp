#include "poncelet/power.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

constexpr double kRealness = 1e-9;
constexpr double kDenominatorGuard = 1e-12;

Complex cj(Complex z) { return std::conj(z); }

double real_part_checked(Complex v, std::string_view what) {
  if (std::abs(v.imag()) > kRealness * std::max(std::abs(v), 1e-300)) {
    std::ostringstream msg;
    msg << what << " is not real: " << v;
    throw Error(ErrorKind::RealnessViolation, msg.str());
  }
  return v.real();
}

}  // namespace

std::string_view to_string(PowerCircleKind kind) {
  return kind == PowerCircleKind::Circumcircle ? "Circumcircle" : "EulerCircle";
}

double power(Complex p, const Circle& c) {
  return std::norm(p - c.center) - c.radius * c.radius;
}

double power_via_zeta(Complex z0, const Triangle& t) {
  const Complex z1 = t[0], z2 = t[1], z3 = t[2];
  const Complex num = std::norm(z1) * (cj(z3) - cj(z2)) + std::norm(z2) * (cj(z1) - cj(z3)) +
                      std::norm(z3) * (cj(z2) - cj(z1));
  const Complex den =
      z1 * (cj(z2) - cj(z3)) + z2 * (cj(z3) - cj(z1)) + z3 * (cj(z1) - cj(z2));
  const double scale = std::max({std::abs(z2 - z1), std::abs(z3 - z1), std::abs(z3 - z2)});
  if (!(std::abs(den) > 1e-12 * scale * scale)) {
    throw Error(ErrorKind::CollinearVertices, "triangle vertices are collinear");
  }
  const Complex zeta = num / den;
  auto form = [&](Complex w) { return std::norm(w) + 2.0 * (zeta * w).real(); };
  // the form vanishes up to a common constant on the three vertices
  const double offset = (form(z1) + form(z2) + form(z3)) / 3.0;
  return form(z0) - offset;
}

Complex p3_preimage(const PonceletFamily& fam) {
  const Complex f = fam.f(), g = fam.g();
  return (f + g - (cj(f) + cj(g)) * f * g) / (1.0 - std::norm(f * g));
}

PowerPointResult p3_point(const PonceletFamily& fam) {
  const Complex f = fam.f(), g = fam.g(), fb = cj(f), gb = cj(g);
  const double p = fam.p(), q = fam.q();
  const double F2 = std::norm(f), G2 = std::norm(g);
  const double den = F2 * G2 - 1.0;

  const Complex point = (g * F2 + f * G2 - f - g) * p / den +
                        (F2 * gb + fb * G2 - fb - gb) * q / den;
  const Complex pi3 = (G2 - 1.0) * (fb * g - 1.0) * (f * gb - 1.0) * (F2 - 1.0) *
                      (p * q * (f * g + fb * gb) - p * p - q * q) / (den * den);
  return {point, real_part_checked(pi3, "Pi3"), PowerCircleKind::Circumcircle};
}

double p3_interiority_margin(const PonceletFamily& fam) {
  const Complex z = p3_preimage(fam);
  const EllipseGeom e = inner_ellipse(fam);
  return e.major_axis_length - (std::abs(z - e.focus1) + std::abs(z - e.focus2));
}

double p3_interiority_margin_closed(const PonceletFamily& fam) {
  const Complex f = fam.f(), g = fam.g();
  const double nf = std::abs(f), ng = std::abs(g);
  const double denom = 1.0 - std::norm(f) * std::norm(g);
  const double to_f = (1.0 - nf * nf) / denom * ng * std::abs(1.0 - cj(f) * g);
  const double to_g = (1.0 - ng * ng) / denom * nf * std::abs(1.0 - f * cj(g));
  return std::abs(1.0 - cj(f) * g) - (to_f + to_g);
}

P5Constants p5_constants(const PonceletFamily& fam) {
  const Complex f = fam.f(), g = fam.g(), fb = cj(f), gb = cj(g);
  const double p = fam.p(), q = fam.q();
  auto pw = [](auto x, int n) {
    decltype(x) r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
  };
  const Complex f2 = f * f, g2 = g * g, fb2 = fb * fb, gb2 = gb * gb;

  // coefficient of p^6 q^2 (and, by symmetry, p^2 q^6)
  const Complex c62 = 2.0 * gb2 * fb2 * f2 * g2 - gb2 * fb * f2 * g - gb2 * fb * f * g2 -
                      gb * fb2 * f2 * g - gb * fb2 * f * g2 + fb2 * gb2 +
                      4.0 * f * fb * g * gb + f2 * g2;
  // coefficient of p^5 q^3 (and p^3 q^5)
  const Complex c53 = pw(gb, 3) * fb * f * g - 2.0 * gb2 * fb2 * f * g +
                      f * g * gb * pw(fb, 3) + gb * fb * pw(f, 3) * g -
                      2.0 * gb * fb * f2 * g2 + gb * fb * f * pw(g, 3) + gb2 * fb * f +
                      gb2 * fb * g + gb * fb2 * f + gb * fb2 * g + gb * f2 * g +
                      gb * f * g2 + fb * f2 * g + fb * f * g2 - 2.0 * fb * gb -
                      2.0 * f * g;
  const Complex c44 = 3.0 * gb2 * fb2 * f2 * g2 - 3.0 * gb2 * fb * f2 * g -
                      3.0 * gb2 * fb * f * g2 - 3.0 * gb * fb2 * f2 * g -
                      3.0 * gb * fb2 * f * g2 - pw(gb, 3) * fb - gb * pw(fb, 3) +
                      6.0 * f * fb * g * gb - pw(f, 3) * g - f * pw(g, 3) - f * gb -
                      g * gb - f * fb - fb * g + 1.0;

  const Complex gamma1 =
      f2 * g2 * pw(p, 8) * fb2 * gb2 - 2.0 * q * f * g * fb * gb * (fb * gb + f * g) * pw(p, 7) +
      c62 * pw(p, 6) * q * q + c53 * pw(p, 5) * pw(q, 3) + c44 * pw(q, 4) * pw(p, 4) +
      c53 * pw(p, 3) * pw(q, 5) + c62 * p * p * pw(q, 6) -
      2.0 * f * g * pw(q, 7) * fb * gb * (fb * gb + f * g) * p +
      f2 * g2 * pw(q, 8) * fb2 * gb2;

  const Complex inner = f * fb * g * gb * pw(p, 4) + (-fb * gb - f * g) * q * pw(p, 3) +
                        q * q * (f * fb * g * gb + 1.0) * p * p +
                        (-fb * gb - f * g) * p * pw(q, 3) + f * fb * g * gb * pw(q, 4);
  const Complex gamma2 = 4.0 * inner * inner;

  return {real_part_checked(gamma1, "gamma1"), real_part_checked(gamma2, "gamma2")};
}

PowerPointResult p5_point(const PonceletFamily& fam) {
  const Complex f = fam.f(), g = fam.g(), fb = cj(f), gb = cj(g);
  const double p = fam.p(), q = fam.q();
  const double p2 = p * p, q2 = q * q;
  const double unit = (p2 + q2) * (p2 + q2);

  const Complex num = (f * g * (f + g) * p2 * (fb * gb * p - q) +
                       fb * gb * q2 * (fb + gb) * (f * g * q - p)) *
                      (p2 + q2);
  const Complex den = 2.0 * std::norm(f) * std::norm(g) * (p2 * p2 + q2 * q2 + p2 * q2) -
                      2.0 * (f * g + fb * gb) * p * q * (p2 + q2) + 2.0 * p2 * q2;
  if (!(std::abs(den) > kDenominatorGuard * unit)) {
    throw Error(ErrorKind::DegenerateDenominator, "P5 denominator vanishes");
  }
  const P5Constants k = p5_constants(fam);
  if (!(k.gamma2 > kDenominatorGuard * unit * unit)) {
    throw Error(ErrorKind::DegenerateDenominator, "gamma2 vanishes");
  }
  const double pi5 = (p2 + q2) * (std::norm(f * g) - 1.0) * k.gamma1 / k.gamma2;
  return {num / den, pi5, PowerCircleKind::EulerCircle};
}

Pi3Affine pi3_affine_in_lambda(const PonceletFamily& fam, Complex w0) {
  const Complex f = fam.f(), g = fam.g(), fb = cj(f), gb = cj(g);
  const double p = fam.p(), q = fam.q();
  const double d = p * p - q * q;
  const Complex w0b = cj(w0);

  const Complex m1 =
      -p * q * ((fb * gb * p - q) * w0 + (-fb * gb * q + p) * w0b - d * (fb + gb)) / d;
  const Complex m3 = (-p * q * (p * f - fb * q + p * g - gb * q) * w0 + d * std::norm(w0) +
                      p * q * (q * f - fb * p + g * q - gb * p) * w0b +
                      d * (f * g * p * q + fb * gb * p * q - p * p - q * q)) /
                     d;
  return {m1, real_part_checked(m3, "M3")};
}

}  // namespace poncelet
