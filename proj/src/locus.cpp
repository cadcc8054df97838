#include "poncelet/locus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "poncelet/error.hpp"
#include "poncelet/power.hpp"

namespace poncelet {

namespace {

constexpr double kSkipPower = 1e-8;
constexpr double kBoundaryPower = 1e-6;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
const Complex kNanPoint{kNan, kNan};

double theta_at(std::size_t i, std::size_t n) {
  return kTwoPi * static_cast<double>(i) / static_cast<double>(n);
}

// Minimizes a unimodal function on [lo, hi].
double golden_minimize(const std::function<double(double)>& fn, double lo, double hi,
                       int iterations = 80) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int i = 0; i < iterations && b - a > 1e-15; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = fn(d);
    }
  }
  return 0.5 * (a + b);
}

double bisect_zero(const std::function<double(double)>& fn, double lo, double hi) {
  double flo = fn(lo);
  for (int i = 0; i < 80 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = fn(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct PowerProfile {
  std::vector<double> values;
  double mean_r2 = 0.0;
};

PowerProfile power_profile(const PonceletFamily& fam, Complex o, std::size_t grid) {
  PowerProfile out;
  out.values.resize(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const Circle c = circumcircle(world_triangle(fam, theta_at(i, grid)));
    out.values[i] = power(o, c);
    out.mean_r2 += c.radius * c.radius;
  }
  out.mean_r2 /= static_cast<double>(grid);
  return out;
}

// Refined minimum and maximum of theta -> power(o, circumcircle).
std::pair<double, double> power_extrema(const PonceletFamily& fam, Complex o,
                                        const PowerProfile& prof) {
  const std::size_t n = prof.values.size();
  auto fn = [&](double t) { return power(o, circumcircle(world_triangle(fam, t))); };
  const auto [mn, mx] = std::minmax_element(prof.values.begin(), prof.values.end());
  const double step = kTwoPi / static_cast<double>(n);
  const double tmin = theta_at(static_cast<std::size_t>(mn - prof.values.begin()), n);
  const double tmax = theta_at(static_cast<std::size_t>(mx - prof.values.begin()), n);
  const double at_min = golden_minimize(fn, tmin - step, tmin + step);
  const double at_max = golden_minimize([&](double t) { return -fn(t); }, tmax - step,
                                        tmax + step);
  return {std::min(fn(at_min), *mn), std::max(fn(at_max), *mx)};
}

}  // namespace

bool SweepResult::is_skipped(std::size_t i) const {
  return std::binary_search(skipped.begin(), skipped.end(), i);
}

std::vector<Complex> SweepResult::valid(
    const std::vector<Complex> SweepResult::*list) const {
  std::vector<Complex> out;
  const auto& values = this->*list;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!is_skipped(i)) out.push_back(values[i]);
  }
  return out;
}

SweepResult sweep(const PonceletFamily& fam, const Circle& k, std::size_t n) {
  if (n < 64) throw Error(ErrorKind::DegenerateInput, "sweep needs at least 64 samples");
  SweepResult s;
  s.thetas.resize(n);
  s.x3.resize(n);
  s.x3p.resize(n);
  s.inv_x3.resize(n);
  s.x2p.resize(n);
  s.x4p.resize(n);
  s.x5p.resize(n);
  s.power_at_o.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = theta_at(i, n);
    const Triangle world = world_triangle(fam, theta);
    const Circle circ = circumcircle(world);
    s.thetas[i] = theta;
    s.x3[i] = circ.center;
    s.power_at_o[i] = power(k.center, circ);
    if (std::abs(s.power_at_o[i]) < kSkipPower * circ.radius * circ.radius) {
      s.skipped.push_back(i);
      s.x3p[i] = s.inv_x3[i] = s.x2p[i] = s.x4p[i] = s.x5p[i] = kNanPoint;
      continue;
    }
    const Triangle inv = inversive_triangle(world, k);
    s.x3p[i] = circumcenter(inv);
    s.inv_x3[i] = invert_point(circ.center, k);
    s.x2p[i] = barycenter(inv);
    s.x4p[i] = orthocenter(inv);
    s.x5p[i] = euler_center(inv);
  }
  return s;
}

std::string_view to_string(OLocationKind kind) {
  switch (kind) {
    case OLocationKind::Exterior: return "Exterior";
    case OLocationKind::Interior: return "Interior";
    case OLocationKind::Boundary: return "Boundary";
  }
  return "?";
}

OLocation classify_O(const PonceletFamily& fam, const Circle& k, std::size_t grid) {
  if (grid < 16) throw Error(ErrorKind::DegenerateInput, "classification grid too coarse");
  const Complex o = k.center;
  const PowerProfile prof = power_profile(fam, o, grid);
  auto fn = [&](double t) { return power(o, circumcircle(world_triangle(fam, t))); };

  std::vector<double> zeros;
  for (std::size_t i = 0; i < grid; ++i) {
    const double a = prof.values[i], b = prof.values[(i + 1) % grid];
    if ((a < 0.0) != (b < 0.0)) {
      const double lo = theta_at(i, grid);
      zeros.push_back(bisect_zero(fn, lo, lo + kTwoPi / static_cast<double>(grid)));
    }
  }
  const auto [lo, hi] = power_extrema(fam, o, prof);

  OLocation out;
  out.lambda_crossings = static_cast<int>(zeros.size());
  out.crossing_count = 3 * out.lambda_crossings;
  out.inside_all_circumcircles = hi < 0.0;
  out.nearest_extremum = std::min(std::abs(lo), std::abs(hi)) / prof.mean_r2;

  if (out.nearest_extremum < kBoundaryPower) {
    out.kind = OLocationKind::Boundary;
    out.crossing_count = 3;
    return out;
  }
  if (out.lambda_crossings == 0) {
    out.kind = OLocationKind::Exterior;
  } else if (out.lambda_crossings == 2) {
    out.kind = OLocationKind::Interior;
  } else {
    throw Error(ErrorKind::AmbiguousBoundary,
                "unexpected number of circumcircle crossings: " +
                    std::to_string(out.lambda_crossings));
  }
  return out;
}

ConicType expected_locus_type(OLocationKind kind) {
  switch (kind) {
    case OLocationKind::Exterior: return ConicType::Ellipse;
    case OLocationKind::Interior: return ConicType::Hyperbola;
    case OLocationKind::Boundary: return ConicType::Parabola;
  }
  return ConicType::Degenerate;
}

ConicTypeReport verify_conic_type(const PonceletFamily& fam, const Circle& k) {
  ConicTypeReport r;
  r.location = classify_O(fam, k);
  r.locus_type = conic_classify(inversive_locus_conic(fam, k));
  r.expected = expected_locus_type(r.location.kind);
  r.consistent = r.locus_type == r.expected;
  return r;
}

Circle find_boundary_inversion(const PonceletFamily& fam, Complex exterior,
                               Complex interior, double radius) {
  constexpr std::size_t kGrid = 256;
  auto crosses = [&](Complex o) {
    const auto [lo, hi] = power_extrema(fam, o, power_profile(fam, o, kGrid));
    return lo < 0.0 && hi > 0.0;
  };
  if (crosses(exterior) == crosses(interior)) {
    throw Error(ErrorKind::DegenerateConfiguration,
                "segment endpoints lie on the same side of the swept region boundary");
  }
  const bool ext_state = crosses(exterior);
  double a = 0.0, b = 1.0;
  for (int i = 0; i < 200 && b - a > 1e-16; ++i) {
    const double mid = 0.5 * (a + b);
    (crosses(exterior + mid * (interior - exterior)) == ext_state ? a : b) = mid;
  }
  return make_circle(exterior + 0.5 * (a + b) * (interior - exterior), radius);
}

SimilitudeReport similitude_check(const PonceletFamily& fam, const Circle& k,
                                  std::size_t n) {
  SimilitudeReport r;
  Conic l3 = Conic::unit_circle();
  try {
    l3 = circumcenter_locus_conic(fam);
  } catch (const Error& e) {
    r.skipped = true;
    r.note = std::string("circumcenter locus degenerate: ") + e.what();
    return r;
  }
  const Conic l3p = inversive_locus_conic(fam, k);
  r.tangents = tangents_from_point(l3, k.center);
  if (r.tangents.size() < 2) {
    r.skipped = true;
    r.note = std::string(to_string(ErrorKind::NoRealTangents)) +
             ": inversion center is not exterior to the circumcenter locus";
    return r;
  }

  auto inv_x3 = [&](double t) {
    return invert_point(circumcircle(world_triangle(fam, t)).center, k);
  };
  std::vector<Complex> cloud(n);
  for (std::size_t i = 0; i < n; ++i) cloud[i] = inv_x3(theta_at(i, n));
  r.scale = cloud_scale(cloud);

  for (const Line& l : r.tangents) {
    r.inversive_residuals.push_back(tangency_residual(l3p, l));
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = l.signed_distance(cloud[i]);
    const double tiny = 1e-12 * r.scale;
    const bool any_pos = std::any_of(d.begin(), d.end(), [&](double v) { return v > tiny; });
    const bool any_neg = std::any_of(d.begin(), d.end(), [&](double v) { return v < -tiny; });
    r.one_sided.push_back(!(any_pos && any_neg));

    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(d[i]) < std::abs(d[best])) best = i;
    }
    const double step = kTwoPi / static_cast<double>(n);
    const double t0 = theta_at(best, n);
    auto dist = [&](double t) { return std::abs(l.signed_distance(inv_x3(t))); };
    const double t_star = golden_minimize(dist, t0 - step, t0 + step);
    r.cloud_distances.push_back(std::min(dist(t_star), std::abs(d[best])) / r.scale);
  }
  return r;
}

HomothetyReport homothety_check(const PonceletFamily& fam, double radius) {
  HomothetyReport r;
  const PowerPointResult p3 = p3_point(fam);
  r.center = p3.point;
  const Circle k = make_circle(p3.point, radius);
  r.expected_ratio = std::abs(p3.invariant_power) / (radius * radius);

  Conic l3 = Conic::unit_circle();
  try {
    l3 = circumcenter_locus_conic(fam);
  } catch (const Error& e) {
    r.skipped = true;
    r.note = std::string("circumcenter locus degenerates to a point: ") + e.what();
    return r;
  }
  const Conic l3p = inversive_locus_conic(fam, k);
  r.type_x3 = conic_classify(l3);
  r.type_x3p = conic_classify(l3p);
  const QuadraticShape s = quadratic_shape(l3);
  const QuadraticShape sp = quadratic_shape(l3p);

  double dangle = std::fmod(std::abs(s.axis_angle - sp.axis_angle), kPi);
  r.axis_angle_diff = std::min(dangle, kPi - dangle);
  if (s.eigen_ratio > 1.0 - 1e-9 && sp.eigen_ratio > 1.0 - 1e-9) {
    r.axis_angle_diff = 0.0;  // circles: no preferred axis
    r.note = "both loci are circles";
  }
  r.eigen_ratio_diff = std::abs(s.eigen_ratio - sp.eigen_ratio);
  r.measured_ratio = s.semi_axis_major / sp.semi_axis_major;
  r.ratio_residual = std::abs(r.measured_ratio - r.expected_ratio) / r.expected_ratio;
  return r;
}

ChappleReport chapple_check(const PonceletFamily& fam, std::size_t n) {
  ChappleReport r;
  const double radius = fam.a();
  if (std::abs(fam.f() - fam.g()) > 1e-14 || fam.q() != 0.0) {
    r.note = "needs f = g and a = b";
    return r;
  }
  r.applicable = true;
  const Complex f = fam.f();
  const Complex p3 = p3_point(fam).point;
  r.p3_formula_residual = std::abs(p3 - radius * 2.0 * f / (1.0 + std::norm(f))) / radius;

  // inner circle: center R f, radius R (1 - |f|^2) / 2
  const Complex inner_center = radius * f;
  const double inner_radius = radius * inner_ellipse(fam).major_axis_length / 2.0;
  const Complex x56 = radius * inner_center / (radius - inner_radius);
  r.x56_residual = std::abs(p3 - x56) / radius;

  std::vector<Complex> x5(n);
  for (std::size_t i = 0; i < n; ++i) {
    x5[i] = euler_center(world_triangle(fam, theta_at(i, n)));
  }
  if (cloud_scale(x5) < 1e-12 * radius) {
    // f = 0: every triangle is equilateral and X5 sits at the center
    r.x5_center_offset = std::abs(x5.front() - inner_center) / radius;
    r.note = "X5 locus collapses to the inner center";
    return r;
  }
  const Conic fit = conic_fit(x5);
  r.x5_fit_residual = max_residual(x5, fit) / radius;
  const QuadraticShape shape = quadratic_shape(fit);
  r.x5_center_offset = std::abs(shape.center - inner_center) / radius;
  r.x5_eccentricity = 1.0 - shape.eigen_ratio;
  return r;
}

double cloud_scale(std::span<const Complex> points) {
  if (points.empty()) return 0.0;
  Complex c{0.0, 0.0};
  for (Complex p : points) c += p;
  c /= static_cast<double>(points.size());
  double acc = 0.0;
  for (Complex p : points) acc += std::norm(p - c);
  return std::sqrt(acc / static_cast<double>(points.size()));
}

double max_residual(std::span<const Complex> points, const Conic& c) {
  double worst = 0.0;
  for (Complex p : points) worst = std::max(worst, conic_residual(c, p));
  return worst;
}

double max_fit_residual(std::span<const Complex> points) {
  return max_residual(points, conic_fit(points));
}

NonconicReport nonconic_evidence(const SweepResult& s) {
  NonconicReport r;
  const auto x3p = s.valid(&SweepResult::x3p);
  if (x3p.size() < 100) {
    r.degenerate = true;
    r.note = "fewer than 100 valid samples";
    return r;
  }
  auto relative = [&](const std::vector<Complex>& pts, double& out) {
    const double scale = cloud_scale(pts);
    if (!(scale > 1e-12)) return false;
    try {
      out = max_fit_residual(pts) / scale;
    } catch (const Error&) {
      return false;
    }
    return true;
  };
  const bool ok = relative(x3p, r.x3p_residual) &&
                  relative(s.valid(&SweepResult::x2p), r.x2p_residual) &&
                  relative(s.valid(&SweepResult::x4p), r.x4p_residual) &&
                  relative(s.valid(&SweepResult::x5p), r.x5p_residual);
  if (!ok) {
    r.degenerate = true;
    r.note = "a center locus collapses to a point or a line";
    return r;
  }
  r.evidence = r.x3p_residual < 1e-9 && r.x2p_residual > 1e-4 &&
               r.x4p_residual > 1e-4 && r.x5p_residual > 1e-4;
  return r;
}

}  // namespace poncelet
