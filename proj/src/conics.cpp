#include "poncelet/conics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

constexpr double kLeadingZero = 1e-13;
constexpr double kSingularDet = 1e-12;
constexpr double kRankTolerance = 1e-10;

Eigen::Matrix3d adjugate(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d adj;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
      const int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      // cofactor (r, c) lands transposed in the adjugate
      adj(c, r) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return adj;
}

bool rank_deficient(const Eigen::Matrix3d& q) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(q);
  const auto& s = svd.singularValues();
  return s(2) <= kRankTolerance * s(0);
}

// Roots of a t^2 + 2 b t + c = 0 with |a| >= |c|, a != 0, discriminant >= 0.
std::array<double, 2> stable_roots(double a, double b, double c, double disc) {
  const double s = std::sqrt(std::max(disc, 0.0));
  const double qq = -(b + std::copysign(s, b));
  if (qq == 0.0) return {0.0, 0.0};
  return {qq / a, c / qq};
}

}  // namespace

std::string_view to_string(ConicType type) {
  switch (type) {
    case ConicType::Ellipse: return "Ellipse";
    case ConicType::Parabola: return "Parabola";
    case ConicType::Hyperbola: return "Hyperbola";
    case ConicType::Degenerate: return "DegenerateConic";
  }
  return "?";
}

Conic Conic::from_coefficients(const Coefficients& c) {
  double norm2 = 0.0;
  for (double v : c) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::DegenerateInput, "conic coefficient is not finite");
    }
    norm2 += v * v;
  }
  if (norm2 == 0.0) {
    throw Error(ErrorKind::DegenerateInput, "all conic coefficients are zero");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  Coefficients out{};
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * inv;
  for (double v : out) {
    if (std::abs(v) > kLeadingZero) {
      if (v < 0.0) {
        for (double& w : out) w = -w;
      }
      break;
    }
  }
  return Conic(out);
}

Conic Conic::from_matrix(const Eigen::Matrix3d& q) {
  const Eigen::Matrix3d s = 0.5 * (q + q.transpose());
  return from_coefficients({s(0, 0), 2.0 * s(0, 1), s(1, 1), 2.0 * s(0, 2),
                            2.0 * s(1, 2), s(2, 2)});
}

Conic Conic::unit_circle() { return from_coefficients({1, 0, 1, 0, 0, -1}); }

Eigen::Matrix3d Conic::matrix() const {
  Eigen::Matrix3d q;
  q << A(), B() / 2, D() / 2,
       B() / 2, C(), E() / 2,
       D() / 2, E() / 2, F();
  return q;
}

double Conic::evaluate(Complex p) const {
  const double x = p.real(), y = p.imag();
  return A() * x * x + B() * x * y + C() * y * y + D() * x + E() * y + F();
}

Complex Conic::gradient(Complex p) const {
  const double x = p.real(), y = p.imag();
  return {2 * A() * x + B() * y + D(), B() * x + 2 * C() * y + E()};
}

double canonical_distance(const Conic& a, const Conic& b) {
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    minus += std::pow(a.coeffs()[i] - b.coeffs()[i], 2);
    plus += std::pow(a.coeffs()[i] + b.coeffs()[i], 2);
  }
  return std::sqrt(std::min(plus, minus));
}

ProjectiveMap::ProjectiveMap(const Eigen::Matrix3d& m) : m_(m) {
  if (!m.allFinite()) {
    throw Error(ErrorKind::SingularMap, "projective map has non-finite entries");
  }
  Eigen::Matrix3d rows = m;
  for (int r = 0; r < 3; ++r) {
    const double n = rows.row(r).norm();
    if (n == 0.0) throw Error(ErrorKind::SingularMap, "projective map has a zero row");
    rows.row(r) /= n;
  }
  if (std::abs(rows.determinant()) < kSingularDet) {
    throw Error(ErrorKind::SingularMap, "projective map is singular");
  }
}

ProjectiveMap ProjectiveMap::identity() {
  return ProjectiveMap(Eigen::Matrix3d::Identity());
}

ProjectiveMap ProjectiveMap::similarity(Complex offset, double scale) {
  Eigen::Matrix3d m;
  m << scale, 0, offset.real(),
       0, scale, offset.imag(),
       0, 0, 1;
  return ProjectiveMap(m);
}

ProjectiveMap ProjectiveMap::real_linear(Complex p, Complex q, Complex offset) {
  Eigen::Matrix3d m;
  m << p.real() + q.real(), -p.imag() + q.imag(), offset.real(),
       p.imag() + q.imag(), p.real() - q.real(), offset.imag(),
       0, 0, 1;
  return ProjectiveMap(m);
}

ProjectiveMap ProjectiveMap::inverse() const { return ProjectiveMap(m_.inverse()); }

ProjectiveMap ProjectiveMap::after(const ProjectiveMap& inner) const {
  return ProjectiveMap(m_ * inner.m_);
}

Complex ProjectiveMap::apply(Complex z) const {
  const Eigen::Vector3d h = m_ * Eigen::Vector3d(z.real(), z.imag(), 1.0);
  if (h(2) == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  return {h(0) / h(2), h(1) / h(2)};
}

Line Line::from_coefficients(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw Error(ErrorKind::DegenerateInput, "line normal vanishes");
  }
  return Line(a / n, b / n, c / n);
}

Line Line::through(Complex p, Complex q) {
  const Complex d = q - p;
  return from_coefficients(-d.imag(), d.real(),
                           d.imag() * p.real() - d.real() * p.imag());
}

Conic conic_fit(std::span<const Complex> points) {
  if (points.size() < 5) {
    throw Error(ErrorKind::DegenerateInput, "conic fit needs at least five points");
  }
  Complex centroid{0.0, 0.0};
  for (Complex p : points) {
    if (!is_finite(p)) throw Error(ErrorKind::DegenerateInput, "non-finite point");
    centroid += p;
  }
  centroid /= static_cast<double>(points.size());
  double mean_dist = 0.0;
  for (Complex p : points) mean_dist += std::abs(p - centroid);
  mean_dist /= static_cast<double>(points.size());
  if (!(mean_dist > 0.0)) {
    throw Error(ErrorKind::DegenerateInput, "all points coincide");
  }
  const double scale = std::sqrt(2.0) / mean_dist;

  Eigen::MatrixXd design(static_cast<Eigen::Index>(points.size()), 6);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex u = scale * (points[i] - centroid);
    const double x = u.real(), y = u.imag();
    design.row(static_cast<Eigen::Index>(i)) << x * x, x * y, y * y, x, y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(4) <= kRankTolerance * s(0)) {
    throw Error(ErrorKind::DegenerateInput,
                "design matrix rank below five (collinear or repeated points)");
  }
  const Eigen::VectorXd v = svd.matrixV().col(5);
  const Conic normalized =
      Conic::from_coefficients({v(0), v(1), v(2), v(3), v(4), v(5)});
  // normalized coordinates u = scale (z - centroid); pull back to z
  const auto to_normalized = ProjectiveMap::similarity(-scale * centroid, scale);
  return conic_transform(normalized, to_normalized.inverse());
}

ConicType conic_classify(const Conic& c) {
  if (rank_deficient(c.matrix())) return ConicType::Degenerate;
  const double disc = c.B() * c.B() - 4.0 * c.A() * c.C();
  const double eps = 1e-9 * (c.A() * c.A() + c.B() * c.B() + c.C() * c.C());
  if (disc < -eps) return ConicType::Ellipse;
  if (disc > eps) return ConicType::Hyperbola;
  return ConicType::Parabola;
}

Conic conic_transform(const Conic& c, const ProjectiveMap& m) {
  const Eigen::Matrix3d inv = m.matrix().inverse();
  return Conic::from_matrix(inv.transpose() * c.matrix() * inv);
}

double conic_residual(const Conic& c, Complex p) {
  return std::abs(c.evaluate(p)) / (std::abs(c.gradient(p)) + 1e-300);
}

std::vector<Line> tangents_from_point(const Conic& c, Complex o) {
  const Eigen::Matrix3d q = c.matrix();
  if (rank_deficient(q)) {
    throw Error(ErrorKind::DegenerateConic, "tangents requested from a degenerate conic");
  }
  const Eigen::Matrix3d dual = adjugate(q);
  // lines through o: cos t * e1 + sin t * e2
  const Eigen::Vector3d e1(1.0, 0.0, -o.real());
  const Eigen::Vector3d e2(0.0, 1.0, -o.imag());
  const double alpha = e1.dot(dual * e1);
  const double beta = e1.dot(dual * e2);
  const double gamma = e2.dot(dual * e2);
  const double disc = beta * beta - alpha * gamma;
  const double scale = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
  if (scale == 0.0) {
    throw Error(ErrorKind::DegenerateConic, "dual conic vanishes on the pencil through o");
  }

  std::vector<Line> out;
  const bool double_root = std::abs(disc) <= 1e-12 * scale * scale;
  if (disc < 0.0 && !double_root) return out;

  auto push = [&](double cx, double sy) {
    out.push_back(Line::from_coefficients(cx, sy, -(cx * o.real() + sy * o.imag())));
  };
  if (std::abs(alpha) >= std::abs(gamma)) {
    const auto t = stable_roots(alpha, beta, gamma, double_root ? 0.0 : disc);
    push(t[0], 1.0);
    if (!double_root) push(t[1], 1.0);
  } else {
    const auto u = stable_roots(gamma, beta, alpha, double_root ? 0.0 : disc);
    push(1.0, u[0]);
    if (!double_root) push(1.0, u[1]);
  }
  return out;
}

double tangency_residual(const Conic& c, const Line& l) {
  const Eigen::Matrix3d dual = adjugate(c.matrix());
  const Eigen::Vector3d h = l.homogeneous();
  return std::abs(h.dot(dual * h)) / (dual.norm() * h.squaredNorm());
}

bool is_tangent(const Conic& c, const Line& l, double tol) {
  return tangency_residual(c, l) < tol;
}

QuadraticShape quadratic_shape(const Conic& c) {
  const ConicType type = conic_classify(c);
  if (type == ConicType::Parabola || type == ConicType::Degenerate) {
    throw Error(ErrorKind::DegenerateConic, "conic has no center");
  }
  Eigen::Matrix2d s;
  s << c.A(), c.B() / 2, c.B() / 2, c.C();
  const Eigen::Vector2d center = s.partialPivLu().solve(Eigen::Vector2d(-c.D() / 2, -c.E() / 2));
  const double f_centered = 0.5 * (c.D() * center(0) + c.E() * center(1)) + c.F();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(s);
  const Eigen::Vector2d ev = eig.eigenvalues();
  const int small = std::abs(ev(0)) <= std::abs(ev(1)) ? 0 : 1;
  const int large = 1 - small;
  const Eigen::Vector2d dir = eig.eigenvectors().col(small);

  QuadraticShape out;
  out.center = {center(0), center(1)};
  double angle = std::atan2(dir(1), dir(0));
  angle = std::fmod(angle, kPi);
  if (angle < 0.0) angle += kPi;
  out.axis_angle = angle;
  out.eigen_ratio = std::abs(ev(small)) / std::abs(ev(large));
  out.semi_axis_major = std::sqrt(std::abs(f_centered / ev(small)));
  out.semi_axis_minor = std::sqrt(std::abs(f_centered / ev(large)));
  return out;
}

}  // namespace poncelet
