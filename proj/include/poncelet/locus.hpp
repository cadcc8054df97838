#pragma once

// Sweeps over the family and the checks built on them.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "poncelet/conics.hpp"
#include "poncelet/family.hpp"
#include "poncelet/inversive.hpp"
#include "poncelet/types.hpp"

namespace poncelet {

/// Per-sample centers over a uniform theta grid. Entries at skipped indices
/// (inversion center on the circumcircle) hold NaN in every inversive list.
struct SweepResult {
  std::vector<double> thetas;
  std::vector<Complex> x3, x3p, inv_x3, x2p, x4p, x5p;
  std::vector<double> power_at_o;
  std::vector<std::size_t> skipped;

  std::size_t size() const { return thetas.size(); }
  bool is_skipped(std::size_t i) const;
  /// Entries of one center list at non-skipped indices.
  std::vector<Complex> valid(const std::vector<Complex> SweepResult::*list) const;
};

/// Throws DegenerateInput for n < 64; propagates family and solver errors.
/// A sample is skipped when |power(O, circumcircle)| < 1e-8 R^2.
SweepResult sweep(const PonceletFamily& fam, const Circle& k, std::size_t n);

enum class OLocationKind { Exterior, Interior, Boundary };

std::string_view to_string(OLocationKind kind);

struct OLocation {
  OLocationKind kind = OLocationKind::Exterior;
  /// Sign changes of power(O, circumcircle) during one revolution of a vertex
  /// around the outer ellipse. One revolution of lambda visits each triangle
  /// once; a vertex revolution visits it three times, so this is three times
  /// the lambda count: 0 (exterior), 6 (interior), 3 double roots (boundary).
  int crossing_count = 0;
  /// Sign changes over one revolution of lambda.
  int lambda_crossings = 0;
  /// Power stays negative: O is inside every circumcircle.
  bool inside_all_circumcircles = false;
  /// Extremum of the power nearest zero, relative to the mean R^2.
  double nearest_extremum = 0.0;
};

/// Classifies O against the region swept by the circumcircle from sign
/// changes of theta -> power(O, circumcircle) on a uniform grid, each change
/// refined by bisection. Throws AmbiguousBoundary for counts outside {0, 2}.
OLocation classify_O(const PonceletFamily& fam, const Circle& k, std::size_t grid = 4096);

struct ConicTypeReport {
  OLocation location;
  ConicType locus_type = ConicType::Degenerate;
  ConicType expected = ConicType::Degenerate;
  bool consistent = false;
};

/// Exterior -> Ellipse, Interior -> Hyperbola, Boundary -> Parabola.
ConicType expected_locus_type(OLocationKind kind);

ConicTypeReport verify_conic_type(const PonceletFamily& fam, const Circle& k);

/// Bisects the inversion center on the segment [exterior, interior] until it
/// sits on the boundary of the swept region. The endpoints must classify
/// differently.
Circle find_boundary_inversion(const PonceletFamily& fam, Complex exterior,
                               Complex interior, double radius);

struct SimilitudeReport {
  bool skipped = false;
  std::string note;
  std::vector<Line> tangents;
  /// Dual-conic tangency residual of each line against the X3' locus.
  std::vector<double> inversive_residuals;
  /// Minimum |distance| of each line to the inv(X3) curve, relative to scale.
  std::vector<double> cloud_distances;
  /// Whether the inv(X3) curve stays on one side of each line.
  std::vector<bool> one_sided;
  double scale = 0.0;
};

/// Tangents from O to the X3 locus, checked against the X3' locus (dual
/// conic) and against the inv(X3) curve (sampled with n points, then refined
/// near the closest sample). Reports skipped with NoRealTangents when O is
/// inside the X3 locus.
SimilitudeReport similitude_check(const PonceletFamily& fam, const Circle& k,
                                  std::size_t n = 720);

struct HomothetyReport {
  bool skipped = false;
  std::string note;
  Complex center;  // P3
  ConicType type_x3 = ConicType::Degenerate;
  ConicType type_x3p = ConicType::Degenerate;
  double axis_angle_diff = 0.0;
  double eigen_ratio_diff = 0.0;
  /// Size of the X3 locus over size of the X3' locus.
  double measured_ratio = 0.0;
  /// |Pi3| / r^2
  double expected_ratio = 0.0;
  double ratio_residual = 0.0;
};

/// With the inversion centered at P3, the X3' locus is a translated and
/// scaled copy of the X3 locus.
HomothetyReport homothety_check(const PonceletFamily& fam, double radius = 1.0);

struct NonconicReport {
  bool degenerate = false;
  std::string note;
  double x3p_residual = 0.0;
  double x2p_residual = 0.0;
  double x4p_residual = 0.0;
  double x5p_residual = 0.0;
  /// X3' is conic to 1e-9 scale while X2', X4', X5' all exceed 1e-4 scale.
  bool evidence = false;
};

/// Max conic_residual of each center's least-squares conic, relative to the
/// RMS radius of that center's cloud. Needs at least 100 valid samples;
/// anything less, or a cloud collapsed to a point, is reported as degenerate.
NonconicReport nonconic_evidence(const SweepResult& s);

struct ChappleReport {
  bool applicable = false;
  std::string note;
  /// |P3 - R 2f/(1+|f|^2)| / R, R the outer radius.
  double p3_formula_residual = 0.0;
  /// |P3 - X56| / R, X56 the external similitude center of outer and inner circle.
  double x56_residual = 0.0;
  /// Max conic_residual of the X5 samples against their fitted conic, relative to R.
  double x5_fit_residual = 0.0;
  /// Distance of the fitted conic's center from the inner circle's center, over R.
  double x5_center_offset = 0.0;
  /// 1 - minor/major eigenvalue ratio of the fitted conic; 0 for a circle.
  double x5_eccentricity = 0.0;
};

/// Bicentric case (f = g, a = b): both conics are circles. Not applicable
/// otherwise.
ChappleReport chapple_check(const PonceletFamily& fam, std::size_t n = 720);

/// Max conic_residual of c over the points.
double max_residual(std::span<const Complex> points, const Conic& c);
/// max_residual against the least-squares conic of the same points.
double max_fit_residual(std::span<const Complex> points);

/// RMS distance to the centroid.
double cloud_scale(std::span<const Complex> points);

}  // namespace poncelet
