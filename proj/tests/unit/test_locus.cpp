#include <cmath>
#include <vector>

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "poncelet/error.hpp"
#include "poncelet/locus.hpp"
#include "poncelet/power.hpp"

using namespace poncelet;

TEST_CASE("sweep shape and skipping") {
  const PonceletFamily fam = fixture::reference_family();
  const Circle k = fixture::reference_circle();
  CHECK_THROWS_AS(sweep(fam, k, 63), Error);
  const SweepResult s = sweep(fam, k, 720);
  CHECK(s.size() == 720);
  CHECK(s.skipped.empty());
  CHECK(s.thetas[1] == doctest::Approx(kTwoPi / 720));
  CHECK(s.valid(&SweepResult::x3p).size() == 720);

  // inversion center on the first sampled circumcircle
  const Circle on = make_circle(world_triangle(fam, 0.0)[2], 0.5);
  const SweepResult t = sweep(fam, on, 64);
  REQUIRE(!t.skipped.empty());
  CHECK(t.skipped.front() == 0);
  CHECK(t.is_skipped(0));
  CHECK(std::isnan(t.x3p[0].real()));
  CHECK(is_finite(t.x3[0]));
  CHECK(t.valid(&SweepResult::x3p).size() == 64 - t.skipped.size());
}

TEST_CASE("sampled centers") {
  const PonceletFamily fam = fixture::reference_family();
  const Circle k = fixture::reference_circle();
  const SweepResult s = sweep(fam, k, 64);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Triangle t = world_triangle(fam, s.thetas[i]);
    Triangle tp;
    for (int v = 0; v < 3; ++v) tp[v] = oracle::invert(t[v], k.center, k.radius);
    const Complex x3 = oracle::circumcenter(t[0], t[1], t[2]);
    CHECK(std::abs(s.x3[i] - x3) < 1e-12);
    CHECK(std::abs(s.inv_x3[i] - oracle::invert(x3, k.center, k.radius)) < 1e-12);
    CHECK(std::abs(s.x2p[i] - (tp[0] + tp[1] + tp[2]) / 3.0) < 1e-12);
    CHECK(std::abs(s.x4p[i] - oracle::orthocenter(tp[0], tp[1], tp[2])) <
          1e-9 * std::max(1.0, std::abs(s.x4p[i])));
    CHECK(std::abs(s.x5p[i] - oracle::nine_point_center(tp[0], tp[1], tp[2])) <
          1e-9 * std::max(1.0, std::abs(s.x5p[i])));
    CHECK(s.power_at_o[i] ==
          doctest::Approx(oracle::power(k.center, x3, std::abs(t[0] - x3))).epsilon(1e-10));
  }
}

TEST_CASE("classification of the inversion center") {
  const PonceletFamily fam = fixture::reference_family();
  const OLocation in = classify_O(fam, make_circle(fixture::kInterior, 0.7));
  CHECK(in.kind == OLocationKind::Interior);
  CHECK(in.crossing_count == 6);
  CHECK(in.lambda_crossings == 2);
  const OLocation out = classify_O(fam, make_circle(fixture::kExterior, 0.7));
  CHECK(out.kind == OLocationKind::Exterior);
  CHECK(out.crossing_count == 0);
  CHECK_FALSE(out.inside_all_circumcircles);
  const OLocation hole = classify_O(fam, make_circle(fixture::kHole, 0.7));
  CHECK(hole.kind == OLocationKind::Exterior);
  CHECK(hole.inside_all_circumcircles);

  // a finer grid does not change the answer
  for (Complex o : {fixture::kInterior, fixture::kExterior, fixture::kHole, Complex{1.9, 0.2}}) {
    const Circle k = make_circle(o, 0.7);
    const OLocation a = classify_O(fam, k, 4096);
    const OLocation b = classify_O(fam, k, 16384);
    CHECK(a.kind == b.kind);
    CHECK(a.crossing_count == b.crossing_count);
  }
  CHECK(to_string(OLocationKind::Boundary) == "Boundary");
}

TEST_CASE("conic type follows the classification") {
  const PonceletFamily fam = fixture::reference_family();
  const ConicTypeReport in = verify_conic_type(fam, make_circle(fixture::kInterior, 0.7));
  CHECK(in.locus_type == ConicType::Hyperbola);
  CHECK(in.consistent);
  const ConicTypeReport out = verify_conic_type(fam, make_circle(fixture::kExterior, 0.7));
  CHECK(out.locus_type == ConicType::Ellipse);
  CHECK(out.consistent);
  const ConicTypeReport hole = verify_conic_type(fam, make_circle(fixture::kHole, 0.7));
  CHECK(hole.locus_type == ConicType::Ellipse);
  CHECK(hole.consistent);

  const Circle b = find_boundary_inversion(fam, fixture::kExterior, fixture::kInterior, 0.7);
  const ConicTypeReport on = verify_conic_type(fam, b);
  CHECK(on.location.kind == OLocationKind::Boundary);
  CHECK(on.location.crossing_count == 3);
  CHECK(on.locus_type == ConicType::Parabola);
  CHECK(on.consistent);

  CHECK(expected_locus_type(OLocationKind::Exterior) == ConicType::Ellipse);
  CHECK(expected_locus_type(OLocationKind::Interior) == ConicType::Hyperbola);
  CHECK(expected_locus_type(OLocationKind::Boundary) == ConicType::Parabola);
  CHECK_THROWS_AS(find_boundary_inversion(fam, fixture::kExterior, {3.5, 0}, 0.7), Error);
}

TEST_CASE("tangents from O to the circumcenter locus also touch the inversive locus") {
  const PonceletFamily fam = fixture::reference_family();
  const SimilitudeReport r = similitude_check(fam, fixture::reference_circle());
  REQUIRE_FALSE(r.skipped);
  REQUIRE(r.tangents.size() == 2);
  const Conic l3p = inversive_locus_conic(fam, fixture::reference_circle());
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(r.inversive_residuals[i] < 1e-7);
    CHECK(is_tangent(l3p, r.tangents[i], 1e-7));
    CHECK(r.cloud_distances[i] < 1e-4);
    CHECK(r.one_sided[i]);
  }
  // O at the center of the circumcenter locus: no real tangents
  const Complex center = quadratic_shape(circumcenter_locus_conic(fam)).center;
  const SimilitudeReport inside = similitude_check(fam, make_circle(center, 0.7));
  CHECK(inside.skipped);
  CHECK(inside.tangents.empty());
}

TEST_CASE("inverting about P3 gives a homothetic locus") {
  const PonceletFamily fam = fixture::reference_family();
  for (double radius : {0.7, 1.0, 2.5}) {
    const HomothetyReport r = homothety_check(fam, radius);
    REQUIRE_FALSE(r.skipped);
    CHECK(r.type_x3 == r.type_x3p);
    CHECK(r.axis_angle_diff < 1e-7);
    CHECK(r.eigen_ratio_diff < 1e-7);
    CHECK(r.ratio_residual < 1e-7);
  }
  const PonceletFamily circle = PonceletFamily::from_foci({0.3, 0}, {0.1, 0.2}, 1.0, 1.0);
  CHECK(homothety_check(circle).skipped);
}

TEST_CASE("only the circumcenter of the inversive triangle stays on a conic") {
  const PonceletFamily fam = fixture::reference_family();
  const SweepResult s = sweep(fam, fixture::reference_circle(), 720);
  const NonconicReport r = nonconic_evidence(s);
  CHECK_FALSE(r.degenerate);
  CHECK(r.x3p_residual < 1e-9);
  CHECK(r.x2p_residual > 1e-4);
  CHECK(r.x4p_residual > 1e-4);
  CHECK(r.x5p_residual > 1e-4);
  CHECK(r.evidence);
  CHECK(max_fit_residual(s.x3) < 1e-9);

  const PonceletFamily concentric = PonceletFamily::from_foci(0.0, 0.0, 1.0, 1.0);
  CHECK(nonconic_evidence(sweep(concentric, make_circle({3, 0}, 1), 128)).degenerate);
}

TEST_CASE("bicentric family") {
  for (Complex f : {Complex{0.3, 0.2}, Complex{-0.4, 0.0}}) {
    const ChappleReport r = chapple_check(PonceletFamily::from_foci(f, f, 1.0, 1.0));
    REQUIRE(r.applicable);
    CHECK(r.p3_formula_residual < 1e-12);
    CHECK(r.x56_residual < 1e-12);
    CHECK(r.x5_fit_residual < 1e-9);
    CHECK(r.x5_center_offset < 1e-9);
    CHECK(r.x5_eccentricity < 1e-9);
  }
  CHECK_FALSE(chapple_check(fixture::reference_family()).applicable);
}

TEST_CASE("cloud helpers") {
  std::vector<Complex> circle;
  for (int i = 0; i < 100; ++i) circle.push_back(2.0 + 3.0 * std::polar(1.0, kTwoPi * i / 100));
  CHECK(cloud_scale(circle) == doctest::Approx(3.0));
  CHECK(max_fit_residual(circle) < 1e-13);
  CHECK(max_residual(circle, Conic::from_coefficients({1, 0, 1, -4, 0, 4 - 9})) < 1e-13);
}
