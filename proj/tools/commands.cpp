#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "poncelet/power.hpp"

namespace poncelet::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json conic_json(const Conic& c) {
  json arr = json::array();
  for (double x : c.coeffs()) arr.push_back(x);
  return arr;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ConfigError("cannot write " + path.string());
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw ConfigError("cannot create output directory " + dir.string());
  }
}

// ---- verification helpers ----

Check threshold(std::string name, double residual, double tol, std::string note = {}) {
  Check c{std::move(name), CheckStatus::Fail, residual, tol, std::move(note)};
  if (std::isfinite(residual) && residual <= tol) c.status = CheckStatus::Pass;
  return c;
}

Check skip(std::string name, std::string note) {
  return {std::move(name), CheckStatus::Skip, std::nullopt, std::nullopt, std::move(note)};
}

bool is_degeneracy(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMap:
    case ErrorKind::DegenerateConic:
    case ErrorKind::DegenerateDenominator:
    case ErrorKind::NoRealTangents:
    case ErrorKind::DegenerateConfiguration:
      return true;
    default:
      return false;
  }
}

// Runs one suite; a geometric degeneracy turns its checks into SKIP, any
// other library error into FAIL.
void guarded(std::vector<Check>& out, const std::vector<std::string>& names,
             const std::function<void(std::vector<Check>&)>& suite) {
  try {
    std::vector<Check> local;
    suite(local);
    out.insert(out.end(), local.begin(), local.end());
  } catch (const Error& e) {
    const std::string note = std::string(poncelet::to_string(e.kind())) + ": " + e.what();
    for (const auto& name : names) {
      if (is_degeneracy(e.kind())) {
        out.push_back(skip(name, note));
      } else {
        out.push_back({name, CheckStatus::Fail, std::nullopt, std::nullopt, note});
      }
    }
  }
}

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  for (double x : xs) m.stddev += (x - m.mean) * (x - m.mean);
  m.stddev = std::sqrt(m.stddev / static_cast<double>(xs.size()));
  return m;
}

std::string describe(Complex z) {
  return "[" + format_number(z.real()) + ", " + format_number(z.imag()) + "]";
}

// ---- SVG helpers ----

struct View {
  double half_w, half_h;

  bool contains(Complex z, double factor) const {
    return std::abs(z.real()) <= factor * half_w && std::abs(z.imag()) <= factor * half_h;
  }
};

std::string svg_point(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g,%.6g", z.real(), -z.imag());
  return buf;
}

// Polylines split wherever a point is missing, far outside the view, or the
// curve jumps (hyperbola branches cross infinity between samples).
std::string svg_curve(const std::vector<Complex>& pts, const View& view,
                      const std::string& style, bool closed) {
  const double jump = 0.5 * std::max(view.half_w, view.half_h);
  std::vector<std::vector<Complex>> runs(1);
  auto usable = [&](Complex z) { return is_finite(z) && view.contains(z, 4.0); };
  for (Complex z : pts) {
    if (!usable(z) || (!runs.back().empty() && std::abs(z - runs.back().back()) > jump)) {
      if (!runs.back().empty()) runs.emplace_back();
      if (!usable(z)) continue;
    }
    runs.back().push_back(z);
  }
  const bool wrap = closed && runs.size() == 1 && runs[0].size() == pts.size();
  std::string out;
  for (const auto& run : runs) {
    if (run.size() < 2) continue;
    out += wrap ? "  <polygon" : "  <polyline";
    out += " fill=\"none\" " + style + " points=\"";
    for (std::size_t i = 0; i < run.size(); ++i) {
      if (i) out += ' ';
      out += svg_point(run[i]);
    }
    out += "\"/>\n";
  }
  return out;
}

std::string svg_marker(Complex z, double size, const std::string& color,
                       const std::string& label, double font) {
  const Complex dx{size, 0.0}, dy{0.0, size};
  std::string out;
  out += "  <path stroke=\"" + color + "\" stroke-width=\"" + format_number(size / 4) +
         "\" d=\"M" + svg_point(z - dx - dy) + " L" + svg_point(z + dx + dy) + " M" +
         svg_point(z - dx + dy) + " L" + svg_point(z + dx - dy) + "\"/>\n";
  out += "  <text x=\"" + format_number(z.real() + 1.5 * size) + "\" y=\"" +
         format_number(-z.imag() - 1.5 * size) + "\" font-size=\"" + format_number(font) +
         "\" fill=\"" + color + "\">" + label + "</text>\n";
  return out;
}

}  // namespace

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidFamily:
    case ErrorKind::NotNested:
    case ErrorKind::CayleyViolation:
      return kExitFamily;
    default:
      return kExitNumeric;
  }
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const SweepResult& s, std::ostream& out) {
  out << "theta,x3_re,x3_im,x3p_re,x3p_im,invx3_re,invx3_im,x2p_re,x2p_im,"
         "x4p_re,x4p_im,x5p_re,x5p_im,power_O,skipped\n";
  auto field = [&](Complex z, bool empty) {
    if (empty) {
      out << ",,";
    } else {
      out << ',' << format_number(z.real()) << ',' << format_number(z.imag());
    }
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool skipped = s.is_skipped(i);
    out << format_number(s.thetas[i]);
    field(s.x3[i], false);
    field(s.x3p[i], skipped);
    field(s.inv_x3[i], skipped);
    field(s.x2p[i], skipped);
    field(s.x4p[i], skipped);
    field(s.x5p[i], skipped);
    out << ',' << format_number(s.power_at_o[i]) << ',' << (skipped ? 1 : 0) << '\n';
  }
}

std::string render_svg(const PonceletFamily& fam, const Circle& k, const SweepResult& s) {
  const View view{1.6 * fam.a(), 1.6 * fam.b()};
  const double stroke = 0.003 * view.half_w;
  const double font = 0.035 * view.half_w;
  constexpr int kCurve = 1024;

  std::vector<Complex> outer, inner, circle_k, exact;
  const EllipseGeom geom = inner_ellipse(fam);
  const Complex mid = 0.5 * (geom.focus1 + geom.focus2);
  const double semi_major = 0.5 * geom.major_axis_length;
  const double semi_focal = 0.5 * std::abs(geom.focus2 - geom.focus1);
  const double semi_minor = std::sqrt(semi_major * semi_major - semi_focal * semi_focal);
  const Complex dir = semi_focal > 0.0 ? (geom.focus2 - geom.focus1) / (2.0 * semi_focal)
                                       : Complex{1.0, 0.0};
  std::optional<ProjectiveMap> locus_map;
  try {
    locus_map = projective_map_of_locus(inversive_coeffs(fam, k)).world_map();
  } catch (const Error&) {
    // degenerate locus; the sampled points are still drawn
  }
  for (int i = 0; i < kCurve; ++i) {
    const double t = kTwoPi * i / kCurve;
    const Complex u = std::polar(1.0, t);
    outer.push_back(fam.to_world(u));
    inner.push_back(fam.to_world(mid + dir * Complex{semi_major * u.real(),
                                                     semi_minor * u.imag()}));
    circle_k.push_back(k.center + k.radius * u);
    if (locus_map) exact.push_back(locus_map->apply(u));
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << format_number(-view.half_w) << ' ' << format_number(-view.half_h) << ' '
      << format_number(2 * view.half_w) << ' ' << format_number(2 * view.half_h)
      << "\" width=\"960\" height=\"" << static_cast<int>(960 * view.half_h / view.half_w)
      << "\">\n";
  svg << "  <rect x=\"" << format_number(-view.half_w) << "\" y=\""
      << format_number(-view.half_h) << "\" width=\"" << format_number(2 * view.half_w)
      << "\" height=\"" << format_number(2 * view.half_h) << "\" fill=\"white\"/>\n";
  const std::string sw = " stroke-width=\"" + format_number(stroke) + "\"";
  svg << svg_curve(outer, view, "stroke=\"black\"" + sw, true);
  svg << svg_curve(inner, view, "stroke=\"#555555\"" + sw, true);
  svg << svg_curve(circle_k, view,
                   "stroke=\"#1f5fbf\" stroke-dasharray=\"" + format_number(4 * stroke) +
                       "\"" + sw,
                   true);

  struct Layer {
    const std::vector<Complex> SweepResult::*list;
    const char* color;
    const char* label;
  };
  const Layer layers[] = {
      {&SweepResult::x3, "#2a9d3a", "X3"},      {&SweepResult::x3p, "#d62728", "X3'"},
      {&SweepResult::inv_x3, "#ff7f0e", "inv(X3)"}, {&SweepResult::x2p, "#7b3fa0", "X2'"},
      {&SweepResult::x4p, "#8c564b", "X4'"},    {&SweepResult::x5p, "#17a2b8", "X5'"},
  };
  for (const Layer& layer : layers) {
    svg << svg_curve(s.*(layer.list), view,
                     std::string("stroke=\"") + layer.color + "\" stroke-width=\"" +
                         format_number(stroke * 0.8) + "\" stroke-opacity=\"0.8\"",
                     true);
  }
  if (locus_map) {
    svg << svg_curve(exact, view,
                     "stroke=\"#d62728\" stroke-dasharray=\"" + format_number(2 * stroke) +
                         "\"" + sw,
                     true);
  }
  svg << svg_marker(p3_point(fam).point, 4 * stroke, "black", "P3", font);
  try {
    svg << svg_marker(p5_point(fam).point, 4 * stroke, "#444444", "P5", font);
  } catch (const Error&) {
    // P5 undefined for this family
  }
  double y = view.half_h - font;
  for (const Layer& layer : layers) {
    svg << "  <text x=\"" << format_number(-view.half_w + font) << "\" y=\""
        << format_number(-y) << "\" font-size=\"" << format_number(font) << "\" fill=\""
        << layer.color << "\">" << layer.label << "</text>\n";
    y -= 1.2 * font;
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

std::vector<Check> run_checks(const RunConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  const PonceletFamily fam = cfg.family();
  const Circle k = cfg.inversion_circle(fam);
  const SweepResult s = sweep(fam, k, cfg.samples);
  const double scale = fam.scale();
  const std::size_t n = s.size();

  std::vector<Check> out;

  guarded(out, {"closed_form_identity"}, [&](std::vector<Check>& c) {
    const InversiveCoefficients coeffs = inversive_coeffs(fam, k);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.is_skipped(i)) continue;
      const Complex closed = inversive_circumcenter_closed(coeffs, s.thetas[i]);
      worst = std::max(worst, std::abs(closed - s.x3p[i]) /
                                  std::max(std::abs(s.x3p[i]), scale));
    }
    c.push_back(threshold("closed_form_identity", worst, tol.closed_form));
  });

  guarded(out, {"hypothesis_conjugate", "hypothesis_real"}, [&](std::vector<Check>& c) {
    const HypothesisResiduals h = inversive_hypothesis_residuals(fam, k);
    c.push_back(threshold("hypothesis_conjugate", h.conjugacy, tol.hypothesis));
    c.push_back(threshold("hypothesis_real", h.realness, tol.hypothesis));
  });

  guarded(out, {"exact_vs_fitted_conic", "exact_conic_residual"},
          [&](std::vector<Check>& c) {
            const Conic exact = inversive_locus_conic(fam, k);
            const std::vector<Complex> pts = s.valid(&SweepResult::x3p);
            if (cloud_scale(pts) < 1e-9 * scale) {
              throw Error(ErrorKind::DegenerateConic, "X3' locus collapses to a point");
            }
            const Conic fit = conic_fit(pts);
            c.push_back(threshold("exact_vs_fitted_conic", canonical_distance(exact, fit),
                                  tol.conic_distance,
                                  std::string(to_string(conic_classify(exact)))));
            // relative to max(scale, |z|): near-boundary samples run far out
            double worst = 0.0;
            for (Complex z : pts) {
              worst = std::max(worst,
                               conic_residual(exact, z) / std::max(scale, std::abs(z)));
            }
            c.push_back(threshold("exact_conic_residual", worst, tol.conic_residual));
          });

  guarded(out, {"conic_type"}, [&](std::vector<Check>& c) {
    const ConicTypeReport r = verify_conic_type(fam, k);
    Check check{"conic_type", r.consistent ? CheckStatus::Pass : CheckStatus::Fail,
                r.location.nearest_extremum, std::nullopt,
                "O=" + std::string(to_string(r.location.kind)) +
                    " locus=" + std::string(to_string(r.locus_type)) +
                    " expected=" + std::string(to_string(r.expected)) +
                    " crossings=" + std::to_string(r.location.crossing_count)};
    c.push_back(check);
  });

  guarded(out, {"collinearity", "inversion_ratio", "pencil"}, [&](std::vector<Check>& c) {
    double col = 0.0, ratio = 0.0, pencil = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.is_skipped(i)) continue;
      const Triangle t = world_triangle(fam, s.thetas[i]);
      const Circle circ = circumcircle(t);
      const Circle circ_p = circumcircle(inversive_triangle(t, k));
      const CollinearityResiduals r = collinearity_and_ratio(s.x3[i], k.center, s.x3p[i],
                                                             circ, k);
      col = std::max(col, r.collinearity);
      ratio = std::max(ratio, r.ratio);
      pencil = std::max(pencil, pencil_membership(circ, k, circ_p));
    }
    c.push_back(threshold("collinearity", col, tol.collinearity));
    c.push_back(threshold("inversion_ratio", ratio, tol.collinearity));
    c.push_back(threshold("pencil", pencil, tol.pencil));
  });

  guarded(out, {"p3_power_constant", "p3_power_value"}, [&](std::vector<Check>& c) {
    const PowerPointResult p3 = p3_point(fam);
    std::vector<double> powers;
    for (std::size_t i = 0; i < n; ++i) {
      powers.push_back(power(p3.point, circumcircle(world_triangle(fam, s.thetas[i]))));
    }
    const Moments m = moments(powers);
    c.push_back(threshold("p3_power_constant", m.stddev / std::abs(m.mean), tol.p3_power,
                          "P3=" + describe(p3.point)));
    c.push_back(threshold("p3_power_value",
                          std::abs(m.mean - p3.invariant_power) / std::abs(p3.invariant_power),
                          tol.p3_power, "Pi3=" + format_number(p3.invariant_power)));
  });

  guarded(out, {"p5_power_constant", "p5_power_value"}, [&](std::vector<Check>& c) {
    const PowerPointResult p5 = p5_point(fam);
    std::vector<double> powers;
    for (std::size_t i = 0; i < n; ++i) {
      powers.push_back(power(p5.point, euler_circle(world_triangle(fam, s.thetas[i]))));
    }
    const Moments m = moments(powers);
    c.push_back(threshold("p5_power_constant", m.stddev / std::abs(m.mean), tol.p5_power,
                          "P5=" + describe(p5.point)));
    c.push_back(threshold("p5_power_value",
                          std::abs(m.mean - p5.invariant_power) / std::abs(p5.invariant_power),
                          tol.p5_power, "Pi5=" + format_number(p5.invariant_power)));
  });

  guarded(out, {"p3_interiority"}, [&](std::vector<Check>& c) {
    const double margin = p3_interiority_margin(fam);
    const double closed = p3_interiority_margin_closed(fam);
    Check check{"p3_interiority", CheckStatus::Fail, margin, std::nullopt,
                "margin must be > 0; closed-form margin " + format_number(closed)};
    if (margin > 0.0 && closed > 0.0) check.status = CheckStatus::Pass;
    c.push_back(check);
  });

  guarded(out, {"p3_argzero_m1", "p3_argzero_m3"}, [&](std::vector<Check>& c) {
    const PowerPointResult p3 = p3_point(fam);
    const Pi3Affine m = pi3_affine_in_lambda(fam, p3.point);
    c.push_back(threshold("p3_argzero_m1", std::abs(m.m1) / (scale * scale), tol.argzero));
    c.push_back(threshold("p3_argzero_m3",
                          std::abs(m.m3 - p3.invariant_power) / std::abs(p3.invariant_power),
                          tol.argzero));
  });

  guarded(out, {"similitude_tangency", "similitude_cloud"}, [&](std::vector<Check>& c) {
    const SimilitudeReport r = similitude_check(fam, k, cfg.samples);
    if (r.skipped) {
      c.push_back(skip("similitude_tangency", r.note));
      c.push_back(skip("similitude_cloud", r.note));
      return;
    }
    double dual = 0.0, cloud = 0.0;
    bool one_sided = true;
    for (double x : r.inversive_residuals) dual = std::max(dual, x);
    for (double x : r.cloud_distances) cloud = std::max(cloud, x);
    for (bool b : r.one_sided) one_sided = one_sided && b;
    c.push_back(threshold("similitude_tangency", dual, tol.tangency,
                          std::to_string(r.tangents.size()) + " tangents"));
    Check soft = threshold("similitude_cloud", cloud, tol.cloud_tangency,
                           one_sided ? "one-sided" : "curve crosses a tangent");
    if (!one_sided) soft.status = CheckStatus::Fail;
    c.push_back(soft);
  });

  const std::vector<std::string> homothety_names = {"homothety_axis_angle",
                                                    "homothety_eigen_ratio",
                                                    "homothety_ratio"};
  if (!cfg.inversion.at_p3()) {
    for (const auto& name : homothety_names) {
      out.push_back(skip(name, "needs inversion center \"P3\""));
    }
  } else {
    guarded(out, homothety_names, [&](std::vector<Check>& c) {
      const HomothetyReport r = homothety_check(fam, cfg.inversion.radius);
      if (r.skipped) {
        for (const auto& name : homothety_names) c.push_back(skip(name, r.note));
        return;
      }
      c.push_back(threshold("homothety_axis_angle", r.axis_angle_diff, tol.homothety,
                            r.note));
      c.push_back(threshold("homothety_eigen_ratio", r.eigen_ratio_diff, tol.homothety));
      c.push_back(threshold("homothety_ratio", r.ratio_residual, tol.homothety,
                            "measured " + format_number(r.measured_ratio) + " expected " +
                                format_number(r.expected_ratio)));
    });
  }

  guarded(out, {"nonconic_evidence"}, [&](std::vector<Check>& c) {
    const NonconicReport r = nonconic_evidence(s);
    if (r.degenerate) {
      c.push_back(skip("nonconic_evidence", r.note));
      return;
    }
    const double others = std::min({r.x2p_residual, r.x4p_residual, r.x5p_residual});
    const std::string note = "report-only; X3' " + format_number(r.x3p_residual) +
                             " X2' " + format_number(r.x2p_residual) + " X4' " +
                             format_number(r.x4p_residual) + " X5' " +
                             format_number(r.x5p_residual);
    const bool evidence =
        r.x3p_residual < tol.nonconic_low && others > tol.nonconic_high;
    c.push_back({"nonconic_evidence", evidence ? CheckStatus::Pass : CheckStatus::Skip,
                 others, tol.nonconic_high,
                 evidence ? note : "no evidence (" + note + ")"});
  });

  guarded(out, {"poncelet_closure"}, [&](std::vector<Check>& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, side_tangency_residual(fam, world_triangle(fam, s.thetas[i])));
    }
    c.push_back(threshold("poncelet_closure", worst, tol.closure));
  });

  guarded(out, {"chapple_p3_formula", "chapple_p3_x56", "chapple_x5_circle"},
          [&](std::vector<Check>& c) {
            const ChappleReport r = chapple_check(fam, cfg.samples);
            if (!r.applicable) {
              c.push_back(skip("chapple_p3_formula", r.note));
              c.push_back(skip("chapple_p3_x56", r.note));
              c.push_back(skip("chapple_x5_circle", r.note));
              return;
            }
            c.push_back(threshold("chapple_p3_formula", r.p3_formula_residual,
                                  tol.chapple_p3));
            c.push_back(threshold("chapple_p3_x56", r.x56_residual, tol.chapple_p3));
            const double circle = std::max(
                {r.x5_fit_residual, r.x5_center_offset, r.x5_eccentricity});
            c.push_back(threshold("chapple_x5_circle", circle, tol.chapple_x5,
                                  r.note.empty() ? "fit, center offset and eccentricity"
                                                 : r.note));
          });

  return out;
}

std::string format_report(const RunConfig& cfg, const std::vector<Check>& checks) {
  const PonceletFamily fam = cfg.family();
  const Circle k = cfg.inversion_circle(fam);
  std::ostringstream out;
  out << "# poncelet verification report\n";
  out << "family f=" << describe(fam.f()) << " g=" << describe(fam.g())
      << " a=" << format_number(fam.a()) << " b=" << format_number(fam.b()) << '\n';
  out << "inversion center=" << describe(k.center) << " radius=" << format_number(k.radius)
      << (cfg.inversion.at_p3() ? " (P3)" : "") << '\n';
  out << "samples=" << cfg.samples << '\n';
  int pass = 0, fail = 0, skipped = 0;
  for (const Check& c : checks) {
    char name[32];
    std::snprintf(name, sizeof name, "%-24s", c.name.c_str());
    out << name << ' ' << to_string(c.status)
        << " residual=" << (c.residual ? format_number(*c.residual) : "-")
        << " tol=" << (c.tolerance ? format_number(*c.tolerance) : "-");
    if (!c.note.empty()) out << " # " << c.note;
    out << '\n';
    (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : skipped)++;
  }
  out << "summary pass=" << pass << " fail=" << fail << " skip=" << skipped << '\n';
  return out.str();
}

int cmd_sweep(const RunConfig& cfg, const fs::path& out_dir, bool svg, std::ostream& out) {
  const PonceletFamily fam = cfg.family();
  const Circle k = cfg.inversion_circle(fam);
  const SweepResult s = sweep(fam, k, cfg.samples);

  json locus;
  locus["family"] = {{"f", complex_json(fam.f())},
                     {"g", complex_json(fam.g())},
                     {"a", fam.a()},
                     {"b", fam.b()}};
  locus["inversion"] = {{"center", complex_json(k.center)}, {"radius", k.radius}};
  locus["samples"] = s.size();
  locus["skipped"] = s.skipped.size();
  const Conic exact = inversive_locus_conic(fam, k);
  locus["x3p_conic"] = conic_json(exact);
  locus["x3p_conic_type"] = std::string(to_string(conic_classify(exact)));
  const std::vector<Complex> pts = s.valid(&SweepResult::x3p);
  locus["x3p_fit_distance"] = canonical_distance(exact, conic_fit(pts));
  try {
    locus["x3_conic"] = conic_json(circumcenter_locus_conic(fam));
  } catch (const Error&) {
    locus["x3_conic"] = nullptr;  // circumcenter fixed
  }
  const PowerPointResult p3 = p3_point(fam);
  locus["p3"] = complex_json(p3.point);
  locus["pi3"] = p3.invariant_power;
  try {
    const PowerPointResult p5 = p5_point(fam);
    locus["p5"] = complex_json(p5.point);
    locus["pi5"] = p5.invariant_power;
  } catch (const Error&) {
    locus["p5"] = nullptr;
    locus["pi5"] = nullptr;
  }
  const OLocation where = classify_O(fam, k);
  locus["o_location"] = std::string(to_string(where.kind));
  locus["crossings"] = where.crossing_count;

  std::ostringstream csv;
  write_csv(s, csv);
  const std::string svg_text = svg ? render_svg(fam, k, s) : std::string();

  // all writes at the end, after every computation succeeded
  prepare_dir(out_dir);
  const fs::path csv_path = out_dir / cfg.output.csv;
  const fs::path locus_path = out_dir / cfg.output.locus;
  write_file(csv_path, csv.str());
  write_file(locus_path, locus.dump(2) + "\n");
  out << csv_path.string() << '\n' << locus_path.string() << '\n';
  if (svg) {
    const fs::path svg_path = out_dir / cfg.output.svg;
    write_file(svg_path, svg_text);
    out << svg_path.string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const fs::path& out_dir, std::ostream& out) {
  const std::vector<Check> checks = run_checks(cfg);
  const std::string report = format_report(cfg, checks);
  prepare_dir(out_dir);
  write_file(out_dir / cfg.output.report, report);
  out << report;
  const bool failed = std::any_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::Fail;
  });
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PonceletFamily fam = cfg.family();
  const Circle k = cfg.inversion_circle(fam);
  ConicTypeReport r;
  try {
    r = verify_conic_type(fam, k);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMap) throw;
    // the X3' locus collapses to a point (fixed circumcircle)
    r.location = classify_O(fam, k);
    out << "O=" << to_string(r.location.kind) << " locus=" << to_string(ConicType::Degenerate)
        << " crossings=" << r.location.crossing_count << '\n';
    err << "poncelet: " << e.what() << "; the X3' locus is a single point\n";
    return kExitOk;
  }
  out << "O=" << to_string(r.location.kind) << " locus=" << to_string(r.locus_type)
      << " crossings=" << r.location.crossing_count << '\n';
  if (!r.consistent) {
    err << "poncelet: locus type " << to_string(r.locus_type) << " disagrees with expected "
        << to_string(r.expected) << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace poncelet::cli
