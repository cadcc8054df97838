#pragma once

// JSON run configuration shared by the sweep, verify and classify commands.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "poncelet/family.hpp"
#include "poncelet/types.hpp"

namespace poncelet::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FociSpec {
  Complex f, g;
  double a = 0.0, b = 0.0;
};

struct InnerCircleSpec {
  double a = 0.0, b = 0.0;
  Complex center;
  double radius = 0.0;
};

struct InversionSpec {
  /// Empty when the center is "P3".
  std::optional<Complex> center;
  double radius = 1.0;

  bool at_p3() const { return !center.has_value(); }
};

struct OutputPaths {
  std::string csv = "sweep.csv";
  std::string svg = "sweep.svg";
  std::string report = "report.txt";
  std::string locus = "locus.json";
};

/// Check tolerances; every entry can be overridden under "tolerances".
struct Tolerances {
  double closed_form = 1e-9;
  double hypothesis = 1e-10;
  double conic_distance = 1e-8;
  double conic_residual = 1e-9;
  double collinearity = 1e-9;
  double pencil = 1e-9;
  double p3_power = 1e-9;
  double p5_power = 1e-8;
  double argzero = 1e-10;
  double tangency = 1e-7;
  double cloud_tangency = 1e-4;
  double homothety = 1e-7;
  double nonconic_low = 1e-9;
  double nonconic_high = 1e-4;
  double closure = 1e-8;
  double chapple_p3 = 1e-12;
  double chapple_x5 = 1e-9;
};

struct RunConfig {
  std::optional<FociSpec> foci;
  std::optional<InnerCircleSpec> inner_circle;
  InversionSpec inversion;
  std::size_t samples = 720;
  Tolerances tolerances;
  OutputPaths output;

  /// Builds the family; throws poncelet::Error for invalid families.
  PonceletFamily family() const;
  /// Resolves "P3" against the family.
  Circle inversion_circle(const PonceletFamily& fam) const;
};

/// Schema:
///   family:     {f, g, a, b} or {a, b, inner_circle_center, inner_circle_radius}
///   inversion:  {center: [re, im] | "P3", radius}
///   samples:    integer >= 64, default 720
///   tolerances: {name: value}, optional
///   output:     {csv, svg, report, locus}, file names relative to --out
/// Complex values are [re, im] arrays; a bare number is read as real.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Tolerance names accepted under "tolerances".
const std::map<std::string, double Tolerances::*>& tolerance_fields();

}  // namespace poncelet::cli
