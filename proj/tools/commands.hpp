#pragma once

// The three CLI commands plus the writers they share. Every command returns a
// process exit code; errors escape as exceptions and are mapped by
// exit_code_for in main.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "poncelet/error.hpp"
#include "poncelet/locus.hpp"
#include "run_config.hpp"

namespace poncelet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitFamily = 3;
inline constexpr int kExitNumeric = 4;

/// 3 for family construction errors, 4 for every other library error.
int exit_code_for(const Error& e);

/// 17 significant digits, '.' separator, shortest of %g forms.
std::string format_number(double x);

/// Header plus one row per sample; skipped rows leave the inversive center
/// fields empty and set skipped=1.
void write_csv(const SweepResult& s, std::ostream& out);

std::string render_svg(const PonceletFamily& fam, const Circle& k, const SweepResult& s);

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::optional<double> residual;
  std::optional<double> tolerance;
  std::string note;
};

/// Every invariant suite on one configuration.
std::vector<Check> run_checks(const RunConfig& cfg);

std::string format_report(const RunConfig& cfg, const std::vector<Check>& checks);

/// Writes the CSV and locus summary (and the SVG when asked) into out_dir and
/// lists the written paths on out.
int cmd_sweep(const RunConfig& cfg, const std::filesystem::path& out_dir, bool svg,
              std::ostream& out);
/// Prints the report, writes it into out_dir; exit 0 iff no check failed.
int cmd_verify(const RunConfig& cfg, const std::filesystem::path& out_dir,
               std::ostream& out);
/// Prints `O=<kind> locus=<type> crossings=<n>`; exit 4 when the locus type
/// contradicts the classification.
int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace poncelet::cli
