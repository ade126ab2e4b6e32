#pragma once

// Configuration-driven experiment runner behind the coherentlab CLI.
//
// Config files are line-oriented `key = value` text (a TOML subset): `#`
// starts a comment, `[section]` prefixes following keys with `section.`,
// values are numbers, booleans, quoted strings or `[a, b, ...]` lists.
// Unknown keys are rejected.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "coherentlab/lattice.hpp"

namespace coherentlab {

enum class Mode { Density, FrameScan, RieszScan, DpiEstimate, Verify, GramDump };

const char* to_string(Mode m);

struct ExperimentConfig {
  Mode mode = Mode::Density;
  std::string preset_kind = "triangle";
  std::vector<int> orders{2, 3, 7};
  int origin_vertex = 2;
  Complex z{0.0, 0.0};
  std::vector<double> alpha_grid{7.0, 13.0, 30.0};
  std::vector<int> word_lengths{8};
  double max_radius = 1e9;
  double dedup_tol = 1e-8;
  std::size_t max_elements = 200000;
  std::vector<int> truncations{40};
  int n_radial = 0;   // 0 selects 2N
  int n_angular = 0;  // 0 selects 4N
  double dpi_radius = 12.0;
  bool normalized = true;
  std::uint64_t twist_seed = 0;
  std::string output_path = "-";  // "-" is stdout
  std::string output_format = "csv";
  std::string orbit_csv;
  std::string ball_csv;
  int workers = 1;

  LatticePreset preset() const;
  /// Resolved key/value pairs, in a fixed order, for provenance echo.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

ExperimentConfig parse_config(const std::string& text);
/// Applies one `key=value` override; throws ValidationError for unknown keys.
void apply_override(ExperimentConfig& config, const std::string& assignment);
/// Throws ValidationError on empty grids, alpha <= 1, bad formats, etc.
void validate(const ExperimentConfig& config);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick property suite over the core modules at the configured preset.
std::vector<CheckResult> run_verification_suite(const ExperimentConfig& config);

/// Runs the configured mode. Exit codes: 0 success, 1 validation error,
/// 2 numerical failure, 3 property-suite failure. Errors are written to err
/// as one-line JSON objects.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace coherentlab
