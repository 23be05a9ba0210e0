#pragma once

// Run configuration, command implementations and machine-readable reports.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "horo/geometry.hpp"

namespace horo {

/// One explicit corpus term Re(c·(ζ·x)^k), ζ = re + i·im.
struct ExplicitTerm {
  int degree = 0;
  Vec re;
  Vec im;
  double coeff_re = 1.0;
  double coeff_im = 0.0;
};

/// Everything that determines a report. Negative resolutions mean "default for n".
struct RunConfig {
  std::string command = "roundtrip";
  int n = 2;
  int kmax = 8;
  int band = -1;  // corpus band limit, defaults to kmax
  int sphere_resolution = -1;
  int fiber_resolution = -1;
  int circle_resolution = -1;
  std::string method = "spectral";
  std::uint64_t seed = 1;
  int grid_size = 200;
  int terms_per_degree = 2;
  bool closed_form = true;
  std::vector<ExplicitTerm> terms;
  Vec abel_radii{0.90, 0.95, 0.975, 0.9875, 0.99375};
  double abel_scale = 1.0;
  std::map<std::string, double> tolerances;  // overrides, keyed by check family
  int threads = 1;
  bool timing = false;
  std::string json_path;
  std::string csv_path;

  /// Fills per-n defaults and validates; throws Error(kConfigError).
  RunConfig resolved() const;
  double tolerance(const std::string& key) const;
};

/// Reads a YAML config on top of `base`. Throws Error(kConfigError).
RunConfig load_run_config(const std::string& path, RunConfig base = {});

struct Check {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double tol = 0.0;
  bool pass = false;
};

Check check_below(std::string name, double value, double tol);
Check check_close(std::string name, double value, double reference, double tol);

struct Report {
  RunConfig config;
  std::vector<Check> checks;
  double timing_ms = 0.0;
  std::vector<std::string> diagnostics;  // human-readable, not part of the JSON
  std::string csv;                       // per-point table (roundtrip only)

  bool passed() const;
  std::string to_json() const;
};

Report cmd_dims(const RunConfig& config);
Report cmd_forward(const RunConfig& config);
Report cmd_roundtrip(const RunConfig& config);
Report cmd_zonal(const RunConfig& config);
Report cmd_plancherel(const RunConfig& config);
Report cmd_series(const RunConfig& config);

/// Dispatches on config.command, times the run if enabled, and writes
/// json_path / csv_path when set.
Report run_command(const RunConfig& config);

}  // namespace horo
