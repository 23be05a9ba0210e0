// horo: command-line driver for the horospherical transform checks.
//
//   horo roundtrip --n 2 --kmax 8 --out report.json --csv points.csv
//   horo dims --n 5 --kmax 20
//
// Exit status: 0 all checks pass, 1 some check failed, 2 bad configuration.

#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "horo/error.hpp"
#include "horo/harness.hpp"

namespace {

struct Flags {
  std::optional<int> n, kmax, band, resolution, fiber_res, circle_res, grid, threads;
  std::optional<std::string> method, out, csv;
  std::optional<std::uint64_t> seed;
  std::string config;
  bool timing = false;
  bool quiet = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "sphere dimension");
  cmd->add_option("--kmax", f.kmax, "highest Fourier degree");
  cmd->add_option("--band", f.band, "band limit of the random corpus function (default kmax)");
  cmd->add_option("--resolution", f.resolution, "sphere quadrature resolution");
  cmd->add_option("--fiber-res", f.fiber_res, "fiber quadrature resolution");
  cmd->add_option("--circle-res", f.circle_res, "boundary circle sample count");
  cmd->add_option("--method", f.method, "spectral | abel | full-numerical")
      ->check(CLI::IsMember({"spectral", "abel", "full-numerical"}));
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--grid", f.grid, "evaluation grid size");
  cmd->add_option("--threads", f.threads, "worker threads");
  cmd->add_option("--config", f.config, "YAML run configuration");
  cmd->add_option("--out", f.out, "JSON report path");
  cmd->add_option("--csv", f.csv, "per-point CSV path (roundtrip)");
  cmd->add_flag("--timing", f.timing, "record wall time in the report");
  cmd->add_flag("--quiet", f.quiet, "only print the summary line");
}

horo::RunConfig build_config(const std::string& command, const Flags& f) {
  horo::RunConfig cfg;
  if (!f.config.empty()) cfg = horo::load_run_config(f.config, cfg);
  cfg.command = command;
  if (f.n) cfg.n = *f.n;
  if (f.kmax) cfg.kmax = *f.kmax;
  if (f.band) cfg.band = *f.band;
  if (f.resolution) cfg.sphere_resolution = *f.resolution;
  if (f.fiber_res) cfg.fiber_resolution = *f.fiber_res;
  if (f.circle_res) cfg.circle_resolution = *f.circle_res;
  if (f.method) cfg.method = *f.method;
  if (f.seed) cfg.seed = *f.seed;
  if (f.grid) cfg.grid_size = *f.grid;
  if (f.threads) cfg.threads = *f.threads;
  if (f.out) cfg.json_path = *f.out;
  if (f.csv) cfg.csv_path = *f.csv;
  if (f.timing) cfg.timing = true;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy-Radon transform on S^n: forward, inversion and consistency checks"};
  app.require_subcommand(1);
  Flags flags;
  for (const char* name : {"dims", "forward", "roundtrip", "zonal", "plancherel", "series"}) {
    add_flags(app.add_subcommand(name), flags);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const horo::Report report = horo::run_command(build_config(command, flags));
    if (!flags.quiet) {
      for (const std::string& d : report.diagnostics) std::cout << d << '\n';
      for (const horo::Check& c : report.checks) {
        std::printf("%s %-52s value=%.3e tol=%.1e\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value, c.tol);
      }
    }
    std::size_t failed = 0;
    for (const horo::Check& c : report.checks) failed += !c.pass;
    std::printf("%s: %zu checks, %zu failed\n", command.c_str(), report.checks.size(), failed);
    return report.passed() ? 0 : 1;
  } catch (const horo::Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", std::string(horo::to_string(e.code())).c_str(), e.what());
    return e.code() == horo::ErrorCode::kConfigError || e.code() == horo::ErrorCode::kUnsupportedDim ||
                   e.code() == horo::ErrorCode::kInvalidArgument
               ? 2
               : 1;
  }
}
