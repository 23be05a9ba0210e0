#pragma once

// Reconstruction f(x) = ∫_{Ξ(x)} (𝓛 f̂)(ζ) ν(dζ) from boundary values of f̂, the
// Plancherel-form series Σ_k d(k) ∫_{Ξ(x)} f̃(ζ;k) ν(dζ), and round-trip reports.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "horo/geometry.hpp"
#include "horo/quadrature.hpp"
#include "horo/spectral.hpp"
#include "horo/tolerances.hpp"
#include "horo/transform.hpp"

namespace horo {

enum class InversionMethod { kSpectral, kAbel, kFullNumerical };
std::string_view to_string(InversionMethod m);
InversionMethod parse_inversion_method(std::string_view name);

struct InversionParams {
  int sphere_resolution = 64;
  int fiber_resolution = 256;
  int circle_resolution = 32;
  int kmax = 8;
  InversionMethod method = InversionMethod::kSpectral;
  AbelOptions abel;
  Tolerances tol;
  /// Throw on aliasing / negative modes / imaginary residual instead of reporting.
  bool strict = true;
  int threads = 1;
};

struct PointResult {
  double value = 0.0;
  double imag_residual = 0.0;
  double negative_mode_ratio = 0.0;
  double out_of_band_ratio = 0.0;
  double abel_residual = 0.0;
};

/// Holds the rules and tables shared by all evaluations for one sphere dimension.
class InversionEngine {
 public:
  InversionEngine(int n, InversionParams params);

  int n() const { return n_; }
  const InversionParams& params() const { return params_; }
  const QuadratureRule& sphere() const { return sphere_; }
  const DimensionTable& table() const { return table_; }

  /// Operator-form inversion at x through boundary values, 𝓛 and the fiber integral.
  PointResult invert_at(const SphereFunction& f, const SpherePoint& x) const;
  /// Spectral path with f already sampled on sphere().
  PointResult invert_at_sampled(std::span<const double> samples, const SpherePoint& x) const;

  /// Σ_{k ≤ kmax} d(k)·(fiber average of f̃(·;k)).
  double invert_plancherel(const SphereFunction& f, const SpherePoint& x) const;
  double invert_plancherel_sampled(std::span<const double> samples, const SpherePoint& x) const;

  /// Fiber averages of f̃(ζ;0..kmax) over Ξ(x).
  std::vector<cdouble> fiber_averaged_components(std::span<const double> samples,
                                                 const SpherePoint& x) const;

 private:
  PointResult finish(cdouble total, PointResult diag) const;

  int n_;
  InversionParams params_;
  QuadratureRule sphere_;
  DimensionTable table_;
  DimensionTable wide_table_;  // all resolvable circle modes, for full-numerical
};

PointResult invert_at(const SphereFunction& f, const SpherePoint& x, const InversionParams& params);
double invert_plancherel(const SphereFunction& f, const SpherePoint& x, int kmax,
                         const InversionParams& params);

/// |∫_{Ξ(x)} f̃(ζ;k) ν(dζ) - ∫ f(y) φ_k(x·y) ν(dy)|, the right side with the Gegenbauer oracle.
double zonal_projection_identity_check(const SphereFunction& f, const SpherePoint& x, int k,
                                       const InversionParams& params);

struct ReconstructionReport {
  std::vector<SpherePoint> grid;
  Vec truth;
  Vec reconstructed;
  Vec imag_residual;
  double max_abs_error = 0.0;
  double l2_error = 0.0;  // root mean square over the grid
  double max_imag_residual = 0.0;
  double max_negative_mode_ratio = 0.0;
  double max_out_of_band_ratio = 0.0;
  double max_abel_residual = 0.0;
  InversionParams params;
};

ReconstructionReport roundtrip(const SphereFunction& f, const std::vector<SpherePoint>& grid,
                               const InversionEngine& engine);

}  // namespace horo
