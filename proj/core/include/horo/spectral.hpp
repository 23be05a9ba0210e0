#pragma once

// Weyl dimensions d(k) of the degree-k spherical representations of S^n and the
// inversion operator 𝓛 realized as the circle-mode multiplier k ↦ d(k).

#include <cstdint>
#include <span>
#include <vector>

#include "horo/geometry.hpp"
#include "horo/tolerances.hpp"
#include "horo/transform.hpp"

namespace horo {

/// The linear form 1 + k·num/den.
struct LinearFactor {
  std::int64_t slope_num = 0;
  std::int64_t slope_den = 1;

  double operator()(double k) const {
    return 1.0 + k * static_cast<double>(slope_num) / static_cast<double>(slope_den);
  }
};

/// d(0..kmax) from the factored Weyl product
///   d(k) = (1 + 2k/(n-1)) · Π_{j=1}^{n-2} (1 + k/j),   n ≥ 2,
/// and d(k) = 2 - [k = 0] for the degenerate circle n = 1 (no factors).
class DimensionTable {
 public:
  DimensionTable(int n, int kmax);

  int n() const { return n_; }
  int kmax() const { return kmax_; }
  std::int64_t operator()(int k) const { return dims_.at(static_cast<std::size_t>(k)); }
  const std::vector<std::int64_t>& dims() const { return dims_; }
  const std::vector<LinearFactor>& factors() const { return factors_; }

  /// Π factors(k) in exact rational arithmetic; equals d(k) for n ≥ 2.
  std::int64_t factored_product(int k) const;

 private:
  int n_;
  int kmax_;
  std::vector<std::int64_t> dims_;
  std::vector<LinearFactor> factors_;
};

DimensionTable dimension_table(int n, int kmax);

/// (2k+n-1)·C(k+n-2, k)/(n-1) for n ≥ 2; 2 - [k=0] for n = 1.
std::int64_t dimension_closed_form(int n, int k);

/// The single-constant cone operator (1 + cD)^{n-1} with c = 2/(n-1), evaluated on
/// mode k (D acts on e^{ikθ} as multiplication by k). Equals d(k) for n = 2, 3 only.
double cone_operator_multiplier(int n, int k);

struct LOptions {
  /// Highest mode multiplied; -1 means the table's kmax.
  int kmax = -1;
  bool strict = true;
  Tolerances tol;
};

struct LResult {
  cdouble value;
  std::vector<cdouble> coefficients;  // DFT slots as returned by dft()
  double negative_mode_ratio = 0.0;   // Σ_{k<0}|c_k| / Σ|c_k|
  double out_of_band_ratio = 0.0;     // max_{kmax<k≤M/2}|c_k| / max|c_k|
  int kmax = 0;
};

/// (𝓛 f̂)(ζ) = Σ_{k=0}^{kmax} d(k) c_k where c_k are the circle Fourier coefficients
/// of θ ↦ f̂(e^{iθ}ζ). Strict mode throws kAliasingSuspected / kNegativeModeEnergy.
LResult apply_L(std::span<const cdouble> values, const DimensionTable& table,
                const LOptions& options = {});
inline LResult apply_L(const TransformSamples& samples, const DimensionTable& table,
                       const LOptions& options = {}) {
  return apply_L(samples.values, table, options);
}

}  // namespace horo
