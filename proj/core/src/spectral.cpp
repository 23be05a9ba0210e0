#include "horo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "horo/error.hpp"
#include "horo/quadrature.hpp"
#include "horo/summation.hpp"

namespace horo {

__extension__ typedef __int128 Wide;

DimensionTable::DimensionTable(int n, int kmax) : n_(n), kmax_(kmax) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "sphere dimension must be >= 1");
  if (kmax < 0) throw Error(ErrorCode::kInvalidArgument, "kmax must be >= 0");
  if (n >= 2) {
    // Root α with multiplicity n-1: ⟨ρ,α⟩ contributes (n-1)/2 and the long factor
    // 1 + 2k/(n-1); the remaining positive roots give 1 + k/j.
    factors_.push_back({2, n - 1});
    for (int j = 1; j <= n - 2; ++j) factors_.push_back({1, j});
  }
  dims_.reserve(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    dims_.push_back(n == 1 ? (k == 0 ? 1 : 2) : factored_product(k));
  }
}

std::int64_t DimensionTable::factored_product(int k) const {
  if (n_ == 1) return k == 0 ? 1 : 2;
  Wide num = 1, den = 1;
  for (const LinearFactor& f : factors_) {
    num *= static_cast<Wide>(f.slope_den) + static_cast<Wide>(k) * f.slope_num;
    den *= f.slope_den;
    Wide a = num, b = den;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    num /= a;
    den /= a;
  }
  if (den != 1) {
    throw Error(ErrorCode::kInvalidArgument, "Weyl product is not an integer at k = " + std::to_string(k));
  }
  return static_cast<std::int64_t>(num);
}

DimensionTable dimension_table(int n, int kmax) { return DimensionTable(n, kmax); }

std::int64_t dimension_closed_form(int n, int k) {
  if (n < 1 || k < 0) throw Error(ErrorCode::kInvalidArgument, "need n >= 1 and k >= 0");
  if (n == 1) return k == 0 ? 1 : 2;
  // C(k+n-2, k), built incrementally so every intermediate is an integer.
  Wide binom = 1;
  for (int i = 1; i <= k; ++i) binom = binom * (n - 2 + i) / i;
  return static_cast<std::int64_t>((2 * static_cast<Wide>(k) + n - 1) * binom / (n - 1));
}

double cone_operator_multiplier(int n, int k) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "the cone operator form needs n >= 2");
  const double c = 2.0 / (n - 1);
  return std::pow(1.0 + c * k, n - 1);
}

LResult apply_L(std::span<const cdouble> values, const DimensionTable& table, const LOptions& options) {
  const int kmax = options.kmax < 0 ? table.kmax() : options.kmax;
  const std::size_t count = values.size();
  if (kmax > table.kmax()) throw Error(ErrorCode::kInvalidArgument, "kmax exceeds the dimension table");
  if (count < 2 * static_cast<std::size_t>(kmax) + 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least 2*kmax+2 circle samples, got " + std::to_string(count));
  }
  LResult result;
  result.kmax = kmax;
  result.coefficients = dft(values);
  const auto& c = result.coefficients;

  KahanSum<cdouble> acc;
  for (int k = 0; k <= kmax; ++k) acc.add(static_cast<double>(table(k)) * c[k]);
  result.value = acc.value();

  double total = 0.0, negative = 0.0, peak = 0.0, out_of_band = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    const double a = std::abs(c[j]);
    const int mode = dft_mode(j, count);
    total += a;
    peak = std::max(peak, a);
    if (mode < 0) negative += a;
    if (mode > kmax) out_of_band = std::max(out_of_band, a);
  }
  result.negative_mode_ratio = total > 0.0 ? negative / total : 0.0;
  result.out_of_band_ratio = peak > 0.0 ? out_of_band / peak : 0.0;

  if (options.strict) {
    if (result.out_of_band_ratio > options.tol.aliasing) {
      throw Error(ErrorCode::kAliasingSuspected,
                  "circle modes above kmax = " + std::to_string(kmax) + " carry relative weight " +
                      std::to_string(result.out_of_band_ratio));
    }
    if (result.negative_mode_ratio > options.tol.negative_mode) {
      throw Error(ErrorCode::kNegativeModeEnergy,
                  "negative circle modes carry relative weight " + std::to_string(result.negative_mode_ratio));
    }
  }
  return result;
}

}  // namespace horo
