#include "horo/zonal.hpp"

#include <algorithm>
#include <cmath>

#include "horo/error.hpp"
#include "horo/summation.hpp"

namespace horo {

cdouble zonal_by_average_complex(int k, const FiberRule& fiber, std::span<const double> y) {
  const FiberFrame& frame = fiber.frame();
  const double t = dot(frame.base.coords(), y);
  Vec projections(frame.basis.size());
  for (std::size_t j = 0; j < frame.basis.size(); ++j) projections[j] = dot(frame.basis[j], y);
  KahanSum<cdouble> acc;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const auto u = fiber.coefficients(i);
    double s = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * projections[j];
    const cdouble z{t, s};
    cdouble p{1.0, 0.0};
    for (int j = 0; j < k; ++j) p *= z;
    acc.add(fiber.weights()[i] * p);
  }
  return acc.value();
}

double zonal_by_average(int n, int k, const SpherePoint& x, const SpherePoint& y, int fiber_resolution) {
  if (x.n() != n || y.n() != n) throw Error(ErrorCode::kDimensionMismatch, "points are not on S^n");
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  const FiberRule fiber = fiber_rule(fiber_frame(x), fiber_resolution);
  return zonal_by_average_complex(k, fiber, y.coords()).real();
}

double zonal_oracle(int n, int k, double t) {
  if (n < 1 || k < 0) throw Error(ErrorCode::kInvalidArgument, "need n >= 1 and k >= 0");
  if (k == 0) return 1.0;
  if (n == 1) {
    double prev = 1.0, cur = t;
    for (int j = 1; j < k; ++j) {
      const double next = 2.0 * t * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  const double lambda = 0.5 * (n - 1);
  // (j+1) C_{j+1} = 2(j+λ) t C_j - (j+2λ-1) C_{j-1}, run at t and at 1.
  auto gegenbauer = [&](double s) {
    double prev = 1.0, cur = 2.0 * lambda * s;
    for (int j = 1; j < k; ++j) {
      const double next = (2.0 * (j + lambda) * s * cur - (j + 2.0 * lambda - 1.0) * prev) / (j + 1.0);
      prev = cur;
      cur = next;
    }
    return cur;
  };
  return gegenbauer(t) / gegenbauer(1.0);
}

double orthogonality_check(int n, int k, int k_prime, const QuadratureRule& rule, const SpherePoint& x) {
  if (static_cast<int>(rule.ambient_dim()) != n + 1 || x.n() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "rule and point must live on S^n");
  }
  const FiberRule fiber = fiber_rule(fiber_frame(x), std::max(4, 2 * std::max(k, k_prime) + 2));
  return rule.integrate([&](std::span<const double> y) {
    return zonal_by_average_complex(k, fiber, y).real() * zonal_by_average_complex(k_prime, fiber, y).real();
  });
}

}  // namespace horo
