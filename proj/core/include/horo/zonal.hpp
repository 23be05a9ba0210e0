#pragma once

// Zonal spherical functions φ_k(y; x) of S^n: by averaging h^k over the boundary
// fiber Ξ(x), and by the classical normalized Gegenbauer/Chebyshev polynomial.

#include "horo/geometry.hpp"
#include "horo/quadrature.hpp"

namespace horo {

/// φ_k(y;x) = ∫_{Ξ(x)} (ζ·y)^k ν(dζ). Requires fiber_resolution ≥ 2k+2 for exactness.
double zonal_by_average(int n, int k, const SpherePoint& x, const SpherePoint& y,
                        int fiber_resolution);

/// Same, also returning the imaginary part of the average (zero by symmetry).
cdouble zonal_by_average_complex(int k, const FiberRule& fiber, std::span<const double> y);

/// C_k^{(n-1)/2}(t) / C_k^{(n-1)/2}(1) for n ≥ 2, cos(k arccos t) for n = 1,
/// by three-term recurrence.
double zonal_oracle(int n, int k, double t);

/// ∫ φ_k(y;x) φ_{k'}(y;x) ν(dy) with the fiber-average φ; expected δ_{kk'}/d(k).
double orthogonality_check(int n, int k, int k_prime, const QuadratureRule& rule,
                           const SpherePoint& x);

}  // namespace horo
