#pragma once

namespace horo {

/// Every numeric threshold used for validation lives here so that modules agree.
struct Tolerances {
  double sphere_norm = 1e-12;        // |x| = 1 after construction
  double cone = 1e-10;               // |Δ(ξ)-Δ(η)|, |ξ·η| relative to |ζ|²
  double xi_plus_margin = 1e-9;      // in_xi_plus: Δ(ξ) < 1 - margin
  double fiber = 1e-10;              // η ⊥ x, |η| = 1
  double forward_margin = 1e-6;      // forward requires Δ(ξ) < 1 - margin
  double near_singular = 1e-3;       // warn when 1 - sup|h| falls below
  double boundary = 1e-8;            // |Δ(ξ) - 1| on ∂Ξ₊
  double abel_residual = 1e-4;       // extrapolation error estimate
  double aliasing = 1e-6;            // out-of-band modes / max mode
  double negative_mode = 1e-6;       // Σ_{k<0}|c_k| / Σ|c_k|
  double imaginary_residual = 1e-6;  // |Im| of a reconstructed real value
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace horo
