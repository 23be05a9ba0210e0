#pragma once

// Probability-normalized quadrature on S^n (n = 1, 2, 3), on boundary fibers
// Ξ(x) ≅ S^{n-1}, and on the circle of the A_I action.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "horo/geometry.hpp"
#include "horo/summation.hpp"

namespace horo {

/// Nodes on a sphere (flat row-major storage) with positive weights summing to 1.
class QuadratureRule {
 public:
  QuadratureRule(std::size_t ambient_dim, Vec nodes, Vec weights);

  std::size_t size() const { return weights_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  std::span<const double> node(std::size_t i) const {
    return {nodes_.data() + i * dim_, dim_};
  }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  /// Σ w_i f(x_i) with compensated summation in node order.
  template <typename F>
  auto integrate(F&& f) const {
    using R = decltype(f(node(0)));
    KahanSum<R> acc;
    for (std::size_t i = 0; i < size(); ++i) acc.add(weights_[i] * f(node(i)));
    return acc.value();
  }

 private:
  std::size_t dim_;
  Vec nodes_;
  Vec weights_;
};

/// Gauss–Legendre nodes and weights on [-1, 1] (weights sum to 2).
struct GaussRule {
  Vec nodes;
  Vec weights;
};
GaussRule gauss_legendre(int count);

/// Product rule on S^n.
///   n = 1: `resolution` equally spaced angles.
///   n = 2: Gauss–Legendre(resolution) in x_3 × 2·resolution azimuths.
///   n = 3: Gauss–Gegenbauer(resolution) in x_4 × the n = 2 rule.
/// Harmonics of degree ≤ resolution − 2 integrate exactly. Throws kUnsupportedDim.
QuadratureRule sphere_rule(int n, int resolution);

/// Rule concentrated around `axis`: Gauss–Legendre in the angle θ from the axis,
/// uniform (n = 2), sphere (n = 3) or two-point (n = 1) in the transverse
/// directions. Used for kernels with a near-singularity at the axis.
/// For n = 3 a `secondary` direction (orthogonal to axis) switches the transverse
/// sphere to Gauss–Legendre in the angle from it × `azimuth_res` uniform turns.
QuadratureRule pole_adapted_rule(const SpherePoint& axis, int polar_nodes, int transverse_res,
                                 std::span<const double> secondary = {}, int azimuth_res = 0);

/// Quadrature on the boundary fiber Ξ(x): directions η_i ⊥ x with weights.
class FiberRule {
 public:
  FiberRule(FiberFrame frame, std::vector<Vec> coefficients, Vec weights);

  std::size_t size() const { return weights_.size(); }
  const FiberFrame& frame() const { return frame_; }
  /// Coordinates u_i ∈ S^{n-1} of node i in the frame basis.
  std::span<const double> coefficients(std::size_t i) const { return coefficients_[i]; }
  /// η_i = Σ_j u_ij basis_j.
  Vec direction(std::size_t i) const { return frame_.direction(coefficients_[i]); }
  ConePoint point(std::size_t i) const { return frame_.point(coefficients_[i]); }
  std::span<const double> weights() const { return weights_; }

 private:
  FiberFrame frame_;
  std::vector<Vec> coefficients_;
  Vec weights_;
};

/// n = 1: the two points ±b_1 (weight 1/2); n = 2: `resolution` uniform angles;
/// n = 3: sphere_rule(2, resolution).
FiberRule fiber_rule(const FiberFrame& frame, int resolution);

/// Uniform angles θ_m = 2πm/M, weight 1/M.
struct CircleRule {
  Vec angles;
  double weight = 0.0;

  std::size_t size() const { return angles.size(); }
};
CircleRule circle_rule(int count);

/// c_k = (1/M) Σ_m v_m e^{-ikθ_m} for k = 0..M-1 (index M-j is mode -j).
std::vector<cdouble> dft(std::span<const cdouble> samples);

/// Mode index of DFT slot j for length M: j for j <= M/2, j - M otherwise.
inline int dft_mode(std::size_t j, std::size_t count) {
  const auto half = count / 2;
  return j <= half ? static_cast<int>(j) : static_cast<int>(j) - static_cast<int>(count);
}

}  // namespace horo
