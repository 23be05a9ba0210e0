#pragma once

// Points of the sphere S^n ⊂ R^{n+1}, the isotropic cone Ξ = {ζ ∈ C^{n+1} : ζ·ζ = 0, ζ ≠ 0}
// of horosphere parameters, the domain Ξ₊ and the boundary fibers Ξ(x).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "horo/tolerances.hpp"

namespace horo {

using Vec = std::vector<double>;
using cdouble = std::complex<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

/// A unit vector in R^{n+1}. Construction renormalizes.
class SpherePoint {
 public:
  explicit SpherePoint(Vec coords);

  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t j) const { return coords_[j]; }
  std::size_t ambient_dim() const { return coords_.size(); }
  int n() const { return static_cast<int>(coords_.size()) - 1; }

 private:
  Vec coords_;
};

/// ζ = ξ + iη with Δ(ξ) = Δ(η) and ξ·η = 0.
class ConePoint {
 public:
  std::span<const double> re() const { return re_; }
  std::span<const double> im() const { return im_; }
  cdouble operator[](std::size_t j) const { return {re_[j], im_[j]}; }
  std::size_t ambient_dim() const { return re_.size(); }
  int n() const { return static_cast<int>(re_.size()) - 1; }

  /// Δ(ξ) = ξ·ξ; the cone point lies in Ξ₊ iff this is < 1.
  double delta_re() const { return dot(re_, re_); }
  /// Δ(ζ) = ζ·ζ (bilinear); zero up to rounding.
  cdouble delta() const;
  /// |ζ|² = |ξ|² + |η|².
  double norm_sq() const { return dot(re_, re_) + dot(im_, im_); }
  /// sup over x ∈ S^n of |ζ·x|, which equals |ξ| on the cone.
  double sup_h() const;

  std::vector<cdouble> components() const;

 private:
  friend ConePoint make_cone_point(Vec, Vec, const Tolerances&);
  friend ConePoint make_cone_point_unchecked(Vec, Vec);
  ConePoint(Vec re, Vec im) : re_(std::move(re)), im_(std::move(im)) {}

  Vec re_;
  Vec im_;
};

/// Validating constructor. Throws kZeroVector, kInvalidCone, kDimensionMismatch.
ConePoint make_cone_point(Vec xi, Vec eta, const Tolerances& tol = kDefaultTolerances);
/// Builds a cone point from a complex vector, validating as above.
ConePoint make_cone_point(std::span<const cdouble> zeta, const Tolerances& tol = kDefaultTolerances);
/// For callers that produce cone points by exact cone-preserving operations.
ConePoint make_cone_point_unchecked(Vec xi, Vec eta);

/// h(x, ζ) = ζ·x. The horosphere Ω(ζ) is the section {z : ζ·z = 1}.
cdouble h(std::span<const double> x, const ConePoint& zeta);
inline cdouble h(const SpherePoint& x, const ConePoint& zeta) { return h(x.coords(), zeta); }

bool in_xi_plus(const ConePoint& zeta, double margin = kDefaultTolerances.xi_plus_margin);

/// True when Δ(ξ) = 1 within `tol`, i.e. ζ ∈ ∂Ξ₊.
bool on_boundary(const ConePoint& zeta, double tol = kDefaultTolerances.boundary);

/// ζ = x + iη ∈ Ξ(x). Throws kNotInFiber unless η ⊥ x and |η| = 1.
ConePoint fiber_point(const SpherePoint& x, std::span<const double> eta,
                      const Tolerances& tol = kDefaultTolerances);

/// Orthonormal basis of x^⊥ obtained from the Householder reflection taking e_1 to x.
struct FiberFrame {
  SpherePoint base;
  std::vector<Vec> basis;  // n vectors of length n+1

  /// η = Σ_j u_j basis_j for u ∈ S^{n-1}.
  Vec direction(std::span<const double> u) const;
  ConePoint point(std::span<const double> u) const;
};

FiberFrame fiber_frame(const SpherePoint& x);

/// ζ ↦ aζ, the right action of A_C ≅ C^*. Throws kZeroScale for a = 0.
ConePoint scale_act(const ConePoint& zeta, cdouble a);

}  // namespace horo
