#pragma once

// The horospherical Cauchy–Radon transform on S^n,
//   f̂(ζ) = ∫ f(x) / (1 - ζ·x) ν(dx),   ζ ∈ Ξ₊,
// its Fourier components f̃(ζ;k) = ∫ f(x) (ζ·x)^k ν(dx) under the circle action
// ζ ↦ e^{iθ}ζ, and boundary values on ∂Ξ₊.

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "horo/geometry.hpp"
#include "horo/quadrature.hpp"
#include "horo/tolerances.hpp"

namespace horo {

using SphereFunction = std::function<double(std::span<const double>)>;

/// One term c·(ζ·x)^k of a band-limited function. Since ζ is isotropic the
/// polynomial (ζ·x)^k is harmonic, i.e. a degree-k spherical harmonic.
struct ConeTerm {
  int degree = 0;
  ConePoint zeta;
  cdouble coeff;
};

/// f(x) = Re Σ_m c_m (ζ_m·x)^{k_m}.
class BandLimitedFunction {
 public:
  BandLimitedFunction(int n, std::vector<ConeTerm> terms);

  /// f ≡ value.
  static BandLimitedFunction constant(int n, double value);
  /// f(x) = x_j (0-based index).
  static BandLimitedFunction coordinate(int n, int j);

  double operator()(std::span<const double> x) const;

  int n() const { return n_; }
  int band_limit() const;
  const std::vector<ConeTerm>& terms() const { return terms_; }

  /// Component of degree exactly k (a spherical harmonic).
  BandLimitedFunction degree_part(int k) const;
  BandLimitedFunction operator+(const BandLimitedFunction& other) const;
  /// x ↦ f(R x) for an orthogonal matrix R (row-major, (n+1)×(n+1)).
  BandLimitedFunction composed_with(std::span<const double> rotation) const;

  /// Closed-form f̃(ζ;k) by the reproducing identity for isotropic generators:
  /// ∫ (a·x)^k (b·x)^k ν(dx) = (a·b)^k k! / (2^k ((n+1)/2)_k).
  cdouble exact_component(const ConePoint& zeta, int k) const;

  SphereFunction as_function() const;

 private:
  int n_;
  std::vector<ConeTerm> terms_;
};

/// Values of f at the nodes of `rule`.
Vec sample(const SphereFunction& f, const QuadratureRule& rule);

struct ForwardResult {
  cdouble value;
  double sup_h = 0.0;
  bool near_singular = false;  // 1 - sup|h| below tol.near_singular
};

/// Quadrature approximation of f̂(ζ). Throws kNotInXiPlus unless Δ(ξ) < 1 - forward_margin.
ForwardResult forward(const SphereFunction& f, const ConePoint& zeta, const QuadratureRule& rule,
                      const Tolerances& tol = kDefaultTolerances);
/// Same, with f already sampled at the rule's nodes.
ForwardResult forward(std::span<const double> samples, const ConePoint& zeta,
                      const QuadratureRule& rule, const Tolerances& tol = kDefaultTolerances);

/// Standard-rule resolution heuristic 16 + 4/(1 - |ξ|), capped.
struct ResolutionAdvice {
  int resolution = 0;
  bool capped = false;
};
ResolutionAdvice recommended_resolution(const ConePoint& zeta, int cap = 512);

cdouble fourier_component(const SphereFunction& f, const ConePoint& zeta, int k,
                          const QuadratureRule& rule);
/// f̃(ζ;0..kmax) in one pass over pre-sampled values.
std::vector<cdouble> fourier_components(std::span<const double> samples, const ConePoint& zeta,
                                        int kmax, const QuadratureRule& rule);
/// Core kernel: Σ_i wf_i z_i^k for k = 0..kmax, where wf_i = w_i f(x_i) and z_i = ζ·x_i.
std::vector<cdouble> power_moments(std::span<const double> weighted_samples,
                                   std::span<const cdouble> dots, int kmax);

/// |f̂(ζ) - Σ_{k ≤ kmax} f̃(ζ;k)|.
double series_decomposition_check(const SphereFunction& f, const ConePoint& zeta, int kmax,
                                  const QuadratureRule& rule);

enum class BoundaryMethod { kSpectral, kAbel };
std::string_view to_string(BoundaryMethod m);

/// Abel regularization: f̂(rζ) at r_j = radii[j], Neville–Richardson in h = 1 - r to h = 0.
struct AbelOptions {
  Vec radii{0.90, 0.95, 0.975, 0.9875, 0.99375};
  /// Scales the node counts of the pole-adapted rule.
  double resolution_scale = 1.0;
};

struct RichardsonResult {
  cdouble value;
  double residual = 0.0;  // |T[J][J] - T[J][J-1]|
};
RichardsonResult richardson_to_zero(std::span<const double> steps, std::span<const cdouble> values);

/// Node counts (polar, transverse) of the pole-adapted rule for kernels at radius r.
std::pair<int, int> abel_rule_size(int n, double r, double resolution_scale);

struct TransformSamples {
  ConePoint base;
  CircleRule circle;
  std::vector<cdouble> values;  // f̂(e^{iθ_m} ζ)
  BoundaryMethod method = BoundaryMethod::kSpectral;
  double max_abel_residual = 0.0;
};

/// Spectral boundary values Σ_k f̃(ζ;k) e^{ikθ_m} from known components.
TransformSamples boundary_values_from_components(const ConePoint& zeta,
                                                 std::span<const cdouble> components, int count);

/// Spectral boundary values using `rule` to compute f̃(ζ;0..kmax).
TransformSamples boundary_values_spectral(std::span<const double> samples,
                                          const QuadratureRule& rule, const ConePoint& zeta,
                                          int kmax, int count,
                                          const Tolerances& tol = kDefaultTolerances);

/// Abel boundary values: kernel quadrature on pole-adapted rules at radii r < 1,
/// extrapolated to r = 1. Throws kAbelDivergence when the residual exceeds tol.abel_residual
/// (only if `strict`).
TransformSamples boundary_values_abel(const SphereFunction& f, const ConePoint& zeta, int count,
                                      const AbelOptions& options = {},
                                      const Tolerances& tol = kDefaultTolerances,
                                      bool strict = true);

/// Dispatcher. The spectral path builds sphere_rule(n, sphere_resolution) and uses kmax.
struct BoundaryOptions {
  int kmax = 8;
  int sphere_resolution = 64;
  AbelOptions abel;
  Tolerances tol;
  bool strict = true;
};
TransformSamples boundary_values(const SphereFunction& f, const ConePoint& zeta, int count,
                                 BoundaryMethod method, const BoundaryOptions& options = {});


/// Complex-orthogonal flow on the cone: ζ(w) = e^{αw} exp(wA) ζ with A = a bᵀ - b aᵀ
/// for orthonormal real a, b. Stays on the cone for every complex w.
ConePoint cone_flow(const ConePoint& zeta, std::span<const double> a, std::span<const double> b, cdouble alpha,
                    cdouble w);

/// Centered-difference Cauchy–Riemann residual of w ↦ f̂(ζ(w)) at w = 0:
/// |D_y - i D_x| / max(1, |D_x|).
double cauchy_riemann_residual(std::span<const double> samples, const QuadratureRule& rule, const ConePoint& zeta,
                               std::span<const double> a, std::span<const double> b, cdouble alpha, double step);

}  // namespace horo
