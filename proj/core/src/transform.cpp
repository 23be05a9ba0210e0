#include "horo/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "horo/error.hpp"
#include "horo/summation.hpp"

namespace horo {
namespace {

cdouble bilinear(const ConePoint& a, const ConePoint& b) {
  cdouble s{0.0, 0.0};
  for (std::size_t j = 0; j < a.ambient_dim(); ++j) s += a[j] * b[j];
  return s;
}

cdouble ipow(cdouble z, int k) {
  cdouble p{1.0, 0.0};
  for (int j = 0; j < k; ++j) p *= z;
  return p;
}

void check_dims(const ConePoint& zeta, const QuadratureRule& rule) {
  if (zeta.ambient_dim() != rule.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "cone point and quadrature rule live in different dimensions");
  }
}

std::vector<cdouble> dots_with(const ConePoint& zeta, const QuadratureRule& rule) {
  std::vector<cdouble> dots(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto x = rule.node(i);
    dots[i] = {dot(zeta.re(), x), dot(zeta.im(), x)};
  }
  return dots;
}

// Block of terms summed plainly before the compensated accumulation.
constexpr std::size_t kBlock = 64;
constexpr double kAbelAzimuths = 16.0;

}  // namespace

BandLimitedFunction::BandLimitedFunction(int n, std::vector<ConeTerm> terms) : n_(n), terms_(std::move(terms)) {
  for (const ConeTerm& t : terms_) {
    if (t.zeta.n() != n_) throw Error(ErrorCode::kDimensionMismatch, "term lives on a different sphere");
    if (t.degree < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree");
  }
}

BandLimitedFunction BandLimitedFunction::constant(int n, double value) {
  Vec re(n + 1, 0.0), im(n + 1, 0.0);
  re[0] = 1.0;
  im[1] = 1.0;
  return {n, {ConeTerm{0, make_cone_point_unchecked(re, im), {value, 0.0}}}};
}

BandLimitedFunction BandLimitedFunction::coordinate(int n, int j) {
  if (j < 0 || j > n) throw Error(ErrorCode::kInvalidArgument, "coordinate index out of range");
  Vec re(n + 1, 0.0), im(n + 1, 0.0);
  re[j] = 1.0;
  im[(j + 1) % (n + 1)] = 1.0;
  return {n, {ConeTerm{1, make_cone_point_unchecked(re, im), {1.0, 0.0}}}};
}

double BandLimitedFunction::operator()(std::span<const double> x) const {
  double s = 0.0;
  for (const ConeTerm& t : terms_) {
    const cdouble z{dot(t.zeta.re(), x), dot(t.zeta.im(), x)};
    s += (t.coeff * ipow(z, t.degree)).real();
  }
  return s;
}

int BandLimitedFunction::band_limit() const {
  int k = 0;
  for (const ConeTerm& t : terms_) k = std::max(k, t.degree);
  return k;
}

BandLimitedFunction BandLimitedFunction::degree_part(int k) const {
  std::vector<ConeTerm> out;
  for (const ConeTerm& t : terms_) {
    if (t.degree == k) out.push_back(t);
  }
  return {n_, std::move(out)};
}

BandLimitedFunction BandLimitedFunction::operator+(const BandLimitedFunction& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::kDimensionMismatch, "cannot add functions on different spheres");
  std::vector<ConeTerm> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return {n_, std::move(out)};
}

BandLimitedFunction BandLimitedFunction::composed_with(std::span<const double> rotation) const {
  const std::size_t dim = static_cast<std::size_t>(n_) + 1;
  if (rotation.size() != dim * dim) throw Error(ErrorCode::kDimensionMismatch, "rotation has the wrong size");
  std::vector<ConeTerm> out;
  out.reserve(terms_.size());
  // ζ·(R x) = (Rᵀζ)·x
  for (const ConeTerm& t : terms_) {
    Vec re(dim, 0.0), im(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        re[j] += rotation[i * dim + j] * t.zeta.re()[i];
        im[j] += rotation[i * dim + j] * t.zeta.im()[i];
      }
    }
    out.push_back(ConeTerm{t.degree, make_cone_point_unchecked(std::move(re), std::move(im)), t.coeff});
  }
  return {n_, std::move(out)};
}

cdouble BandLimitedFunction::exact_component(const ConePoint& zeta, int k) const {
  double reproducing = 1.0;  // k! / (2^k ((n+1)/2)_k)
  for (int j = 0; j < k; ++j) reproducing *= (j + 1.0) / (n_ + 1.0 + 2.0 * j);
  cdouble s{0.0, 0.0};
  for (const ConeTerm& t : terms_) {
    if (t.degree != k) continue;
    Vec conj_im(t.zeta.im().begin(), t.zeta.im().end());
    for (double& v : conj_im) v = -v;
    const ConePoint conj = make_cone_point_unchecked(Vec(t.zeta.re().begin(), t.zeta.re().end()), conj_im);
    s += 0.5 * (t.coeff * ipow(bilinear(t.zeta, zeta), k) + std::conj(t.coeff) * ipow(bilinear(conj, zeta), k));
  }
  return reproducing * s;
}

SphereFunction BandLimitedFunction::as_function() const {
  return [f = *this](std::span<const double> x) { return f(x); };
}

Vec sample(const SphereFunction& f, const QuadratureRule& rule) {
  Vec values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) values[i] = f(rule.node(i));
  return values;
}

ForwardResult forward(const SphereFunction& f, const ConePoint& zeta, const QuadratureRule& rule,
                      const Tolerances& tol) {
  check_dims(zeta, rule);
  return forward(sample(f, rule), zeta, rule, tol);
}

ForwardResult forward(std::span<const double> samples, const ConePoint& zeta, const QuadratureRule& rule,
                      const Tolerances& tol) {
  check_dims(zeta, rule);
  if (samples.size() != rule.size()) throw Error(ErrorCode::kDimensionMismatch, "samples do not match rule");
  if (!in_xi_plus(zeta, tol.forward_margin)) {
    throw Error(ErrorCode::kNotInXiPlus,
                "Delta(xi) = " + std::to_string(zeta.delta_re()) + " is not below 1 - margin");
  }
  KahanSum<cdouble> acc;
  const auto w = rule.weights();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto x = rule.node(i);
    const cdouble z{dot(zeta.re(), x), dot(zeta.im(), x)};
    acc.add(w[i] * samples[i] / (1.0 - z));
  }
  ForwardResult result;
  result.value = acc.value();
  result.sup_h = zeta.sup_h();
  result.near_singular = 1.0 - result.sup_h < tol.near_singular;
  return result;
}

ResolutionAdvice recommended_resolution(const ConePoint& zeta, int cap) {
  const double gap = 1.0 - std::sqrt(zeta.delta_re());
  ResolutionAdvice advice;
  const double want = gap > 0.0 ? 16.0 + 4.0 / gap : static_cast<double>(cap) + 1.0;
  advice.capped = want > cap;
  advice.resolution = advice.capped ? cap : static_cast<int>(std::ceil(want));
  return advice;
}

std::vector<cdouble> power_moments(std::span<const double> weighted_samples, std::span<const cdouble> dots,
                                   int kmax) {
  const std::size_t count = weighted_samples.size();
  const std::size_t terms = static_cast<std::size_t>(kmax) + 1;
  std::vector<KahanSum<cdouble>> acc(terms);
  // Split real/imaginary lanes: std::complex multiplication carries NaN/Inf
  // recovery that blocks vectorization.
  alignas(64) double pr[kBlock], pi[kBlock], zr[kBlock], zi[kBlock];
  for (std::size_t start = 0; start < count; start += kBlock) {
    const std::size_t len = std::min(count - start, kBlock);
    for (std::size_t i = 0; i < len; ++i) {
      pr[i] = weighted_samples[start + i];
      pi[i] = 0.0;
      zr[i] = dots[start + i].real();
      zi[i] = dots[start + i].imag();
    }
    for (std::size_t k = 0; k < terms; ++k) {
      double sr = 0.0, si = 0.0;
#pragma omp simd reduction(+ : sr, si)
      for (std::size_t i = 0; i < len; ++i) {
        sr += pr[i];
        si += pi[i];
        const double r = pr[i] * zr[i] - pi[i] * zi[i];
        pi[i] = pr[i] * zi[i] + pi[i] * zr[i];
        pr[i] = r;
      }
      acc[k].add({sr, si});
    }
  }
  std::vector<cdouble> out(terms);
  for (std::size_t k = 0; k < terms; ++k) out[k] = acc[k].value();
  return out;
}

std::vector<cdouble> fourier_components(std::span<const double> samples, const ConePoint& zeta, int kmax,
                                        const QuadratureRule& rule) {
  check_dims(zeta, rule);
  if (kmax < 0) throw Error(ErrorCode::kInvalidArgument, "kmax must be >= 0");
  if (samples.size() != rule.size()) throw Error(ErrorCode::kDimensionMismatch, "samples do not match rule");
  Vec weighted(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) weighted[i] = rule.weights()[i] * samples[i];
  return power_moments(weighted, dots_with(zeta, rule), kmax);
}

cdouble fourier_component(const SphereFunction& f, const ConePoint& zeta, int k, const QuadratureRule& rule) {
  check_dims(zeta, rule);
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  return rule.integrate([&](std::span<const double> x) {
    return f(x) * ipow({dot(zeta.re(), x), dot(zeta.im(), x)}, k);
  });
}

double series_decomposition_check(const SphereFunction& f, const ConePoint& zeta, int kmax,
                                  const QuadratureRule& rule) {
  const Vec samples = sample(f, rule);
  const cdouble total = forward(samples, zeta, rule).value;
  const auto components = fourier_components(samples, zeta, kmax, rule);
  KahanSum<cdouble> partial;
  for (const cdouble& c : components) partial.add(c);
  return std::abs(total - partial.value());
}

std::string_view to_string(BoundaryMethod m) {
  return m == BoundaryMethod::kSpectral ? "spectral" : "abel";
}

RichardsonResult richardson_to_zero(std::span<const double> steps, std::span<const cdouble> values) {
  const std::size_t count = steps.size();
  if (count < 2 || values.size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "extrapolation needs >= 2 matching steps and values");
  }
  // Neville tableau for the interpolating polynomial in h evaluated at h = 0.
  std::vector<std::vector<cdouble>> t(count);
  for (std::size_t i = 0; i < count; ++i) {
    t[i].resize(i + 1);
    t[i][0] = values[i];
    for (std::size_t j = 1; j <= i; ++j) {
      const double hi = steps[i], hl = steps[i - j];
      t[i][j] = (hi * t[i - 1][j - 1] - hl * t[i][j - 1]) / (hi - hl);
    }
  }
  const auto& last = t[count - 1];
  return {last[count - 1], std::abs(last[count - 1] - last[count - 2])};
}

std::pair<int, int> abel_rule_size(int n, double r, double resolution_scale) {
  const double inv = 1.0 / std::sqrt(std::max(1e-12, 1.0 - r));
  const int polar = static_cast<int>(std::ceil(resolution_scale * (12.0 + 10.0 * inv)));
  const int transverse = n == 1 ? 2 : static_cast<int>(std::ceil(resolution_scale * (16.0 + 20.0 * inv)));
  return {polar, transverse};
}

TransformSamples boundary_values_from_components(const ConePoint& zeta, std::span<const cdouble> components,
                                                 int count) {
  const CircleRule circle = circle_rule(count);
  std::vector<cdouble> twiddle(count);
  for (int m = 0; m < count; ++m) twiddle[m] = std::polar(1.0, circle.angles[m]);
  std::vector<cdouble> values(count);
  for (int m = 0; m < count; ++m) {
    KahanSum<cdouble> acc;
    for (std::size_t k = 0; k < components.size(); ++k) {
      acc.add(components[k] * twiddle[(k * static_cast<std::size_t>(m)) % count]);
    }
    values[m] = acc.value();
  }
  return {zeta, circle, std::move(values), BoundaryMethod::kSpectral, 0.0};
}

TransformSamples boundary_values_spectral(std::span<const double> samples, const QuadratureRule& rule,
                                          const ConePoint& zeta, int kmax, int count, const Tolerances& tol) {
  if (!on_boundary(zeta, tol.boundary)) {
    throw Error(ErrorCode::kNotOnBoundary, "Delta(xi) = " + std::to_string(zeta.delta_re()) + " != 1");
  }
  return boundary_values_from_components(zeta, fourier_components(samples, zeta, kmax, rule), count);
}

TransformSamples boundary_values_abel(const SphereFunction& f, const ConePoint& zeta, int count,
                                      const AbelOptions& options, const Tolerances& tol, bool strict) {
  if (!on_boundary(zeta, tol.boundary)) {
    throw Error(ErrorCode::kNotOnBoundary, "Delta(xi) = " + std::to_string(zeta.delta_re()) + " != 1");
  }
  const std::size_t radii = options.radii.size();
  Vec steps(radii);
  double r_max = 0.0;
  for (std::size_t j = 0; j < radii; ++j) {
    const double r = options.radii[j];
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::kInvalidArgument, "Abel radii must lie in (0, 1)");
    steps[j] = 1.0 - r;
    r_max = std::max(r_max, r);
  }
  const int n = zeta.n();
  const auto [polar, transverse] = abel_rule_size(n, r_max, options.resolution_scale);
  const CircleRule circle = circle_rule(count);

  TransformSamples out{zeta, circle, std::vector<cdouble>(count), BoundaryMethod::kAbel, 0.0};
  std::vector<cdouble> at_radius(radii);
  for (int m = 0; m < count; ++m) {
    const ConePoint rotated = scale_act(zeta, std::polar(1.0, circle.angles[m]));
    // The near-singular point of 1/(1 - rζ·x) on S^n is x = ξ/|ξ| for every r.
    const SpherePoint axis(Vec(rotated.re().begin(), rotated.re().end()));
    // On S^3 the kernel varies sharply only with the angle from η inside the transverse sphere.
    const QuadratureRule rule =
        n == 3 ? pole_adapted_rule(axis, polar, transverse, rotated.im(),
                                   static_cast<int>(std::ceil(options.resolution_scale * kAbelAzimuths)))
               : pole_adapted_rule(axis, polar, transverse);
    const auto dots = dots_with(rotated, rule);
    const auto w = rule.weights();
    Vec weighted(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) weighted[i] = w[i] * f(rule.node(i));
    for (std::size_t j = 0; j < radii; ++j) {
      const double r = options.radii[j];
      KahanSum<cdouble> acc;
      for (std::size_t start = 0; start < rule.size(); start += kBlock) {
        double sr = 0.0, si = 0.0;
        const std::size_t stop = std::min(rule.size(), start + kBlock);
        for (std::size_t i = start; i < stop; ++i) {
          const double a = 1.0 - r * dots[i].real(), b = -r * dots[i].imag();
          const double scale = weighted[i] / (a * a + b * b);
          sr += a * scale;
          si -= b * scale;
        }
        acc.add({sr, si});
      }
      at_radius[j] = acc.value();
    }
    const RichardsonResult extrapolated = richardson_to_zero(steps, at_radius);
    out.values[m] = extrapolated.value;
    out.max_abel_residual = std::max(out.max_abel_residual, extrapolated.residual);
  }
  if (strict && out.max_abel_residual > tol.abel_residual) {
    throw Error(ErrorCode::kAbelDivergence,
                "extrapolation residual " + std::to_string(out.max_abel_residual) + " exceeds tolerance");
  }
  return out;
}

TransformSamples boundary_values(const SphereFunction& f, const ConePoint& zeta, int count, BoundaryMethod method,
                                 const BoundaryOptions& options) {
  if (method == BoundaryMethod::kAbel) {
    return boundary_values_abel(f, zeta, count, options.abel, options.tol, options.strict);
  }
  const QuadratureRule rule = sphere_rule(zeta.n(), options.sphere_resolution);
  return boundary_values_spectral(sample(f, rule), rule, zeta, options.kmax, count, options.tol);
}


ConePoint cone_flow(const ConePoint& zeta, std::span<const double> a, std::span<const double> b, cdouble alpha,
                    cdouble w) {
  const std::size_t dim = zeta.ambient_dim();
  if (a.size() != dim || b.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "flow plane has wrong size");
  const auto z = zeta.components();
  // A z = a (b·z) - b (a·z);  A² z = A(A z).
  auto apply_a = [&](const std::vector<cdouble>& v) {
    cdouble bv{0.0, 0.0}, av{0.0, 0.0};
    for (std::size_t j = 0; j < dim; ++j) {
      bv += b[j] * v[j];
      av += a[j] * v[j];
    }
    std::vector<cdouble> out(dim);
    for (std::size_t j = 0; j < dim; ++j) out[j] = a[j] * bv - b[j] * av;
    return out;
  };
  const auto az = apply_a(z);
  const auto aaz = apply_a(az);
  const cdouble s = std::sin(w), c = 1.0 - std::cos(w), scale = std::exp(alpha * w);
  std::vector<cdouble> out(dim);
  for (std::size_t j = 0; j < dim; ++j) out[j] = scale * (z[j] + s * az[j] + c * aaz[j]);
  return make_cone_point(out);
}

double cauchy_riemann_residual(std::span<const double> samples, const QuadratureRule& rule, const ConePoint& zeta,
                               std::span<const double> a, std::span<const double> b, cdouble alpha, double step) {
  auto value = [&](cdouble w) { return forward(samples, cone_flow(zeta, a, b, alpha, w), rule).value; };
  const cdouble dx = (value({step, 0.0}) - value({-step, 0.0})) / (2.0 * step);
  const cdouble dy = (value({0.0, step}) - value({0.0, -step})) / (2.0 * step);
  return std::abs(dy - cdouble{0.0, 1.0} * dx) / std::max(1.0, std::abs(dx));
}

}  // namespace horo
