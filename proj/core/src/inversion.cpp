#include "horo/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "horo/error.hpp"
#include "horo/summation.hpp"
#include "horo/zonal.hpp"

namespace horo {

std::string_view to_string(InversionMethod m) {
  switch (m) {
    case InversionMethod::kSpectral: return "spectral";
    case InversionMethod::kAbel: return "abel";
    case InversionMethod::kFullNumerical: return "full-numerical";
  }
  return "spectral";
}

InversionMethod parse_inversion_method(std::string_view name) {
  if (name == "spectral") return InversionMethod::kSpectral;
  if (name == "abel") return InversionMethod::kAbel;
  if (name == "full-numerical") return InversionMethod::kFullNumerical;
  throw Error(ErrorCode::kConfigError, "unknown method '" + std::string(name) + "'");
}

namespace {

// Projections of the sphere nodes onto x and onto the fiber frame basis, shared by
// every fiber node over x: ζ·y = x·y + i Σ_j u_j (b_j·y).
struct FiberProjections {
  Vec along_base;
  std::vector<Vec> along_basis;
};

FiberProjections project(const QuadratureRule& rule, const FiberFrame& frame) {
  FiberProjections p;
  p.along_base.resize(rule.size());
  p.along_basis.assign(frame.basis.size(), Vec(rule.size()));
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto y = rule.node(i);
    p.along_base[i] = dot(frame.base.coords(), y);
    for (std::size_t j = 0; j < frame.basis.size(); ++j) p.along_basis[j][i] = dot(frame.basis[j], y);
  }
  return p;
}

void fill_dots(const FiberProjections& p, std::span<const double> u, std::vector<cdouble>& dots) {
  for (std::size_t i = 0; i < dots.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * p.along_basis[j][i];
    dots[i] = {p.along_base[i], s};
  }
}

Vec weighted_samples(std::span<const double> samples, const QuadratureRule& rule) {
  if (samples.size() != rule.size()) throw Error(ErrorCode::kDimensionMismatch, "samples do not match rule");
  Vec out(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) out[i] = rule.weights()[i] * samples[i];
  return out;
}

void merge(PointResult& diag, const LResult& l) {
  diag.negative_mode_ratio = std::max(diag.negative_mode_ratio, l.negative_mode_ratio);
  diag.out_of_band_ratio = std::max(diag.out_of_band_ratio, l.out_of_band_ratio);
}

}  // namespace

InversionEngine::InversionEngine(int n, InversionParams params)
    : n_(n),
      params_(std::move(params)),
      sphere_(sphere_rule(n, params_.sphere_resolution)),
      table_(n, params_.kmax),
      wide_table_(n, std::max(params_.kmax, params_.circle_resolution / 2 - 1)) {
  if (params_.circle_resolution < 2 * params_.kmax + 2) {
    throw Error(ErrorCode::kInvalidArgument, "circle resolution must be >= 2*kmax+2");
  }
}

PointResult InversionEngine::finish(cdouble total, PointResult diag) const {
  diag.value = total.real();
  diag.imag_residual = std::abs(total.imag());
  if (params_.strict && diag.imag_residual > params_.tol.imaginary_residual) {
    throw Error(ErrorCode::kImaginaryResidual,
                "reconstructed value has imaginary part " + std::to_string(diag.imag_residual));
  }
  return diag;
}

PointResult InversionEngine::invert_at(const SphereFunction& f, const SpherePoint& x) const {
  if (x.n() != n_) throw Error(ErrorCode::kDimensionMismatch, "point is not on S^n");
  if (params_.method == InversionMethod::kSpectral) return invert_at_sampled(sample(f, sphere_), x);

  const bool full = params_.method == InversionMethod::kFullNumerical;
  const FiberRule fiber = fiber_rule(fiber_frame(x), params_.fiber_resolution);
  LOptions lopts;
  lopts.strict = params_.strict;
  lopts.tol = params_.tol;
  lopts.kmax = full ? params_.circle_resolution / 2 - 1 : params_.kmax;
  const DimensionTable& table = full ? wide_table_ : table_;

  PointResult diag;
  KahanSum<cdouble> acc;
  for (std::size_t j = 0; j < fiber.size(); ++j) {
    const TransformSamples boundary = boundary_values_abel(f, fiber.point(j), params_.circle_resolution,
                                                           params_.abel, params_.tol, params_.strict);
    diag.abel_residual = std::max(diag.abel_residual, boundary.max_abel_residual);
    const LResult l = apply_L(boundary, table, lopts);
    merge(diag, l);
    acc.add(fiber.weights()[j] * l.value);
  }
  return finish(acc.value(), diag);
}

PointResult InversionEngine::invert_at_sampled(std::span<const double> samples, const SpherePoint& x) const {
  if (x.n() != n_) throw Error(ErrorCode::kDimensionMismatch, "point is not on S^n");
  const Vec weighted = weighted_samples(samples, sphere_);
  const FiberRule fiber = fiber_rule(fiber_frame(x), params_.fiber_resolution);
  const FiberProjections proj = project(sphere_, fiber.frame());
  LOptions lopts;
  lopts.strict = params_.strict;
  lopts.tol = params_.tol;
  lopts.kmax = params_.kmax;

  // Two guard modes above kmax (when the circle resolves them) let apply_L see truncation.
  const int top = std::min(params_.circle_resolution / 2 - 1, params_.kmax + 2);

  std::vector<cdouble> dots(sphere_.size());
  PointResult diag;
  KahanSum<cdouble> acc;
  for (std::size_t j = 0; j < fiber.size(); ++j) {
    fill_dots(proj, fiber.coefficients(j), dots);
    const auto components = power_moments(weighted, dots, top);
    const TransformSamples boundary =
        boundary_values_from_components(fiber.point(j), components, params_.circle_resolution);
    const LResult l = apply_L(boundary, table_, lopts);
    merge(diag, l);
    acc.add(fiber.weights()[j] * l.value);
  }
  return finish(acc.value(), diag);
}

std::vector<cdouble> InversionEngine::fiber_averaged_components(std::span<const double> samples,
                                                                const SpherePoint& x) const {
  const Vec weighted = weighted_samples(samples, sphere_);
  const FiberRule fiber = fiber_rule(fiber_frame(x), params_.fiber_resolution);
  const FiberProjections proj = project(sphere_, fiber.frame());
  std::vector<cdouble> dots(sphere_.size());
  std::vector<KahanSum<cdouble>> acc(static_cast<std::size_t>(params_.kmax) + 1);
  for (std::size_t j = 0; j < fiber.size(); ++j) {
    fill_dots(proj, fiber.coefficients(j), dots);
    const auto components = power_moments(weighted, dots, params_.kmax);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k].add(fiber.weights()[j] * components[k]);
  }
  std::vector<cdouble> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = acc[k].value();
  return out;
}

double InversionEngine::invert_plancherel_sampled(std::span<const double> samples, const SpherePoint& x) const {
  const auto averaged = fiber_averaged_components(samples, x);
  KahanSum<cdouble> acc;
  for (std::size_t k = 0; k < averaged.size(); ++k) {
    acc.add(static_cast<double>(table_(static_cast<int>(k))) * averaged[k]);
  }
  return acc.value().real();
}

double InversionEngine::invert_plancherel(const SphereFunction& f, const SpherePoint& x) const {
  return invert_plancherel_sampled(sample(f, sphere_), x);
}

PointResult invert_at(const SphereFunction& f, const SpherePoint& x, const InversionParams& params) {
  return InversionEngine(x.n(), params).invert_at(f, x);
}

double invert_plancherel(const SphereFunction& f, const SpherePoint& x, int kmax, const InversionParams& params) {
  InversionParams p = params;
  p.kmax = kmax;
  p.circle_resolution = std::max(p.circle_resolution, 2 * kmax + 2);
  return InversionEngine(x.n(), p).invert_plancherel(f, x);
}

double zonal_projection_identity_check(const SphereFunction& f, const SpherePoint& x, int k,
                                       const InversionParams& params) {
  InversionParams p = params;
  p.kmax = k;
  p.circle_resolution = std::max(p.circle_resolution, 2 * k + 2);
  const InversionEngine engine(x.n(), p);
  const Vec samples = sample(f, engine.sphere());
  const cdouble lhs = engine.fiber_averaged_components(samples, x)[static_cast<std::size_t>(k)];
  const QuadratureRule& rule = engine.sphere();
  KahanSum<double> rhs;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rhs.add(rule.weights()[i] * samples[i] * zonal_oracle(x.n(), k, dot(x.coords(), rule.node(i))));
  }
  return std::abs(lhs - rhs.value());
}

ReconstructionReport roundtrip(const SphereFunction& f, const std::vector<SpherePoint>& grid,
                               const InversionEngine& engine) {
  ReconstructionReport report;
  report.grid = grid;
  report.params = engine.params();
  const std::size_t count = grid.size();
  report.truth.resize(count);
  report.reconstructed.resize(count);
  report.imag_residual.resize(count);
  std::vector<PointResult> results(count);

  const bool spectral = engine.params().method == InversionMethod::kSpectral;
  const Vec samples = spectral ? sample(f, engine.sphere()) : Vec{};
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      results[i] = spectral ? engine.invert_at_sampled(samples, grid[i]) : engine.invert_at(f, grid[i]);
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(1, engine.params().threads)), 1, std::max<std::size_t>(1, count));
  if (threads == 1) {
    work(0, count);
  } else {
    // Each point is independent; results land in fixed slots so aggregation order
    // does not depend on scheduling.
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(std::min(count, t * chunk), std::min(count, (t + 1) * chunk));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  KahanSum<double> sq;
  for (std::size_t i = 0; i < count; ++i) {
    report.truth[i] = f(grid[i].coords());
    report.reconstructed[i] = results[i].value;
    report.imag_residual[i] = results[i].imag_residual;
    const double err = std::abs(report.reconstructed[i] - report.truth[i]);
    report.max_abs_error = std::max(report.max_abs_error, err);
    sq.add(err * err);
    report.max_imag_residual = std::max(report.max_imag_residual, results[i].imag_residual);
    report.max_negative_mode_ratio = std::max(report.max_negative_mode_ratio, results[i].negative_mode_ratio);
    report.max_out_of_band_ratio = std::max(report.max_out_of_band_ratio, results[i].out_of_band_ratio);
    report.max_abel_residual = std::max(report.max_abel_residual, results[i].abel_residual);
  }
  report.l2_error = count ? std::sqrt(sq.value() / static_cast<double>(count)) : 0.0;
  return report;
}

}  // namespace horo
