#include <cmath>

#include "doctest.h"
#include "horo/corpus.hpp"
#include "horo/error.hpp"
#include "horo/spectral.hpp"
#include "horo/transform.hpp"
#include "oracles.hpp"

using namespace horo;

namespace {

const cdouble I{0.0, 1.0};

ConePoint half_y_iz() { return make_cone_point(Vec{0.0, 0.5, 0.0}, Vec{0.0, 0.0, 0.5}); }

// Degree-3 harmonic on S^2: Re((x_1 + i x_2)^3).
BandLimitedFunction cubic() {
  return BandLimitedFunction(2, {{3, make_cone_point(Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0}), {1.0, 0.0}}});
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("constant function transforms to one") {
  Rng rng(1);
  for (int n = 1; n <= 3; ++n) {
    const QuadratureRule rule = sphere_rule(n, 48);
    for (int t = 0; t < 3; ++t) {
      const ConePoint z = random_interior_cone_point(n, rng, 0.5);
      CHECK(std::abs(forward(BandLimitedFunction::constant(n, 1.0).as_function(), z, rule).value - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("x3 on S2 at 0.5(0,1,i) gives i/6") {
  const QuadratureRule rule = sphere_rule(2, 48);
  const cdouble got = forward(BandLimitedFunction::coordinate(2, 2).as_function(), half_y_iz(), rule).value;
  CHECK(std::abs(got - I / 6.0) < 1e-10);
}

TEST_CASE("forward tends to the mean under small scaling") {
  const QuadratureRule rule = sphere_rule(2, 24);
  const BandLimitedFunction f = BandLimitedFunction::constant(2, 0.3) + BandLimitedFunction::coordinate(2, 0);
  const cdouble got = forward(f.as_function(), scale_act(half_y_iz(), 1e-9), rule).value;
  CHECK(std::abs(got - 0.3) < 1e-9);
}

TEST_CASE("Fourier components of the closed-form cases") {
  const QuadratureRule rule = sphere_rule(2, 16);
  const ConePoint z = make_cone_point(Vec{0.0, 1.0, 0.0}, Vec{0.0, 0.0, 1.0});
  const SphereFunction one = BandLimitedFunction::constant(2, 1.0).as_function();
  const SphereFunction x3 = BandLimitedFunction::coordinate(2, 2).as_function();
  CHECK(std::abs(fourier_component(one, z, 0, rule) - 1.0) < 1e-12);
  for (int k = 1; k <= 6; ++k) CHECK(std::abs(fourier_component(one, z, k, rule)) < 1e-12);
  CHECK(std::abs(fourier_component(x3, z, 1, rule) - I / 3.0) < 1e-12);
  for (int k : {0, 2, 3, 4}) CHECK(std::abs(fourier_component(x3, z, k, rule)) < 1e-12);
}

TEST_CASE("homogeneity of Fourier components") {
  Rng rng(2);
  const QuadratureRule rule = sphere_rule(2, 24);
  const BandLimitedFunction f = random_band_limited(2, 5, 2, rng);
  const ConePoint z = random_boundary_cone_point(2, rng);
  for (int k = 0; k <= 5; ++k) {
    CHECK(std::abs(fourier_component(f.as_function(), scale_act(z, 2.0), k, rule) -
                   std::pow(2.0, k) * fourier_component(f.as_function(), z, k, rule)) < 1e-12 * std::pow(2.0, k));
    const cdouble a = std::polar(rng.uniform(), 6.0 * rng.uniform());
    CHECK(std::abs(fourier_component(f.as_function(), scale_act(z, a), k, rule) -
                   std::pow(a, k) * fourier_component(f.as_function(), z, k, rule)) < 1e-11);
  }
}

TEST_CASE("closed-form components match the Gaussian-moment oracle and quadrature") {
  Rng rng(9);
  for (int n = 1; n <= 3; ++n) {
    const ConePoint a = random_boundary_cone_point(n, rng);
    const ConePoint z = random_boundary_cone_point(n, rng);
    const BandLimitedFunction f(n, {{4, a, {0.3, -0.7}}});
    cdouble ab{0.0, 0.0}, abar{0.0, 0.0};
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
      ab += a[j] * z[j];
      abar += std::conj(a[j]) * z[j];
    }
    const cdouble c{0.3, -0.7};
    const cdouble expected = 0.5 * (c * oracle::isotropic_pair(n, 4, ab) + std::conj(c) * oracle::isotropic_pair(n, 4, abar));
    CHECK(std::abs(f.exact_component(z, 4) - expected) < 1e-14);
    CHECK(std::abs(f.exact_component(z, 3)) < 1e-15);
    const QuadratureRule rule = sphere_rule(n, 12);
    CHECK(std::abs(fourier_component(f.as_function(), z, 4, rule) - expected) < 1e-13);
  }
}

TEST_CASE("series decomposition") {
  const QuadratureRule rule = sphere_rule(2, 64);
  const ConePoint z = half_y_iz();
  CHECK(series_decomposition_check(BandLimitedFunction::constant(2, 1.0).as_function(), z, 0, rule) < 1e-10);
  const ConePoint w = make_cone_point(Vec{0.4, 0.0, 0.3}, Vec{0.0, 0.5, 0.0});
  const BandLimitedFunction f = cubic();
  const double missing = std::abs(fourier_component(f.as_function(), w, 3, rule));
  CHECK(missing > 1e-3);
  CHECK(series_decomposition_check(f.as_function(), w, 2, rule) == doctest::Approx(missing).epsilon(1e-9));
  CHECK(series_decomposition_check(f.as_function(), w, 3, rule) < 1e-10);
}

TEST_CASE("series identity over the corpus once K reaches the band limit") {
  for (int n = 1; n <= 3; ++n) {
    const QuadratureRule rule = sphere_rule(n, n == 3 ? 48 : 64);
    Rng rng(40 + n);
    const ConePoint z = random_interior_cone_point(n, rng, 0.5);
    for (const CorpusEntry& e : make_corpus(n, 4, 7)) {
      CHECK(series_decomposition_check(e.f.as_function(), z, e.f.band_limit(), rule) < 1e-9);
    }
  }
}

TEST_CASE("linearity") {
  Rng rng(12);
  const QuadratureRule rule = sphere_rule(2, 32);
  const BandLimitedFunction f = random_band_limited(2, 3, 2, rng), g = random_band_limited(2, 3, 2, rng);
  const ConePoint z = random_interior_cone_point(2, rng, 0.5);
  const cdouble lhs = forward((f + g).as_function(), z, rule).value;
  const cdouble rhs = forward(f.as_function(), z, rule).value + forward(g.as_function(), z, rule).value;
  CHECK(std::abs(lhs - rhs) < 1e-15);
  const cdouble lc = fourier_component((f + g).as_function(), z, 2, rule);
  CHECK(std::abs(lc - fourier_component(f.as_function(), z, 2, rule) - fourier_component(g.as_function(), z, 2, rule)) <
        1e-15);
}

TEST_CASE("forward domain checks") {
  const QuadratureRule rule = sphere_rule(2, 16);
  const SphereFunction one = BandLimitedFunction::constant(2, 1.0).as_function();
  const ConePoint edge = make_cone_point(Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0});
  CHECK_THROWS_AS(forward(one, edge, rule), Error);
  const ConePoint close = scale_act(edge, 0.9995);
  CHECK(forward(one, close, rule).near_singular);
  CHECK_FALSE(forward(one, half_y_iz(), rule).near_singular);
}

TEST_CASE("resolution heuristic") {
  const ResolutionAdvice a = recommended_resolution(half_y_iz());
  CHECK(a.resolution == 24);  // 16 + 4/(1 - 0.5)
  CHECK_FALSE(a.capped);
  const ConePoint edge = make_cone_point(Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0});
  CHECK(recommended_resolution(scale_act(edge, 0.9999), 100).capped);
}

TEST_CASE("holomorphy via Cauchy-Riemann differences") {
  Rng rng(31);
  for (int n = 1; n <= 3; ++n) {
    const QuadratureRule rule = sphere_rule(n, n == 3 ? 40 : 64);
    const BandLimitedFunction f = random_band_limited(n, 4, 2, rng);
    const Vec samples = sample(f.as_function(), rule);
    const ConePoint z = random_interior_cone_point(n, rng, 0.5);
    Vec a(static_cast<std::size_t>(n) + 1, 0.0), b = a;
    a[0] = 1.0;
    b[n == 1 ? 0 : 1] = 1.0;
    const ConePoint moved = cone_flow(z, a, b, std::polar(1.0, 0.4), {0.2, -0.1});
    CHECK(std::abs(moved.delta()) < 1e-14);
    CHECK(cauchy_riemann_residual(samples, rule, z, a, b, std::polar(1.0, 0.4), 1e-4) < 1e-6);
  }
}

TEST_CASE("Richardson extrapolation is exact on polynomials of low degree") {
  const Vec steps{0.1, 0.05, 0.025, 0.0125};
  std::vector<cdouble> values;
  for (double s : steps) values.push_back(cdouble{2.0, -1.0} + 3.0 * s - 5.0 * s * s + cdouble{0.0, 7.0} * s * s * s);
  const RichardsonResult r = richardson_to_zero(steps, values);
  CHECK(std::abs(r.value - cdouble{2.0, -1.0}) < 1e-12);
  // The residual compares against the previous order, which a cubic still defeats.
  CHECK(r.residual > 1e-6);
  std::vector<cdouble> quadratic;
  for (double s : steps) quadratic.push_back(cdouble{2.0, -1.0} + 3.0 * s - 5.0 * s * s);
  const RichardsonResult q = richardson_to_zero(steps, quadratic);
  CHECK(std::abs(q.value - cdouble{2.0, -1.0}) < 1e-12);
  CHECK(q.residual < 1e-12);
}

TEST_CASE("boundary values") {
  Rng rng(17);
  const ConePoint edge = random_boundary_cone_point(2, rng);
  const QuadratureRule rule = sphere_rule(2, 16);
  const TransformSamples one =
      boundary_values_spectral(sample(BandLimitedFunction::constant(2, 1.0).as_function(), rule), rule, edge, 4, 12);
  for (const cdouble v : one.values) CHECK(std::abs(v - 1.0) < 1e-14);
  CHECK_THROWS_AS(boundary_values_spectral(Vec(rule.size(), 1.0), rule, scale_act(edge, 0.5), 4, 12), Error);

  const BandLimitedFunction f = random_band_limited(2, 4, 2, rng);
  const TransformSamples spectral = boundary_values_spectral(sample(f.as_function(), rule), rule, edge, 4, 12);
  const TransformSamples abel = boundary_values_abel(f.as_function(), edge, 12);
  double diff = 0.0;
  for (std::size_t m = 0; m < 12; ++m) diff = std::max(diff, std::abs(spectral.values[m] - abel.values[m]));
  CHECK(diff < 1e-6);
  CHECK(abel.max_abel_residual < 1e-4);

  LOptions opts;
  opts.strict = false;
  const DimensionTable table(2, 4);
  CHECK(apply_L(spectral, table, opts).negative_mode_ratio < 1e-9);
  CHECK(apply_L(abel, table, opts).negative_mode_ratio < 1e-9);
}

TEST_CASE("Abel path reports divergence with too few nodes") {
  Rng rng(18);
  const ConePoint edge = random_boundary_cone_point(2, rng);
  const BandLimitedFunction f = random_band_limited(2, 6, 2, rng);
  AbelOptions coarse;
  coarse.resolution_scale = 0.05;
  try {
    boundary_values_abel(f.as_function(), edge, 14, coarse);
    FAIL("expected AbelDivergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAbelDivergence);
  }
}

}
