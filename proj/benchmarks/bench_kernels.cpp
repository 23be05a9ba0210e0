#include <benchmark/benchmark.h>

#include "horo/corpus.hpp"
#include "horo/inversion.hpp"
#include "horo/transform.hpp"

using namespace horo;

static void BM_PowerMoments(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  const int kmax = static_cast<int>(state.range(1));
  const QuadratureRule rule = sphere_rule(2, res);
  Rng rng(1);
  const ConePoint z = random_boundary_cone_point(2, rng);
  Vec weighted(rule.size());
  std::vector<cdouble> dots(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    weighted[i] = rule.weights()[i] * rng.normal();
    dots[i] = h(rule.node(i), z);
  }
  for (auto _ : state) benchmark::DoNotOptimize(power_moments(weighted, dots, kmax));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rule.size()) * (kmax + 1));
}
BENCHMARK(BM_PowerMoments)->Args({32, 8})->Args({64, 10})->Args({128, 10});

static void BM_AbelBoundary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const BandLimitedFunction f = random_band_limited(n, 4, 2, rng);
  const SphereFunction fn = f.as_function();
  const ConePoint z = random_boundary_cone_point(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_values_abel(fn, z, 12));
}
BENCHMARK(BM_AbelBoundary)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_InvertAt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int kmax = static_cast<int>(state.range(1));
  InversionParams p;
  p.kmax = kmax;
  p.sphere_resolution = n == 3 ? 16 : 64;
  p.fiber_resolution = n == 2 ? 256 : n == 3 ? kmax + 4 : 2;
  p.circle_resolution = std::max(32, 2 * kmax + 2);
  const InversionEngine engine(n, p);
  Rng rng(3);
  const BandLimitedFunction f = random_band_limited(n, kmax, 2, rng);
  const Vec samples = sample(f.as_function(), engine.sphere());
  const SpherePoint x = random_sphere_point(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(engine.invert_at_sampled(samples, x));
}
BENCHMARK(BM_InvertAt)->Args({1, 8})->Args({2, 8})->Args({3, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
