#include <cmath>
#include <numbers>

#include "doctest.h"
#include "horo/corpus.hpp"
#include "horo/spectral.hpp"
#include "horo/zonal.hpp"
#include "oracles.hpp"

using namespace horo;

namespace {

// y at angular distance acos(t) from x, along the first frame direction.
SpherePoint at_cosine(const SpherePoint& x, double t) {
  const FiberFrame frame = fiber_frame(x);
  Vec y(x.ambient_dim());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = t * x[j] + std::sqrt(1.0 - t * t) * frame.basis[0][j];
  return SpherePoint(y);
}

}  // namespace

TEST_SUITE("zonal") {

TEST_CASE("anchor values") {
  Rng rng(1);
  for (int n = 1; n <= 3; ++n) {
    const SpherePoint x = random_sphere_point(n, rng), y = random_sphere_point(n, rng);
    CHECK(zonal_by_average(n, 0, x, y, 8) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(zonal_by_average(n, 1, x, y, 8) == doctest::Approx(dot(x.coords(), y.coords())).epsilon(1e-14));
    CHECK(zonal_oracle(n, 1, 0.3) == doctest::Approx(0.3));
  }
  const SpherePoint x(Vec{0.0, 0.0, 1.0});
  CHECK(zonal_by_average(2, 2, x, at_cosine(x, 0.5), 8) == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(zonal_oracle(2, 2, 1.0) == doctest::Approx(1.0));
  CHECK(zonal_oracle(2, 2, 0.0) == doctest::Approx(-0.5));
}

TEST_CASE("recurrence oracle matches explicit sums") {
  for (int k = 0; k <= 10; ++k) {
    for (int i = 0; i <= 20; ++i) {
      const double t = -1.0 + 0.1 * i;
      CHECK(std::abs(zonal_oracle(2, k, t) - oracle::legendre(k, t)) < 1e-13);
      for (int n = 1; n <= 5; ++n) CHECK(std::abs(zonal_oracle(n, k, t) - oracle::zonal(n, k, t)) < 1e-12);
    }
  }
}

TEST_CASE("fiber average equals the classical zonal polynomial") {
  constexpr int kSamples = 50;
  Rng rng(2);
  for (int n = 1; n <= 3; ++n) {
    const SpherePoint x = random_sphere_point(n, rng);
    for (int k = 0; k <= 10; ++k) {
      double worst = 0.0;
      for (int i = 0; i < kSamples; ++i) {
        const double t = std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * kSamples));
        worst = std::max(worst, std::abs(zonal_by_average(n, k, x, at_cosine(x, t), std::max(4, 2 * k + 2)) - oracle::zonal(n, k, t)));
      }
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("zonality under rotations") {
  Rng rng(3);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const SpherePoint x = random_sphere_point(n, rng), y = random_sphere_point(n, rng);
      const Vec r = random_rotation(n, rng);
      const SpherePoint rx(apply_matrix(r, x.coords())), ry(apply_matrix(r, y.coords()));
      for (int k = 0; k <= 6; ++k) {
        CHECK(std::abs(zonal_by_average(n, k, x, y, 14) - zonal_by_average(n, k, rx, ry, 14)) < 1e-11);
      }
    }
  }
}

TEST_CASE("imaginary part of the average vanishes") {
  Rng rng(4);
  const SpherePoint x = random_sphere_point(3, rng), y = random_sphere_point(3, rng);
  const FiberRule fiber = fiber_rule(fiber_frame(x), 12);
  for (int k = 0; k <= 8; ++k) CHECK(std::abs(zonal_by_average_complex(k, fiber, y.coords()).imag()) < 1e-12);
}

TEST_CASE("center value and bound") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 10; ++k) {
      CHECK(zonal_oracle(n, k, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
      for (int i = 0; i <= 40; ++i) CHECK(std::abs(zonal_oracle(n, k, -1.0 + 0.05 * i)) <= 1.0 + 1e-14);
    }
  }
}

TEST_CASE("orthogonality with weight 1/d(k)") {
  Rng rng(5);
  for (int n = 1; n <= 3; ++n) {
    const SpherePoint x = random_sphere_point(n, rng);
    const QuadratureRule rule = sphere_rule(n, 12);
    const DimensionTable table(n, 4);
    for (int k = 0; k <= 4; ++k) {
      for (int kp = 0; kp <= 4; ++kp) {
        const double expected = k == kp ? 1.0 / static_cast<double>(table(k)) : 0.0;
        CHECK(std::abs(orthogonality_check(n, k, kp, rule, x) - expected) < 1e-12);
      }
    }
  }
  const SpherePoint x(Vec{1.0, 0.0, 0.0});
  CHECK(orthogonality_check(2, 1, 1, sphere_rule(2, 8), x) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

}
