#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "horo/corpus.hpp"
#include "horo/error.hpp"
#include "horo/quadrature.hpp"
#include "oracles.hpp"

using namespace horo;

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre integrates x^2j exactly") {
  const GaussRule g = gauss_legendre(7);
  for (int j = 0; j <= 6; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 2 * j);
    CHECK(s == doctest::Approx(2.0 / (2 * j + 1)).epsilon(1e-14));
  }
}

TEST_CASE("sphere rules are normalized and on the sphere") {
  for (int n = 1; n <= 3; ++n) {
    const QuadratureRule rule = sphere_rule(n, 8);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      CHECK(norm(rule.node(i)) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(rule.weights()[i] > 0.0);
      total += rule.weights()[i];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(sphere_rule(4, 8), Error);
  CHECK_THROWS_AS(sphere_rule(2, 3), Error);
}

TEST_CASE("monomial moments up to degree 6 match the Beta-function oracle") {
  for (int n = 1; n <= 3; ++n) {
    const QuadratureRule rule = sphere_rule(n, 8);
    const int dim = n + 1;
    std::vector<int> a(static_cast<std::size_t>(dim), 0);
    // Enumerate every exponent vector of total degree <= 6.
    std::function<void(int, int)> walk = [&](int slot, int left) {
      if (slot == dim) {
        const double got = rule.integrate([&](std::span<const double> x) {
          double v = 1.0;
          for (int j = 0; j < dim; ++j) v *= std::pow(x[j], a[j]);
          return v;
        });
        CHECK(std::abs(got - oracle::sphere_moment(a)) < 1e-14);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        a[slot] = e;
        walk(slot + 1, left - e);
      }
      a[slot] = 0;
    };
    walk(0, 6);
  }
}

TEST_CASE("harmonics of degree <= resolution - 2 integrate to zero") {
  Rng rng(3);
  for (int n = 1; n <= 3; ++n) {
    const int res = 10;
    const QuadratureRule rule = sphere_rule(n, res);
    const ConePoint z = random_boundary_cone_point(n, rng);
    for (int k = 1; k <= res - 2; ++k) {
      const cdouble s = rule.integrate([&](std::span<const double> x) { return std::pow(h(x, z), k); });
      CHECK(std::abs(s) < 1e-14 * std::pow(2.0, k));
    }
  }
}

TEST_CASE("rules are deterministic") {
  const QuadratureRule a = sphere_rule(3, 12), b = sphere_rule(3, 12);
  REQUIRE(a.size() == b.size());
  CHECK(std::equal(a.nodes().begin(), a.nodes().end(), b.nodes().begin()));
  CHECK(std::equal(a.weights().begin(), a.weights().end(), b.weights().begin()));
}

TEST_CASE("fiber rules") {
  Rng rng(8);
  for (int n = 1; n <= 3; ++n) {
    const SpherePoint x = random_sphere_point(n, rng);
    const FiberRule fiber = fiber_rule(fiber_frame(x), 8);
    double total = 0.0;
    Vec mean(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      const Vec eta = fiber.direction(i);
      CHECK(std::abs(dot(eta, x.coords())) < 1e-14);
      CHECK(norm(eta) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(on_boundary(fiber.point(i)));
      total += fiber.weights()[i];
      for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += fiber.weights()[i] * eta[j];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm(mean) < 1e-14);
  }
  const FiberRule circle = fiber_rule(fiber_frame(SpherePoint(Vec{1.0, 0.0})), 4);
  CHECK(circle.size() == 2);
}

TEST_CASE("pole-adapted rule integrates low-degree moments") {
  Rng rng(4);
  for (int n = 1; n <= 3; ++n) {
    const SpherePoint axis = random_sphere_point(n, rng);
    const QuadratureRule rule = pole_adapted_rule(axis, 24, 12);
    CHECK(rule.integrate([](std::span<const double>) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-14));
    std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 2;
    a[1] = 2;
    const double got = rule.integrate([](std::span<const double> x) { return x[0] * x[0] * x[1] * x[1]; });
    CHECK(std::abs(got - oracle::sphere_moment(a)) < 1e-13);
  }
}

TEST_CASE("pole-adapted rule with a secondary direction on S3") {
  Rng rng(14);
  const SpherePoint axis = random_sphere_point(3, rng);
  Vec e(4);
  const SpherePoint other = random_sphere_point(3, rng);
  const double along = dot(other.coords(), axis.coords());
  for (std::size_t j = 0; j < 4; ++j) e[j] = other[j] - along * axis[j];
  const QuadratureRule rule = pole_adapted_rule(axis, 24, 24, e, 16);
  CHECK(rule.integrate([](std::span<const double>) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-14));
  for (const std::vector<int>& a : {std::vector<int>{2, 2, 0, 0}, {0, 0, 2, 4}, {2, 0, 2, 2}, {1, 1, 0, 0}}) {
    const double got = rule.integrate([&](std::span<const double> x) {
      double v = 1.0;
      for (std::size_t j = 0; j < 4; ++j) v *= std::pow(x[j], a[j]);
      return v;
    });
    CHECK(std::abs(got - oracle::sphere_moment(a)) < 1e-13);
  }
  CHECK_THROWS_AS(pole_adapted_rule(axis, 8, 8, axis.coords(), 4), Error);
}

TEST_CASE("circle DFT picks out single modes") {
  const int m = 12;
  const CircleRule c = circle_rule(m);
  for (int k = -5; k <= 6; ++k) {
    std::vector<cdouble> v(m);
    for (int j = 0; j < m; ++j) v[j] = std::polar(1.0, k * c.angles[j]);
    const auto coeffs = dft(v);
    for (int j = 0; j < m; ++j) {
      const bool hit = dft_mode(j, m) == k || (k == 6 && dft_mode(j, m) == 6);
      CHECK(std::abs(coeffs[j] - (hit ? 1.0 : 0.0)) < 1e-14);
    }
  }
  CHECK(dft_mode(11, 12) == -1);
  CHECK(dft_mode(6, 12) == 6);
}

}
