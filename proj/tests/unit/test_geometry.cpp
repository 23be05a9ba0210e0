#include <cmath>
#include <numbers>

#include "doctest.h"
#include "horo/corpus.hpp"
#include "horo/error.hpp"
#include "horo/geometry.hpp"

using namespace horo;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected horo::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("sphere points are renormalized and reject zero") {
  const SpherePoint p(Vec{3.0, 0.0, 4.0});
  CHECK(p[0] == doctest::Approx(0.6));
  CHECK(p[2] == doctest::Approx(0.8));
  CHECK(p.n() == 2);
  CHECK(code_of([] { SpherePoint(Vec{0.0, 0.0}); }) == ErrorCode::kZeroVector);
}

TEST_CASE("cone validation") {
  const ConePoint z = make_cone_point(Vec{0.5, 0.0, 0.0}, Vec{0.0, 0.5, 0.0});
  CHECK(std::abs(z.delta()) < 1e-15);
  CHECK(z.delta_re() == doctest::Approx(0.25));
  CHECK(z.norm_sq() == doctest::Approx(0.5));
  CHECK(code_of([] { make_cone_point(Vec{1.0, 0.0}, Vec{0.0, 0.5}); }) == ErrorCode::kInvalidCone);
  CHECK(code_of([] { make_cone_point(Vec{1.0, 0.0}, Vec{1.0, 0.0}); }) == ErrorCode::kInvalidCone);
  CHECK(code_of([] { make_cone_point(Vec{0.0, 0.0}, Vec{0.0, 0.0}); }) == ErrorCode::kZeroVector);
  CHECK(code_of([] { make_cone_point(Vec{1.0, 0.0}, Vec{0.0, 1.0, 0.0}); }) == ErrorCode::kDimensionMismatch);

  const std::vector<cdouble> c{{1.0, 0.0}, {0.0, 1.0}};
  const ConePoint w = make_cone_point(c);
  CHECK(w[1] == cdouble{0.0, 1.0});
}

TEST_CASE("sup of |zeta . x| over the sphere is |xi|, attained at xi/|xi|") {
  Rng rng(11);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const ConePoint z = random_interior_cone_point(n, rng, 0.9);
      const double r = std::sqrt(z.delta_re());
      CHECK(z.sup_h() == doctest::Approx(r).epsilon(1e-14));
      const SpherePoint top(Vec(z.re().begin(), z.re().end()));
      CHECK(std::abs(h(top, z)) == doctest::Approx(r).epsilon(1e-14));
      double seen = 0.0;
      for (int i = 0; i < 2000; ++i) seen = std::max(seen, std::abs(h(random_sphere_point(n, rng), z)));
      CHECK(seen <= r + 1e-14);
    }
  }
}

TEST_CASE("Xi-plus membership and boundary") {
  const ConePoint inside = make_cone_point(Vec{0.5, 0.0, 0.0}, Vec{0.0, 0.5, 0.0});
  const ConePoint edge = make_cone_point(Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0});
  CHECK(in_xi_plus(inside));
  CHECK_FALSE(on_boundary(inside));
  CHECK_FALSE(in_xi_plus(edge));
  CHECK(on_boundary(edge));
}

TEST_CASE("fiber points meet the sphere at their base") {
  Rng rng(5);
  for (int n = 1; n <= 3; ++n) {
    const SpherePoint x = random_sphere_point(n, rng);
    const FiberFrame frame = fiber_frame(x);
    REQUIRE(frame.basis.size() == static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < frame.basis.size(); ++a) {
      CHECK(std::abs(dot(frame.basis[a], x.coords())) < 1e-14);
      for (std::size_t b = 0; b < frame.basis.size(); ++b) {
        CHECK(dot(frame.basis[a], frame.basis[b]) == doctest::Approx(a == b ? 1.0 : 0.0));
      }
    }
    const ConePoint z = fiber_point(x, frame.basis[0]);
    CHECK(on_boundary(z));
    CHECK(std::abs(h(x, z) - 1.0) < 1e-14);
  }
  const SpherePoint x(Vec{0.0, 0.0, 1.0});
  CHECK(code_of([&] { fiber_point(x, Vec{0.0, 0.6, 0.8}); }) == ErrorCode::kNotInFiber);
  CHECK(code_of([&] { fiber_point(x, Vec{0.0, 0.5, 0.0}); }) == ErrorCode::kNotInFiber);
}

TEST_CASE("fiber frame at the poles") {
  for (double sign : {1.0, -1.0}) {
    const SpherePoint x(Vec{sign, 0.0, 0.0, 0.0});
    const FiberFrame frame = fiber_frame(x);
    for (const Vec& b : frame.basis) {
      CHECK(std::abs(dot(b, x.coords())) < 1e-15);
      CHECK(norm(b) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("|h(y, zeta)| <= 1 for fiber points and real y") {
  Rng rng(23);
  for (int n = 1; n <= 3; ++n) {
    const SpherePoint x = random_sphere_point(n, rng);
    const FiberFrame frame = fiber_frame(x);
    for (int j = 0; j < 20; ++j) {
      Vec u(static_cast<std::size_t>(n));
      for (double& c : u) c = rng.normal();
      const double len = norm(u);
      for (double& c : u) c /= len;
      const ConePoint z = frame.point(u);
      for (int i = 0; i < 200; ++i) CHECK(std::abs(h(random_sphere_point(n, rng), z)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("scaling action") {
  const ConePoint z = make_cone_point(Vec{0.0, 1.0, 0.0}, Vec{0.0, 0.0, 1.0});
  const cdouble a = std::polar(0.5, 0.7);
  const ConePoint w = scale_act(z, a);
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(w[j] - a * z[j]) < 1e-15);
  CHECK(std::abs(w.delta()) < 1e-15);
  CHECK(code_of([&] { scale_act(z, 0.0); }) == ErrorCode::kZeroScale);
}

}
