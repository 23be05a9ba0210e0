#pragma once

// Deterministic test functions, evaluation grids and random rotations.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "horo/geometry.hpp"
#include "horo/transform.hpp"

namespace horo {

/// mt19937_64 with portable uniform/normal draws (the std distributions are
/// implementation-defined, which would break byte-stable reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

SpherePoint random_sphere_point(int n, Rng& rng);
/// Random ζ = x + iη ∈ ∂Ξ₊.
ConePoint random_boundary_cone_point(int n, Rng& rng);
/// Random ζ ∈ Ξ₊ with |ξ| uniform in [0, max_radius].
ConePoint random_interior_cone_point(int n, Rng& rng, double max_radius = 0.8);
/// Haar-random rotation, row-major (n+1)×(n+1).
Vec random_rotation(int n, Rng& rng);
Vec apply_matrix(std::span<const double> matrix, std::span<const double> x);

/// `terms_per_degree` random boundary cone terms for each k ≤ band_limit with
/// unit-magnitude coefficients.
BandLimitedFunction random_band_limited(int n, int band_limit, int terms_per_degree, Rng& rng);

struct CorpusEntry {
  std::string name;
  BandLimitedFunction f;
};

/// Fixed closed-form cases (constant, coordinates) followed by the random function.
std::vector<CorpusEntry> make_corpus(int n, int band_limit, std::uint64_t seed,
                                     int terms_per_degree = 2, bool closed_form = true);

/// Deterministic low-discrepancy points: uniform angles (n = 1), spherical
/// Fibonacci (n = 2), Hopf-coordinate Kronecker sequence (n = 3); rotated by a
/// seeded random rotation.
std::vector<SpherePoint> evaluation_grid(int n, int count, std::uint64_t seed);

}  // namespace horo
