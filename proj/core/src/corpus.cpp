#include "horo/corpus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "horo/error.hpp"

namespace horo {
namespace {

constexpr double kPi = std::numbers::pi;

double determinant(Vec m, std::size_t dim) {
  double det = 1.0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < dim; ++r) {
      if (std::abs(m[r * dim + c]) > std::abs(m[pivot * dim + c])) pivot = r;
    }
    if (m[pivot * dim + c] == 0.0) return 0.0;
    if (pivot != c) {
      for (std::size_t j = 0; j < dim; ++j) std::swap(m[c * dim + j], m[pivot * dim + j]);
      det = -det;
    }
    det *= m[c * dim + c];
    for (std::size_t r = c + 1; r < dim; ++r) {
      const double f = m[r * dim + c] / m[c * dim + c];
      for (std::size_t j = c; j < dim; ++j) m[r * dim + j] -= f * m[c * dim + j];
    }
  }
  return det;
}

double frac(double v) { return v - std::floor(v); }

}  // namespace

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

SpherePoint random_sphere_point(int n, Rng& rng) {
  Vec v(static_cast<std::size_t>(n) + 1);
  do {
    for (double& c : v) c = rng.normal();
  } while (norm(v) < 1e-8);
  return SpherePoint(std::move(v));
}

ConePoint random_boundary_cone_point(int n, Rng& rng) {
  const SpherePoint x = random_sphere_point(n, rng);
  Vec eta(x.ambient_dim());
  double len = 0.0;
  do {
    for (double& c : eta) c = rng.normal();
    const double d = dot(eta, x.coords());
    for (std::size_t j = 0; j < eta.size(); ++j) eta[j] -= d * x[j];
    len = norm(eta);
  } while (len < 1e-8);
  for (double& c : eta) c /= len;
  return make_cone_point(Vec(x.coords().begin(), x.coords().end()), std::move(eta));
}

ConePoint random_interior_cone_point(int n, Rng& rng, double max_radius) {
  const ConePoint boundary = random_boundary_cone_point(n, rng);
  const double radius = max_radius * (0.05 + 0.95 * rng.uniform());
  const double phase = 2.0 * kPi * rng.uniform();
  return scale_act(boundary, std::polar(radius, phase));
}

Vec random_rotation(int n, Rng& rng) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  Vec q(dim * dim);
  // Gram–Schmidt on the columns of a Gaussian matrix.
  for (std::size_t c = 0; c < dim; ++c) {
    Vec col(dim);
    double len = 0.0;
    do {
      for (double& v : col) v = rng.normal();
      for (std::size_t p = 0; p < c; ++p) {
        double d = 0.0;
        for (std::size_t r = 0; r < dim; ++r) d += q[r * dim + p] * col[r];
        for (std::size_t r = 0; r < dim; ++r) col[r] -= d * q[r * dim + p];
      }
      len = norm(col);
    } while (len < 1e-6);
    for (std::size_t r = 0; r < dim; ++r) q[r * dim + c] = col[r] / len;
  }
  if (determinant(q, dim) < 0.0) {
    for (std::size_t r = 0; r < dim; ++r) q[r * dim] = -q[r * dim];
  }
  return q;
}

Vec apply_matrix(std::span<const double> matrix, std::span<const double> x) {
  const std::size_t dim = x.size();
  if (matrix.size() != dim * dim) throw Error(ErrorCode::kDimensionMismatch, "matrix does not match vector");
  Vec out(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out[i] += matrix[i * dim + j] * x[j];
  }
  return out;
}

BandLimitedFunction random_band_limited(int n, int band_limit, int terms_per_degree, Rng& rng) {
  std::vector<ConeTerm> terms;
  for (int k = 0; k <= band_limit; ++k) {
    for (int m = 0; m < terms_per_degree; ++m) {
      ConePoint zeta = random_boundary_cone_point(n, rng);
      const cdouble coeff = std::polar(1.0, 2.0 * kPi * rng.uniform());
      terms.push_back(ConeTerm{k, std::move(zeta), coeff});
    }
  }
  return {n, std::move(terms)};
}

std::vector<CorpusEntry> make_corpus(int n, int band_limit, std::uint64_t seed, int terms_per_degree,
                                     bool closed_form) {
  std::vector<CorpusEntry> corpus;
  if (closed_form) {
    corpus.push_back({"constant", BandLimitedFunction::constant(n, 1.0)});
    for (int j = 0; j <= n; ++j) {
      corpus.push_back({"x" + std::to_string(j + 1), BandLimitedFunction::coordinate(n, j)});
    }
  }
  Rng rng(seed);
  corpus.push_back({"random_band" + std::to_string(band_limit),
                    random_band_limited(n, band_limit, terms_per_degree, rng)});
  return corpus;
}

std::vector<SpherePoint> evaluation_grid(int n, int count, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "grid needs at least one point");
  std::vector<SpherePoint> grid;
  grid.reserve(static_cast<std::size_t>(count));
  Rng rng(seed);
  const Vec rotation = random_rotation(n, rng);
  for (int m = 0; m < count; ++m) {
    Vec p;
    switch (n) {
      case 1: {
        const double a = 2.0 * kPi * (m + 0.5) / count;
        p = {std::cos(a), std::sin(a)};
        break;
      }
      case 2: {
        const double golden = kPi * (3.0 - std::sqrt(5.0));
        const double z = 1.0 - (2.0 * m + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        p = {r * std::cos(golden * m), r * std::sin(golden * m), z};
        break;
      }
      case 3: {
        // Hopf coordinates: s = sin² uniform on [0,1], two angles from the R2 sequence.
        constexpr double plastic = 1.32471795724474602596;
        const double s = (m + 0.5) / count;
        const double a = 2.0 * kPi * frac(m / plastic);
        const double b = 2.0 * kPi * frac(m / (plastic * plastic));
        const double c = std::sqrt(1.0 - s), d = std::sqrt(s);
        p = {c * std::cos(a), c * std::sin(a), d * std::cos(b), d * std::sin(b)};
        break;
      }
      default:
        throw Error(ErrorCode::kUnsupportedDim, "evaluation grids support n in {1,2,3}");
    }
    grid.emplace_back(apply_matrix(rotation, p));
  }
  return grid;
}

}  // namespace horo
