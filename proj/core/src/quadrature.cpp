#include "horo/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "horo/error.hpp"

namespace horo {
namespace {

constexpr double kPi = std::numbers::pi;

void normalize_weights(Vec& weights) {
  KahanSum<double> acc;
  for (double w : weights) acc.add(w);
  const double total = acc.value();
  for (double& w : weights) w /= total;
}

// Chebyshev polynomials of the second kind are orthogonal for sqrt(1-u^2); their
// Gauss rule has closed-form nodes and weights (normalized to sum 1).
GaussRule gauss_chebyshev_second(int count) {
  GaussRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int j = 1; j <= count; ++j) {
    const double a = j * kPi / (count + 1);
    rule.nodes[j - 1] = std::cos(a);
    rule.weights[j - 1] = 2.0 / (count + 1) * std::sin(a) * std::sin(a);
  }
  return rule;
}

}  // namespace

QuadratureRule::QuadratureRule(std::size_t ambient_dim, Vec nodes, Vec weights)
    : dim_(ambient_dim), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (dim_ == 0 || nodes_.size() != dim_ * weights_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "node storage does not match weights");
  }
  for (double w : weights_) {
    if (!(w > 0.0)) throw Error(ErrorCode::kInvalidArgument, "quadrature weights must be positive");
  }
}

GaussRule gauss_legendre(int count) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "Gauss-Legendre needs >= 1 node");
  GaussRule rule;
  rule.nodes.assign(count, 0.0);
  rule.weights.assign(count, 0.0);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= count; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = count * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[count - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[count - 1 - i] = w;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.0;
  return rule;
}

QuadratureRule sphere_rule(int n, int resolution) {
  if (resolution < 4) throw Error(ErrorCode::kInvalidArgument, "sphere rule resolution must be >= 4");
  switch (n) {
    case 1: {
      Vec nodes, weights;
      nodes.reserve(2 * resolution);
      for (int m = 0; m < resolution; ++m) {
        const double a = 2.0 * kPi * m / resolution;
        nodes.push_back(std::cos(a));
        nodes.push_back(std::sin(a));
        weights.push_back(1.0 / resolution);
      }
      return {2, std::move(nodes), std::move(weights)};
    }
    case 2: {
      const GaussRule gl = gauss_legendre(resolution);
      const int azimuths = 2 * resolution;
      Vec nodes, weights;
      nodes.reserve(3 * resolution * azimuths);
      weights.reserve(resolution * azimuths);
      for (int i = 0; i < resolution; ++i) {
        const double u = gl.nodes[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        for (int m = 0; m < azimuths; ++m) {
          const double a = 2.0 * kPi * m / azimuths;
          nodes.push_back(s * std::cos(a));
          nodes.push_back(s * std::sin(a));
          nodes.push_back(u);
          weights.push_back(0.5 * gl.weights[i] / azimuths);
        }
      }
      normalize_weights(weights);
      return {3, std::move(nodes), std::move(weights)};
    }
    case 3: {
      const GaussRule polar = gauss_chebyshev_second(resolution);
      const QuadratureRule s2 = sphere_rule(2, resolution);
      Vec nodes, weights;
      nodes.reserve(4 * polar.nodes.size() * s2.size());
      for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
        const double u = polar.nodes[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        for (std::size_t m = 0; m < s2.size(); ++m) {
          const auto p = s2.node(m);
          nodes.push_back(s * p[0]);
          nodes.push_back(s * p[1]);
          nodes.push_back(s * p[2]);
          nodes.push_back(u);
          weights.push_back(polar.weights[i] * s2.weights()[m]);
        }
      }
      normalize_weights(weights);
      return {4, std::move(nodes), std::move(weights)};
    }
    default:
      // Higher n would recurse the same way with Gauss-Gegenbauer weights (1-u^2)^{(n-2)/2}.
      throw Error(ErrorCode::kUnsupportedDim, "sphere_rule supports n in {1,2,3}, got " + std::to_string(n));
  }
}

QuadratureRule pole_adapted_rule(const SpherePoint& axis, int polar_nodes, int transverse_res,
                                 std::span<const double> secondary, int azimuth_res) {
  const int n = axis.n();
  if (n < 1 || n > 3) throw Error(ErrorCode::kUnsupportedDim, "pole_adapted_rule supports n in {1,2,3}");
  if (polar_nodes < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 polar nodes");
  const FiberFrame frame = fiber_frame(axis);
  const std::size_t dim = axis.ambient_dim();

  // Transverse unit directions ω in the frame basis, with weights summing to 1.
  std::vector<Vec> omegas;
  Vec omega_weights;
  if (n == 1) {
    omegas = {{1.0}, {-1.0}};
    omega_weights = {0.5, 0.5};
  } else if (n == 2) {
    for (int m = 0; m < transverse_res; ++m) {
      const double a = 2.0 * kPi * m / transverse_res;
      omegas.push_back({std::cos(a), std::sin(a)});
      omega_weights.push_back(1.0 / transverse_res);
    }
  } else if (!secondary.empty()) {
    // e = secondary in frame coordinates, completed to an orthonormal triple.
    Vec e(3);
    for (std::size_t j = 0; j < 3; ++j) e[j] = dot(frame.basis[j], secondary);
    const double len = norm(e);
    if (len < 1e-12 || azimuth_res < 1) throw Error(ErrorCode::kInvalidArgument, "bad secondary direction");
    for (double& c : e) c /= len;
    const FiberFrame around = fiber_frame(SpherePoint(e));
    const GaussRule psi = gauss_legendre(std::max(2, transverse_res));
    for (std::size_t i = 0; i < psi.nodes.size(); ++i) {
      const double angle = 0.5 * kPi * (1.0 + psi.nodes[i]);
      const double c = std::cos(angle), s = std::sin(angle);
      for (int m = 0; m < azimuth_res; ++m) {
        const double a = 2.0 * kPi * m / azimuth_res;
        Vec u(3);
        for (std::size_t j = 0; j < 3; ++j) {
          u[j] = c * e[j] + s * (std::cos(a) * around.basis[0][j] + std::sin(a) * around.basis[1][j]);
        }
        omegas.push_back(std::move(u));
        omega_weights.push_back(s * psi.weights[i] / azimuth_res);
      }
    }
  } else {
    const QuadratureRule s2 = sphere_rule(2, std::max(4, transverse_res / 2));
    for (std::size_t m = 0; m < s2.size(); ++m) {
      const auto p = s2.node(m);
      omegas.emplace_back(p.begin(), p.end());
      omega_weights.push_back(s2.weights()[m]);
    }
  }
  std::vector<Vec> directions;
  directions.reserve(omegas.size());
  for (const Vec& u : omegas) directions.push_back(frame.direction(u));

  const GaussRule gl = gauss_legendre(polar_nodes);
  Vec nodes, weights;
  nodes.reserve(dim * polar_nodes * directions.size());
  weights.reserve(polar_nodes * directions.size());
  for (int i = 0; i < polar_nodes; ++i) {
    const double theta = 0.5 * kPi * (1.0 + gl.nodes[i]);
    const double c = std::cos(theta), s = std::sin(theta);
    const double density = std::pow(s, n - 1) * gl.weights[i];
    for (std::size_t m = 0; m < directions.size(); ++m) {
      for (std::size_t j = 0; j < dim; ++j) nodes.push_back(c * axis[j] + s * directions[m][j]);
      weights.push_back(density * omega_weights[m]);
    }
  }
  normalize_weights(weights);
  return {dim, std::move(nodes), std::move(weights)};
}

FiberRule::FiberRule(FiberFrame frame, std::vector<Vec> coefficients, Vec weights)
    : frame_(std::move(frame)), coefficients_(std::move(coefficients)), weights_(std::move(weights)) {}

FiberRule fiber_rule(const FiberFrame& frame, int resolution) {
  const int n = frame.base.n();
  std::vector<Vec> coefficients;
  Vec weights;
  switch (n) {
    case 1:
      coefficients = {{1.0}, {-1.0}};
      weights = {0.5, 0.5};
      break;
    case 2:
      if (resolution < 4) throw Error(ErrorCode::kInvalidArgument, "fiber resolution must be >= 4");
      for (int m = 0; m < resolution; ++m) {
        const double a = 2.0 * kPi * m / resolution;
        coefficients.push_back({std::cos(a), std::sin(a)});
        weights.push_back(1.0 / resolution);
      }
      break;
    case 3: {
      const QuadratureRule s2 = sphere_rule(2, resolution);
      for (std::size_t m = 0; m < s2.size(); ++m) {
        const auto p = s2.node(m);
        coefficients.emplace_back(p.begin(), p.end());
      }
      weights.assign(s2.weights().begin(), s2.weights().end());
      break;
    }
    default:
      throw Error(ErrorCode::kUnsupportedDim, "fiber_rule supports n in {1,2,3}, got " + std::to_string(n));
  }
  return {frame, std::move(coefficients), std::move(weights)};
}

CircleRule circle_rule(int count) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "circle rule needs >= 1 angle");
  CircleRule rule;
  rule.angles.resize(count);
  for (int m = 0; m < count; ++m) rule.angles[m] = 2.0 * kPi * m / count;
  rule.weight = 1.0 / count;
  return rule;
}

std::vector<cdouble> dft(std::span<const cdouble> samples) {
  const std::size_t count = samples.size();
  std::vector<cdouble> twiddle(count);
  for (std::size_t m = 0; m < count; ++m) {
    const double a = -2.0 * kPi * static_cast<double>(m) / static_cast<double>(count);
    twiddle[m] = {std::cos(a), std::sin(a)};
  }
  std::vector<cdouble> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    KahanSum<cdouble> acc;
    for (std::size_t m = 0; m < count; ++m) acc.add(samples[m] * twiddle[(k * m) % count]);
    out[k] = acc.value() / static_cast<double>(count);
  }
  return out;
}

}  // namespace horo
