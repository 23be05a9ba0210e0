#include "horo/geometry.hpp"

#include <cmath>
#include <string>

#include "horo/error.hpp"

namespace horo {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

SpherePoint::SpherePoint(Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw Error(ErrorCode::kDimensionMismatch, "sphere point needs at least 2 coordinates");
  }
  const double r = norm(coords_);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::kZeroVector, "cannot normalize a zero or non-finite vector");
  }
  for (double& c : coords_) c /= r;
}

cdouble ConePoint::delta() const {
  return {dot(re_, re_) - dot(im_, im_), 2.0 * dot(re_, im_)};
}

double ConePoint::sup_h() const { return norm(re_); }

std::vector<cdouble> ConePoint::components() const {
  std::vector<cdouble> out(re_.size());
  for (std::size_t j = 0; j < re_.size(); ++j) out[j] = {re_[j], im_[j]};
  return out;
}

ConePoint make_cone_point(Vec xi, Vec eta, const Tolerances& tol) {
  if (xi.size() != eta.size() || xi.size() < 2) {
    throw Error(ErrorCode::kDimensionMismatch, "real and imaginary parts must have equal length >= 2");
  }
  const double nxi = dot(xi, xi);
  const double neta = dot(eta, eta);
  const double scale = nxi + neta;
  if (!(scale > 0.0)) throw Error(ErrorCode::kZeroVector, "zeta = 0 is not a cone point");
  const double mismatch = std::abs(nxi - neta);
  const double cross = std::abs(dot(xi, eta));
  if (mismatch > tol.cone * scale || cross > tol.cone * scale) {
    throw Error(ErrorCode::kInvalidCone, "Delta(xi) - Delta(eta) = " + std::to_string(nxi - neta) +
                                             ", xi.eta = " + std::to_string(dot(xi, eta)));
  }
  return ConePoint(std::move(xi), std::move(eta));
}

ConePoint make_cone_point(std::span<const cdouble> zeta, const Tolerances& tol) {
  Vec re(zeta.size()), im(zeta.size());
  for (std::size_t j = 0; j < zeta.size(); ++j) {
    re[j] = zeta[j].real();
    im[j] = zeta[j].imag();
  }
  return make_cone_point(std::move(re), std::move(im), tol);
}

ConePoint make_cone_point_unchecked(Vec xi, Vec eta) { return ConePoint(std::move(xi), std::move(eta)); }

cdouble h(std::span<const double> x, const ConePoint& zeta) {
  if (x.size() != zeta.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "point and cone point dimensions differ");
  }
  return {dot(zeta.re(), x), dot(zeta.im(), x)};
}

bool in_xi_plus(const ConePoint& zeta, double margin) { return zeta.delta_re() < 1.0 - margin; }

bool on_boundary(const ConePoint& zeta, double tol) { return std::abs(zeta.delta_re() - 1.0) <= tol; }

ConePoint fiber_point(const SpherePoint& x, std::span<const double> eta, const Tolerances& tol) {
  if (eta.size() != x.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "eta has the wrong length");
  }
  const double ortho = dot(x.coords(), eta);
  const double len = norm(eta);
  if (std::abs(ortho) > tol.fiber || std::abs(len - 1.0) > tol.fiber) {
    throw Error(ErrorCode::kNotInFiber,
                "need x.eta = 0 and |eta| = 1, got x.eta = " + std::to_string(ortho) +
                    ", |eta| = " + std::to_string(len));
  }
  return make_cone_point_unchecked(Vec(x.coords().begin(), x.coords().end()), Vec(eta.begin(), eta.end()));
}

Vec FiberFrame::direction(std::span<const double> u) const {
  Vec eta(base.ambient_dim(), 0.0);
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += u[j] * basis[j][i];
  }
  return eta;
}

ConePoint FiberFrame::point(std::span<const double> u) const {
  return make_cone_point_unchecked(Vec(base.coords().begin(), base.coords().end()), direction(u));
}

FiberFrame fiber_frame(const SpherePoint& x) {
  const std::size_t dim = x.ambient_dim();
  Vec v(x.coords().begin(), x.coords().end());
  v[0] -= 1.0;
  const double vv = dot(v, v);
  std::vector<Vec> basis;
  basis.reserve(dim - 1);
  // H = I - 2 v v^T / |v|^2 maps e_1 to x; its remaining columns span x^⊥.
  const bool identity = std::sqrt(vv) < 1e-8;
  for (std::size_t j = 1; j < dim; ++j) {
    Vec col(dim, 0.0);
    col[j] = 1.0;
    if (!identity) {
      const double s = 2.0 * v[j] / vv;
      for (std::size_t i = 0; i < dim; ++i) col[i] -= s * v[i];
    }
    basis.push_back(std::move(col));
  }
  return FiberFrame{x, std::move(basis)};
}

ConePoint scale_act(const ConePoint& zeta, cdouble a) {
  if (a == cdouble{0.0, 0.0}) throw Error(ErrorCode::kZeroScale, "a = 0 does not act on the cone");
  const std::size_t dim = zeta.ambient_dim();
  Vec re(dim), im(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const cdouble z = a * zeta[j];
    re[j] = z.real();
    im[j] = z.imag();
  }
  return make_cone_point_unchecked(std::move(re), std::move(im));
}

}  // namespace horo
