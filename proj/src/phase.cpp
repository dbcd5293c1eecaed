#include "wavelab/phase.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

WavePhase WavePhase::euclidean(int dim) {
  WavePhase p(Kind::euclidean, dim);
  p.grad_sup_ = 1.0;
  return p;
}

WavePhase WavePhase::ellipse(std::array<std::array<double, 2>, 2> A) {
  if (A[0][1] != A[1][0] || A[0][0] <= 0.0 ||
      A[0][0] * A[1][1] - A[0][1] * A[1][0] <= 0.0)
    throw std::invalid_argument("ellipse matrix must be symmetric positive definite");
  WavePhase p(Kind::ellipse, 2);
  p.A_ = A;
  p.compute_gradient_sup();
  return p;
}

WavePhase WavePhase::linear(int dim, Point v) {
  double n = rho(v, dim);
  if (n == 0.0) throw std::invalid_argument("linear phase direction must be nonzero");
  WavePhase p(Kind::linear, dim);
  p.v_ = v;
  p.grad_sup_ = n;
  return p;
}

WavePhase WavePhase::none(int dim) {
  WavePhase p(Kind::linear, dim);
  p.zero_ = true;
  p.v_ = {0.0, 0.0};
  p.grad_sup_ = 0.0;
  return p;
}

double WavePhase::operator()(Point xi) const {
  if (zero_) return 0.0;
  switch (kind_) {
    case Kind::euclidean:
      return rho(xi, dim_);
    case Kind::ellipse: {
      double q = A_[0][0] * xi[0] * xi[0] + 2.0 * A_[0][1] * xi[0] * xi[1] +
                 A_[1][1] * xi[1] * xi[1];
      return std::sqrt(q);
    }
    case Kind::linear:
      return v_[0] * xi[0] + v_[1] * xi[1];
  }
  return 0.0;
}

Point WavePhase::gradient(Point xi) const {
  if (zero_) return {0.0, 0.0};
  switch (kind_) {
    case Kind::euclidean: {
      double r = rho(xi, dim_);
      if (r == 0.0) return {0.0, 0.0};
      return {xi[0] / r, dim_ == 2 ? xi[1] / r : 0.0};
    }
    case Kind::ellipse: {
      double phi = (*this)(xi);
      if (phi == 0.0) return {0.0, 0.0};
      return {(A_[0][0] * xi[0] + A_[0][1] * xi[1]) / phi,
              (A_[1][0] * xi[0] + A_[1][1] * xi[1]) / phi};
    }
    case Kind::linear:
      return v_;
  }
  return {0.0, 0.0};
}

void WavePhase::compute_gradient_sup() {
  // Coarse sweep of the unit circle, then golden-section refinement around
  // the best sample.
  auto g = [&](double t) {
    Point xi{std::cos(t), std::sin(t)};
    Point gr = gradient(xi);
    return std::hypot(gr[0], gr[1]);
  };
  const int n = 512;
  double best_t = 0.0, best = -1.0;
  for (int i = 0; i < n; ++i) {
    double t = 2.0 * kPi * i / n;
    double v = g(t);
    if (v > best) { best = v; best_t = t; }
  }
  double lo = best_t - 2.0 * kPi / n, hi = best_t + 2.0 * kPi / n;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  for (int it = 0; it < 80; ++it) {
    if (g(c) > g(d)) { hi = d; } else { lo = c; }
    c = hi - gr * (hi - lo);
    d = lo + gr * (hi - lo);
  }
  grad_sup_ = g(0.5 * (lo + hi));
}

}  // namespace wavelab
