#include "wavelab/symbols.hpp"

#include <algorithm>
#include <cmath>

namespace wavelab {

BilinearSymbol power_symbol(int dim, double m) {
  BilinearSymbol s;
  s.dim = dim;
  s.eval = [dim, m](Point xi, Point eta) {
    double q = 1.0 + norm2(xi, dim) + norm2(eta, dim);
    return cplx(std::pow(q, 0.5 * m), 0.0);
  };
  return s;
}

BilinearSymbol dyadic_test_symbol(int dim, double m, int j,
                                  const RadialBump& theta) {
  const double amp = std::exp2(j * m);
  auto factor = [dim, j, theta](Point p) {
    return cplx(theta(std::ldexp(rho(p, dim), -j)), 0.0);
  };
  BilinearSymbol s;
  s.dim = dim;
  s.eval = [factor, amp](Point xi, Point eta) {
    return amp * factor(xi) * factor(eta);
  };
  s.separable.push_back(
      {[factor, amp](Point xi) { return amp * factor(xi); }, factor});
  return s;
}

double SeminormReport::max_ratio() const {
  double r = 0.0;
  for (const auto& e : entries) r = std::max(r, e.sup_ratio);
  return r;
}

namespace {

// Iterated central difference of sigma along the axes listed in `axes`
// (axis < dim acts on xi, axis >= dim on eta), step h on every axis.
cplx diff_cplx(const BilinearSymbol& s, Point xi, Point eta,
               const std::vector<int>& axes, std::size_t k, double h) {
  if (k == axes.size()) return s.eval(xi, eta);
  int ax = axes[k];
  Point xp = xi, xm = xi, ep = eta, em = eta;
  if (ax < s.dim) {
    xp[ax] += h;
    xm[ax] -= h;
    return (diff_cplx(s, xp, eta, axes, k + 1, h) -
            diff_cplx(s, xm, eta, axes, k + 1, h)) /
           (2.0 * h);
  }
  ep[ax - s.dim] += h;
  em[ax - s.dim] -= h;
  return (diff_cplx(s, xi, ep, axes, k + 1, h) -
          diff_cplx(s, xi, em, axes, k + 1, h)) /
         (2.0 * h);
}

// All multisets of axes drawn from {0 .. nax-1} with the given size.
void enumerate_multisets(int nax, int size, int start, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int a = start; a < nax; ++a) {
    cur.push_back(a);
    enumerate_multisets(nax, size, a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SeminormReport symbol_seminorm(const BilinearSymbol& sigma, double m,
                               int max_order) {
  if (max_order > 4)
    throw std::invalid_argument("seminorm probing supports orders <= 4");
  const int n = sigma.dim;
  const int nax = 2 * n;

  // Probe set: log-spaced total radii, fixed deterministic direction pairs.
  const int n_radii = 32, n_dirs = 16;
  std::vector<double> radii(n_radii);
  for (int i = 0; i < n_radii; ++i)
    radii[i] = 0.5 * std::pow(200.0, i / double(n_radii - 1));  // 0.5 .. 100

  struct Probe {
    Point xi, eta;
    double scale;  // 1 + |xi| + |eta|
  };
  std::vector<Probe> probes;
  const double golden = 2.399963229728653;  // golden angle
  for (int i = 0; i < n_radii; ++i) {
    for (int d = 0; d < n_dirs; ++d) {
      double t1 = golden * d, t2 = golden * (d + 7) + 1.0;
      double split = 0.15 + 0.7 * ((d * 5) % n_dirs) / double(n_dirs);
      double r1 = radii[i] * split, r2 = radii[i] * (1.0 - split);
      Point xi, eta;
      if (n == 2) {
        xi = {r1 * std::cos(t1), r1 * std::sin(t1)};
        eta = {r2 * std::cos(t2), r2 * std::sin(t2)};
      } else {
        xi = {(d % 2 ? r1 : -r1), 0.0};
        eta = {((d / 2) % 2 ? r2 : -r2), 0.0};
      }
      probes.push_back({xi, eta, 1.0 + r1 + r2});
    }
  }

  SeminormReport rep;
  rep.m = m;
  for (int total = 0; total <= max_order; ++total) {
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    enumerate_multisets(nax, total, 0, cur, multisets);
    for (const auto& axes : multisets) {
      int oxi = 0;
      for (int a : axes)
        if (a < n) ++oxi;
      SeminormEntry entry;
      entry.order_xi = oxi;
      entry.order_eta = total - oxi;
      double sup_inner = 0.0, sup_outer = 0.0, sup_all = 0.0;
      bool stable = true;
      for (std::size_t pi = 0; pi < probes.size(); ++pi) {
        const Probe& pr = probes[pi];
        double weight = std::pow(pr.scale, -m + total);
        double est;
        if (total == 0) {
          est = std::abs(sigma.eval(pr.xi, pr.eta));
        } else {
          double h = 0.02 * pr.scale;
          cplx dh = diff_cplx(sigma, pr.xi, pr.eta, axes, 0, h);
          cplx dh2 = diff_cplx(sigma, pr.xi, pr.eta, axes, 0, 0.5 * h);
          cplx rich = (4.0 * dh2 - dh) / 3.0;
          est = std::abs(rich);
          double drift = std::abs(rich - dh);
          if (drift > 0.25 * std::abs(rich) + 1e-9 * std::pow(pr.scale, m))
            stable = false;
        }
        if (!std::isfinite(est)) stable = false;
        double ratio = est * weight;
        sup_all = std::max(sup_all, ratio);
        bool outer = pr.scale > 1.0 + radii[n_radii / 2];
        (outer ? sup_outer : sup_inner) = std::max(outer ? sup_outer : sup_inner, ratio);
      }
      // Growth of the weighted ratio with the probe radius signals an order
      // mismatch rather than finite-difference noise.
      if (sup_outer > 2.0 * sup_inner + 1e-12) stable = false;
      entry.sup_ratio = sup_all;
      entry.stable = stable;
      rep.entries.push_back(entry);
      if (!stable) rep.in_class = false;
    }
  }
  return rep;
}

}  // namespace wavelab
