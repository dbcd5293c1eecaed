#include "wavelab/norms.hpp"

#include "wavelab/cutoffs.hpp"
#include "wavelab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wavelab {

double lp_norm(const Field& f, double p) {
  if (f.side() != Side::physical)
    throw std::invalid_argument("lp_norm: physical-side field expected");
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p > 0 required");
  const GridSpec& g = f.grid();
  if (std::isinf(p)) {
    double sup = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
      sup = std::max(sup, std::abs(f[i]));
    return sup;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    acc += std::pow(std::abs(f[i]), p);
  return std::pow(acc * std::pow(g.dx(), g.dim), 1.0 / p);
}

double bmo_norm(const Field& f, int max_depth) {
  if (f.side() != Side::physical)
    throw std::invalid_argument("bmo_norm: physical-side field expected");
  const GridSpec& g = f.grid();
  const int N = g.samples;
  int logN = 0;
  while ((1 << (logN + 1)) <= N) ++logN;
  if (max_depth < 0) max_depth = logN - 2;
  max_depth = std::min(max_depth, logN - 2);

  double sup = 0.0;
  for (int depth = 0; depth <= max_depth; ++depth) {
    const int shift = logN - depth;            // grid cells per cube, log2
    const int cubes = 1 << depth;              // per axis
    const std::size_t ncubes =
        g.dim == 2 ? static_cast<std::size_t>(cubes) * cubes
                   : static_cast<std::size_t>(cubes);
    std::vector<cplx> mean(ncubes, cplx(0.0, 0.0));
    std::vector<std::size_t> count(ncubes, 0);
    auto cube_of = [&](std::size_t id) {
      auto ij = g.unravel(id);
      std::size_t c0 = static_cast<std::size_t>(ij[0] >> shift);
      if (g.dim == 1) return c0;
      return c0 * cubes + static_cast<std::size_t>(ij[1] >> shift);
    };
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::size_t c = cube_of(i);
      mean[c] += f[i];
      ++count[c];
    }
    for (std::size_t c = 0; c < ncubes; ++c) mean[c] /= double(count[c]);
    std::vector<double> osc(ncubes, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::size_t c = cube_of(i);
      osc[c] += std::abs(f[i] - mean[c]);
    }
    for (std::size_t c = 0; c < ncubes; ++c)
      sup = std::max(sup, osc[c] / double(count[c]));
  }
  return sup;
}

double h1_norm(const Field& f) {
  if (f.side() != Side::physical)
    throw std::invalid_argument("h1_norm: physical-side field expected");
  const GridSpec& g = f.grid();
  static const DyadicPartition part = make_dyadic_partition();
  const int n = g.dim;

  std::vector<double> maximal(f.size(), 0.0);
  for (double t = g.dx(); t <= 0.25 * g.box + 1e-12; t *= 2.0) {
    Field smooth = linear_multiplier_apply(
        [t, n](Point xi) { return cplx(part.lowpass(t * rho(xi, n)), 0.0); },
        f);
    for (std::size_t i = 0; i < f.size(); ++i)
      maximal[i] = std::max(maximal[i], std::abs(smooth[i]));
  }
  double acc = 0.0;
  for (double v : maximal) acc += v;
  return acc * std::pow(g.dx(), n);
}

double xr_norm(const Field& f, double r) {
  return std::isinf(r) ? bmo_norm(f) : lp_norm(f, r);
}

double operator_ratio(const Field& out, double out_p, const Field& f, double p,
                      const Field& g, double q) {
  double num = xr_norm(out, out_p);
  double den = xr_norm(f, p) * xr_norm(g, q);
  if (den < std::numeric_limits<double>::min()) return 0.0;
  return num / den;
}

}  // namespace wavelab
