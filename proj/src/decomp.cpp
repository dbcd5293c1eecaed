#include "wavelab/decomp.hpp"

#include "wavelab/operators.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace wavelab {

namespace {

// Sum over the (at most two) dyadic shells containing r of
// psi_j(r) * weight(j); `weight` encodes the flag region.
template <class W>
double shell_sum(const DyadicPartition& part, double r, W weight) {
  if (r <= 0.0) return 0.0;
  int jc = static_cast<int>(std::floor(std::log2(r)));
  double acc = 0.0;
  for (int j = jc - 1; j <= jc + 2; ++j) {
    double p = part.psi_at(j, r);
    if (p != 0.0) acc += p * weight(j);
  }
  return acc;
}

}  // namespace

FlagSplit flag_split(const BilinearSymbol& sigma, const DyadicPartition& part) {
  const int dim = sigma.dim;
  auto weight_I = [part, dim](Point xi, Point eta) {
    // sum_j psi_j(|xi|) sum_{k<j} psi_k(|eta|); the inner sum telescopes to
    // lowpass(2^{-j+1}|eta|).
    double re = rho(eta, dim);
    return shell_sum(part, rho(xi, dim), [&](int j) {
      return part.lowpass(std::ldexp(re, -j + 1));
    });
  };
  auto weight_II = [part, dim](Point xi, Point eta) {
    double re = rho(eta, dim);
    return shell_sum(part, rho(xi, dim),
                     [&](int j) { return part.psi_at(j, re); });
  };
  auto weight_III = [weight_I](Point xi, Point eta) {
    return weight_I(eta, xi);
  };

  FlagSplit split;
  split.I.dim = split.II.dim = split.III.dim = dim;
  split.I.eval = [sigma, weight_I](Point xi, Point eta) {
    return sigma.eval(xi, eta) * weight_I(xi, eta);
  };
  split.II.eval = [sigma, weight_II](Point xi, Point eta) {
    return sigma.eval(xi, eta) * weight_II(xi, eta);
  };
  split.III.eval = [sigma, weight_III](Point xi, Point eta) {
    return sigma.eval(xi, eta) * weight_III(xi, eta);
  };
  return split;
}

AngularFrame make_angular_frame(int j) {
  if (j < 2) throw std::invalid_argument("make_angular_frame: j >= 2");
  AngularFrame fr;
  fr.j = j;
  fr.count = static_cast<int>(std::ceil(2.0 * kPi * std::exp2(0.5 * j)));
  fr.gap = 2.0 * kPi / fr.count;
  fr.angles.resize(fr.count);
  fr.centers.resize(fr.count);
  for (int nu = 0; nu < fr.count; ++nu) {
    fr.angles[nu] = nu * fr.gap;
    fr.centers[nu] = {std::cos(fr.angles[nu]), std::sin(fr.angles[nu])};
  }
  return fr;
}

namespace {
const DyadicPartition& shared_partition() {
  static const DyadicPartition part = make_dyadic_partition();
  return part;
}

// Smooth periodic bump in angle, width measured in units of the frame gap:
// 1 for |t| <= 1, 0 for |t| >= 2.
double angle_window(double t) { return shared_partition().lowpass(std::abs(t)); }

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a > kPi) a -= 2.0 * kPi;
  if (a < -kPi) a += 2.0 * kPi;
  return a;
}
}  // namespace

double AngularFrame::partition_sum(Point xi) const {
  double r = rho(xi, 2);
  if (r == 0.0) return 0.0;
  double alpha = std::atan2(xi[1], xi[0]);
  // only the <= 4 nearest centers contribute
  int base = static_cast<int>(std::floor(alpha / gap));
  double s = 0.0;
  for (int d = -2; d <= 2; ++d) {
    int nu = ((base + d) % count + count) % count;
    s += angle_window(wrap_angle(alpha - angles[nu]) / gap);
  }
  return s;
}

double AngularFrame::chi(int nu, Point xi) const {
  double r = rho(xi, 2);
  if (r == 0.0) return 0.0;
  double alpha = std::atan2(xi[1], xi[0]);
  double w = angle_window(wrap_angle(alpha - angles[nu]) / gap);
  if (w == 0.0) return 0.0;
  return w / partition_sum(xi);
}

AngularPieceReport angular_piece_bounds(const AngularFrame& frame,
                                        const WavePhase& phi, int n_sample) {
  const int j = frame.j;
  const int n = 2;
  const double box = 3.0;
  int N = 64;
  while (kNyquistGuard * kPi * N / box < std::exp2(j + 1) * 1.05) N *= 2;
  GridSpec grid = make_grid(n, N, box);
  const DyadicPartition& part = shared_partition();

  AngularPieceReport rep;
  rep.j = j;
  const double amp = std::exp2(0.5 * j * (n + 1));
  const double envelope_N = 2.0;
  for (int s = 0; s < n_sample; ++s) {
    int nu = (s * frame.count) / n_sample;
    rep.sampled.push_back(nu);
    Field piece = synthesize_frequency(
        [&](Point xi) {
          double r = rho(xi, n);
          double cut = part.psi_at(j, r) * frame.chi(nu, xi);
          if (cut == 0.0) return cplx(0.0, 0.0);
          return std::exp(cplx(0.0, -phi(xi))) * cut;
        },
        Band{std::exp2(j - 1), std::exp2(j + 1)}, grid);

    Point x0 = phi.gradient(frame.centers[nu]);
    Point dir = frame.centers[nu];
    double l1 = 0.0, peak = 0.0, cmax = 0.0;
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      double v = std::abs(piece[i]);
      l1 += v;
      if (v > peak) {
        peak = v;
        argmax = i;
      }
      Point x = grid.point_at(i);
      double dx0 = x[0] - x0[0], dx1 = x[1] - x0[1];
      double lng = dx0 * dir[0] + dx1 * dir[1];
      double trn = -dx0 * dir[1] + dx1 * dir[0];
      double env = std::pow(1.0 + std::exp2(j) * std::abs(lng), envelope_N) *
                   std::pow(1.0 + std::exp2(0.5 * j) * std::abs(trn),
                            envelope_N);
      cmax = std::max(cmax, v / amp * env);
    }
    rep.l1_norms.push_back(l1 * std::pow(grid.dx(), n));
    Point xm = grid.point_at(argmax);
    double off = std::hypot(xm[0] - x0[0], xm[1] - x0[1]);
    rep.max_peak_offset =
        std::max(rep.max_peak_offset, off * std::exp2(0.5 * j));
    rep.envelope_C = std::max(rep.envelope_C, cmax);
  }
  double mean = 0.0;
  for (double v : rep.l1_norms) mean += v;
  mean /= static_cast<double>(rep.l1_norms.size());
  rep.sum_l1_estimate = mean * frame.count;
  rep.ok = rep.envelope_C < 1e6;
  return rep;
}

namespace {

// Centered-cell DFT: c_a = (1/M^d) sum_p B_p e^{-i a . xi_p} with
// xi_p = (p - M/2) 2pi/M, equal to (-1)^{sum a} times the plain FFT output.
std::vector<cplx> cell_dft(std::vector<cplx>& data, int rank, int M) {
  std::vector<int> dims(rank, M);
  std::vector<cplx> out(data.size());
  fftw_plan plan = fftw_plan_dft(
      rank, dims.data(), reinterpret_cast<fftw_complex*>(data.data()),
      reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
      FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  double scale = 1.0 / std::pow(double(M), rank);
  for (cplx& v : out) v *= scale;
  return out;
}

}  // namespace

cplx SeparableExpansion::eval_cell(Point xi, Point eta) const {
  cplx acc(0.0, 0.0);
  for (const ExpansionMode& mo : modes) {
    double ph = mo.a[0] * xi[0] + mo.b[0] * eta[0];
    if (dim == 2) ph += mo.a[1] * xi[1] + mo.b[1] * eta[1];
    acc += mo.coeff * std::exp(cplx(0.0, ph));
  }
  return acc;
}

SeparableExpansion fourier_symbol_expansion(const BilinearSymbol& sigma, int j,
                                            int k, int radius, int samples) {
  const int n = sigma.dim;
  const int rank = 2 * n;
  const int M = samples;
  if (M < 4 * radius)
    throw std::invalid_argument(
        "fourier_symbol_expansion: samples must exceed 4 * radius");
  const RadialBump wide = make_wide_bump();

  SeparableExpansion exp;
  exp.dim = n;
  exp.j = j;
  exp.k = k;
  exp.radius = radius;
  exp.samples = M;

  const double h = 2.0 * kPi / M;
  auto coord = [&](int p) { return (p - M / 2) * h; };

  std::size_t total = 1;
  for (int d = 0; d < rank; ++d) total *= static_cast<std::size_t>(M);
  std::vector<cplx> data(total);
  std::vector<int> idx(rank, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int d = rank - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(rem % M);
      rem /= M;
    }
    Point xi = {coord(idx[0]), n == 2 ? coord(idx[1]) : 0.0};
    Point eta = {coord(idx[n]), n == 2 ? coord(idx[n + 1]) : 0.0};
    double cut = wide(rho(xi, n)) * wide(rho(eta, n));
    if (cut == 0.0) {
      data[flat] = 0.0;
      continue;
    }
    Point xs = {std::exp2(j) * xi[0], std::exp2(j) * xi[1]};
    Point es = {std::exp2(k) * eta[0], std::exp2(k) * eta[1]};
    data[flat] = sigma.eval(xs, es) * cut;
  }
  std::vector<cplx> coeff = cell_dft(data, rank, M);

  // Retained modes, plus the exact l1 mass of everything dropped (tail bound)
  // and per-shell maxima for the decay fits.
  std::map<int, double> shell_max_a, shell_max_b;
  const int half = M / 2;
  std::vector<int> mode(rank);
  for (std::size_t flat = 0; flat < total; ++flat) {
    double mag = std::abs(coeff[flat]);
    if (mag == 0.0) continue;
    std::size_t rem = flat;
    for (int d = rank - 1; d >= 0; --d) {
      int raw = static_cast<int>(rem % M);
      rem /= M;
      mode[d] = raw >= half ? raw - M : raw;  // lattice mode in [-M/2, M/2)
    }
    int ga = 0, gb = 0, parity = 0;
    for (int d = 0; d < n; ++d) ga = std::max(ga, std::abs(mode[d]));
    for (int d = n; d < rank; ++d) gb = std::max(gb, std::abs(mode[d]));
    for (int d = 0; d < rank; ++d) parity += mode[d];

    auto& sa = shell_max_a[ga];
    sa = std::max(sa, mag);
    auto& sb = shell_max_b[gb];
    sb = std::max(sb, mag);

    if (ga <= radius && gb <= radius) {
      ExpansionMode mo;
      mo.a = {mode[0], n == 2 ? mode[1] : 0};
      mo.b = {mode[n], n == 2 ? mode[n + 1] : 0};
      mo.coeff = (parity & 1) ? -coeff[flat] : coeff[flat];
      exp.modes.push_back(mo);
      exp.max_coeff = std::max(exp.max_coeff, mag);
    } else {
      exp.tail_bound += mag;
    }
  }

  auto fit_shells = [](const std::map<int, double>& shells) {
    std::vector<double> lv, val;
    for (const auto& [s, m] : shells) {
      if (m <= 0.0) continue;
      lv.push_back(std::log2(1.0 + s));
      val.push_back(m);
    }
    return fit_exponent(lv, val);
  };
  exp.decay_a = fit_shells(shell_max_a);
  exp.decay_b = fit_shells(shell_max_b);
  if (-exp.decay_a.slope < 1.0 || -exp.decay_b.slope < 1.0)
    throw std::runtime_error(
        "fourier_symbol_expansion: coefficient decay slower than "
        "(1+|mode|)^{-1}; symbol too rough for a separable expansion");
  return exp;
}

BilinearSymbol expansion_to_symbol(const SeparableExpansion& exp) {
  const int n = exp.dim;
  const double sj = std::exp2(-exp.j), sk = std::exp2(-exp.k);
  const RadialBump wide = make_wide_bump();
  BilinearSymbol sym;
  sym.dim = n;
  sym.tail_bound = exp.tail_bound;
  for (const ExpansionMode& mo : exp.modes) {
    auto u = [mo, sj, wide, n](Point xi) {
      double ph = mo.a[0] * sj * xi[0];
      if (n == 2) ph += mo.a[1] * sj * xi[1];
      return mo.coeff * std::exp(cplx(0.0, ph)) * wide(sj * rho(xi, n));
    };
    auto v = [mo, sk, wide, n](Point eta) {
      double ph = mo.b[0] * sk * eta[0];
      if (n == 2) ph += mo.b[1] * sk * eta[1];
      return std::exp(cplx(0.0, ph)) * wide(sk * rho(eta, n));
    };
    sym.separable.push_back({u, v});
  }
  sym.eval = [terms = sym.separable](Point xi, Point eta) {
    cplx acc(0.0, 0.0);
    for (const auto& t : terms) acc += t.u(xi) * t.v(eta);
    return acc;
  };
  return sym;
}

}  // namespace wavelab
