#include "wavelab/kernels.hpp"

#include "wavelab/bessel.hpp"
#include "wavelab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wavelab {

namespace {

// J_{(n-2)/2}(s) s^{-(n-2)/2}; finite at s -> 0 for n >= 2, and for n = 1 it
// reduces to sqrt(2/pi) cos(s).
double radial_factor(int n, double s) {
  if (n == 1) return std::sqrt(2.0 / kPi) * std::cos(s);
  if (n == 2) return bessel_j(0.0, s);
  double nu = 0.5 * (n - 2);
  if (s < 1e-8) return std::pow(0.5, nu) / std::tgamma(nu + 1.0);
  return bessel_j(nu, s) * std::pow(s, -nu);
}

struct NodeSet {
  std::vector<double> t, w;
};

NodeSet layout_nodes(double a, double b, int panels, int order) {
  const GaussRule& rule = gauss_legendre(order);
  NodeSet ns;
  ns.t.reserve(static_cast<std::size_t>(panels) * order);
  ns.w.reserve(ns.t.capacity());
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h, half = 0.5 * h;
    for (int i = 0; i < order; ++i) {
      ns.t.push_back(mid + half * rule.nodes[i]);
      ns.w.push_back(rule.weights[i] * half);
    }
  }
  return ns;
}

}  // namespace

cplx KernelProfile::at(double r) const {
  if (r < radii.front() || r > radii.back())
    throw std::domain_error("KernelProfile::at: radius outside sampled range");
  auto it = std::upper_bound(radii.begin(), radii.end(), r);
  if (it == radii.end()) return values.back();
  std::size_t hi = static_cast<std::size_t>(it - radii.begin());
  std::size_t lo = hi - 1;
  double t = (r - radii[lo]) / (radii[hi] - radii[lo]);
  return values[lo] * (1.0 - t) + values[hi] * t;
}

KernelProfile radial_oscillatory_kernel(const std::function<double(double)>& g,
                                        double a, double b, int n,
                                        std::vector<double> radii,
                                        double check_scale) {
  if (radii.empty() || radii.front() <= 0.0 ||
      !std::is_sorted(radii.begin(), radii.end()))
    throw std::invalid_argument(
        "radial_oscillatory_kernel: radii must be positive increasing");

  const double r_max = radii.back();
  // Local phase speed of e^{-it} J((n-2)/2, rt) is at most 1 + r; require
  // >= 10 nodes per wavelength 2pi/(1+r) at the worst radius.
  const int order = 16;
  const double nodes_needed = 10.0 * (b - a) * (1.0 + r_max) / (2.0 * kPi);
  const int panels = std::max(4, static_cast<int>(nodes_needed / order) + 1);

  const double prefac = std::pow(2.0 * kPi, -0.5 * n);
  auto base = [&](const NodeSet& ns) {
    std::vector<cplx> v(ns.t.size());
    for (std::size_t i = 0; i < ns.t.size(); ++i) {
      double t = ns.t[i];
      v[i] = ns.w[i] * g(t) * std::exp(cplx(0.0, -t)) * std::pow(t, n - 1) *
             prefac;
    }
    return v;
  };
  NodeSet coarse = layout_nodes(a, b, panels, order);
  NodeSet fine = layout_nodes(a, b, 2 * panels, order);
  std::vector<cplx> base_c = base(coarse), base_f = base(fine);

  KernelProfile prof;
  prof.n = n;
  prof.values.resize(radii.size());
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    double r = radii[ri];
    cplx vc(0.0, 0.0), vf(0.0, 0.0);
    for (std::size_t i = 0; i < coarse.t.size(); ++i)
      vc += base_c[i] * radial_factor(n, r * coarse.t[i]);
    for (std::size_t i = 0; i < fine.t.size(); ++i)
      vf += base_f[i] * radial_factor(n, r * fine.t[i]);
    // Tolerance is relative to the peak amplitude so near-zeros of the
    // kernel do not spuriously fail the doubling check.
    if (std::abs(vf - vc) >
        1e-6 * std::max(std::abs(vf), check_scale * 1e-3)) {
      std::ostringstream msg;
      msg << "radial_oscillatory_kernel: panel doubling unstable at r=" << r
          << " (" << std::abs(vf - vc) << " abs, support [" << a << ", " << b
          << "])";
      throw std::runtime_error(msg.str());
    }
    prof.values[ri] = vf;
  }
  prof.radii = std::move(radii);
  return prof;
}

KernelProfile radial_wave_kernel(const DyadicPartition& part, int j, int n,
                                 std::vector<double> radii) {
  if (j < 1) throw std::invalid_argument("radial_wave_kernel: j >= 1");
  KernelProfile prof = radial_oscillatory_kernel(
      [&part, j](double t) { return part.psi_at(j, t); }, std::exp2(j - 1),
      std::exp2(j + 1), n, std::move(radii), std::exp2(0.5 * j * (n + 1)));
  prof.j = j;
  return prof;
}

double plateau_constant(const DyadicPartition& part, int n) {
  double integral = adaptive_simpson(
      [&](double t) { return part.psi(t) * std::pow(t, 0.5 * (n - 1)); }, 0.25,
      2.5, 1e-13);
  return std::pow(2.0 * kPi, -0.5 * (n + 1)) * integral;
}

double plateau_phase(int n) { return (n - 2) * kPi / 4.0 + kPi / 4.0; }

PlateauCertificate certify_plateau(const std::vector<KernelProfile>& profiles,
                                   double c0,
                                   const std::vector<double>& delta_grid) {
  if (profiles.empty())
    throw std::invalid_argument("certify_plateau: no profiles");
  const int n = profiles.front().n;
  const double gamma = plateau_phase(n);
  const cplx align = std::exp(cplx(0.0, gamma));

  PlateauCertificate cert;
  cert.phase = gamma;
  for (const auto& p : profiles) {
    cert.levels.push_back(p.j);
    cert.deviation_at_one.push_back(
        std::abs(align * std::exp2(-0.5 * p.j * (n + 1)) * p.at(1.0) - c0));
  }

  auto level_ok = [&](const KernelProfile& p, double delta) {
    const double width = delta * std::exp2(-p.j);
    const double rescale = std::exp2(-0.5 * p.j * (n + 1));
    bool tested = false;
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
      if (std::abs(1.0 - p.radii[i]) >= width) continue;
      tested = true;
      if (std::abs(align * rescale * p.values[i] - c0) > 0.1 * c0)
        return false;
    }
    return tested;
  };

  std::vector<double> deltas = delta_grid;
  std::sort(deltas.rbegin(), deltas.rend());  // try the widest plateau first
  const int j_lo = cert.levels.front(), j_hi = cert.levels.back();
  for (double delta : deltas) {
    for (int j0 = j_lo - 1; j0 < j_hi; ++j0) {
      bool all_ok = true;
      for (const auto& p : profiles)
        if (p.j > j0 && !level_ok(p, delta)) {
          all_ok = false;
          break;
        }
      if (all_ok) {
        cert.ok = true;
        cert.delta = delta;
        cert.j0 = j0;
        return cert;
      }
    }
  }
  return cert;
}

EnvelopeReport envelope_fit(const std::vector<KernelProfile>& profiles,
                            double L) {
  EnvelopeReport rep;
  rep.L = L;
  for (const auto& p : profiles) {
    double cj = 0.0;
    const double rescale = std::exp2(-0.5 * p.j * (p.n + 1));
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
      double env = std::pow(1.0 + std::exp2(p.j) * std::abs(1.0 - p.radii[i]),
                            L);
      cj = std::max(cj, std::abs(p.values[i]) * rescale * env);
    }
    rep.per_scale_C.push_back(cj);
    rep.C = std::max(rep.C, cj);
  }
  rep.ok = rep.C < 1e6;
  return rep;
}

double kernel_lp_norm(const KernelProfile& profile, double p) {
  const int n = profile.n;
  if (std::isinf(p)) {
    double sup = 0.0;
    for (const cplx& v : profile.values) sup = std::max(sup, std::abs(v));
    return sup;
  }
  const double omega = n == 1 ? 2.0 : (n == 2 ? 2.0 * kPi : 4.0 * kPi);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < profile.radii.size(); ++i) {
    double r0 = profile.radii[i], r1 = profile.radii[i + 1];
    double f0 = std::pow(std::abs(profile.values[i]), p) * std::pow(r0, n - 1);
    double f1 =
        std::pow(std::abs(profile.values[i + 1]), p) * std::pow(r1, n - 1);
    acc += 0.5 * (f0 + f1) * (r1 - r0);
  }
  return std::pow(omega * acc, 1.0 / p);
}

std::vector<double> kernel_radius_grid(int j, double window, double r_max) {
  std::vector<double> radii;
  const double fine_step = std::exp2(-j) / 8.0;
  const double lo = 1.0 - window * std::exp2(-j);
  const double hi = 1.0 + window * std::exp2(-j);
  for (double r = 0.02; r < lo; r += 0.02) radii.push_back(r);
  for (double u = -window; u <= window; u += 0.125) {
    double r = 1.0 + u * std::exp2(-j);
    if (r > 1e-3) radii.push_back(r);
  }
  for (double r = hi + 0.02; r <= r_max; r += 0.02) radii.push_back(r);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end(),
                          [fine_step](double a, double b) {
                            return b - a < 0.25 * fine_step;
                          }),
              radii.end());
  return radii;
}

ProbeReport l1_scaling_probe(const WavePhase& phi, const RadialBump& theta,
                             int j_min, int j_max, ProbeVariant variant,
                             int dim) {
  if (j_min < (variant == ProbeVariant::highpass ? 2 : 0) || j_max < j_min + 2)
    throw std::invalid_argument("l1_scaling_probe: bad j window");
  static const DyadicPartition part = make_dyadic_partition();

  ProbeReport rep;
  for (int j = j_min; j <= j_max; ++j) {
    Field kernel = [&] {
      if (variant == ProbeVariant::lowpass) {
        // By homogeneity of phi this equals the kernel norm for the
        // shrinking-support cutoff lowpass(2^j |xi|) with phase phi itself.
        GridSpec grid = make_grid(dim, 1024, 64.0);
        double damp = std::exp2(-j);
        return synthesize_frequency(
            [&](Point xi) {
              double r = rho(xi, dim);
              return std::exp(cplx(0.0, damp * phi(xi))) *
                     part.lowpass(r);
            },
            Band{0.0, 2.0}, grid);
      }
      // highpass: e^{i phi(xi)} zeta(|xi|) theta(2^{-j}|xi|), support up to
      // 3 * 2^j; grid sized so that fits under the Nyquist guard.
      const double box = 3.0;
      int N = 64;
      while (kNyquistGuard * kPi * N / box < 3.0 * std::exp2(j) * 1.05) N *= 2;
      GridSpec grid = make_grid(dim, N, box);
      return synthesize_frequency(
          [&](Point xi) {
            double r = rho(xi, dim);
            return std::exp(cplx(0.0, phi(xi))) * part.highpass(r) *
                   theta(std::ldexp(r, -j));
          },
          Band{std::exp2(j) / 3.0, 3.0 * std::exp2(j)}, grid);
    }();
    rep.levels.push_back(j);
    double acc = 0.0;
    const GridSpec& g = kernel.grid();
    for (std::size_t i = 0; i < kernel.size(); ++i)
      acc += std::abs(kernel[i]);
    rep.values.push_back(acc * std::pow(g.dx(), g.dim));
  }
  rep.fit = fit_exponent(rep.levels, rep.values);
  return rep;
}

}  // namespace wavelab
