#include "wavelab/operators.hpp"

#include "wavelab/cutoffs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wavelab {

namespace {

// Reject spectra with appreciable mass beyond the Nyquist guard; such mass
// would alias under a frequency shift.
void check_guard(const Field& fhat, const char* what) {
  const GridSpec& g = fhat.grid();
  const double guard = g.guard();
  double inside = 0.0, outside = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    double a = std::norm(fhat[k]);
    (rho(g.freq_at(k), g.dim) > guard ? outside : inside) += a;
  }
  if (outside > 1e-18 * (inside + outside))
    throw std::domain_error(std::string(what) +
                            ": spectral mass beyond the Nyquist guard");
}

Field multiply_spectrum(const Field& fhat,
                        const std::function<cplx(Point)>& mult) {
  const GridSpec& g = fhat.grid();
  std::vector<cplx> out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    out[k] = fhat[k] * mult(g.freq_at(k));
  return Field(g, Side::frequency, std::move(out));
}

}  // namespace

Field linear_multiplier_apply(const std::function<cplx(Point)>& mult,
                              const Field& f) {
  if (f.side() != Side::physical)
    throw std::invalid_argument("linear_multiplier_apply: physical input");
  Field prod = multiply_spectrum(fourier_transform(f), mult);
  check_guard(prod, "linear_multiplier_apply");
  return inverse_fourier_transform(prod);
}

Field bilinear_multiplier_apply(const BilinearSymbol& sigma, const Field& f,
                                const Field& g) {
  if (!(f.grid() == g.grid()))
    throw std::invalid_argument("bilinear_multiplier_apply: grid mismatch");
  if (!sigma.has_separable()) return bilinear_dense_oracle(sigma, f, g);

  Field fhat = fourier_transform(f);
  Field ghat = fourier_transform(g);
  check_guard(fhat, "bilinear_multiplier_apply(f)");
  check_guard(ghat, "bilinear_multiplier_apply(g)");

  const GridSpec& grid = f.grid();
  std::vector<cplx> acc(grid.size(), cplx(0.0, 0.0));
  for (const SeparableTerm& term : sigma.separable) {
    Field ux = inverse_fourier_transform(multiply_spectrum(fhat, term.u));
    Field vx = inverse_fourier_transform(multiply_spectrum(ghat, term.v));
    for (std::size_t i = 0; i < grid.size(); ++i) acc[i] += ux[i] * vx[i];
  }
  return Field(grid, Side::physical, std::move(acc));
}

Field bilinear_dense_oracle(const BilinearSymbol& sigma, const Field& f,
                            const Field& g) {
  if (!(f.grid() == g.grid()))
    throw std::invalid_argument("bilinear_dense_oracle: grid mismatch");
  const GridSpec& grid = f.grid();
  const int n = grid.dim;
  const int N = grid.samples;

  Field fhat = fourier_transform(f);
  Field ghat = fourier_transform(g);
  check_guard(fhat, "bilinear_dense_oracle(f)");
  check_guard(ghat, "bilinear_dense_oracle(g)");

  const double weight =
      std::pow(grid.dxi() / (2.0 * kPi), n);  // (2pi)^{-n} deta^n

  // Index arithmetic: xi_k = (k - N/2) dxi, so the index of s - eta is
  // (s_idx - e_idx + N/2) mod N (periodic wrap).
  std::vector<cplx> outhat(grid.size(), cplx(0.0, 0.0));
  if (n == 1) {
    for (int s = 0; s < N; ++s) {
      cplx acc(0.0, 0.0);
      for (int e = 0; e < N; ++e) {
        cplx gv = ghat[static_cast<std::size_t>(e)];
        if (gv == cplx(0.0, 0.0)) continue;
        int ks = ((s - e) % N + N + N / 2) % N;
        Point xi = {grid.freq(ks), 0.0};
        Point eta = {grid.freq(e), 0.0};
        acc += sigma.eval(xi, eta) * fhat[static_cast<std::size_t>(ks)] * gv;
      }
      outhat[static_cast<std::size_t>(s)] = acc * weight;
    }
  } else {
    // Collect the nonzero modes of ghat once; the spectra used in the
    // experiments are band-limited, so this prunes most of the O(N^4) work.
    struct Mode {
      int k0, k1;
      cplx v;
    };
    std::vector<Mode> modes;
    for (int e0 = 0; e0 < N; ++e0)
      for (int e1 = 0; e1 < N; ++e1) {
        cplx v = ghat[static_cast<std::size_t>(e0) * N + e1];
        if (v != cplx(0.0, 0.0)) modes.push_back({e0, e1, v});
      }
    for (int s0 = 0; s0 < N; ++s0)
      for (int s1 = 0; s1 < N; ++s1) {
        cplx acc(0.0, 0.0);
        for (const Mode& mo : modes) {
          int k0 = ((s0 - mo.k0) % N + N + N / 2) % N;
          int k1 = ((s1 - mo.k1) % N + N + N / 2) % N;
          cplx fv = fhat[static_cast<std::size_t>(k0) * N + k1];
          if (fv == cplx(0.0, 0.0)) continue;
          Point xi = {grid.freq(k0), grid.freq(k1)};
          Point eta = {grid.freq(mo.k0), grid.freq(mo.k1)};
          acc += sigma.eval(xi, eta) * fv * mo.v;
        }
        outhat[static_cast<std::size_t>(s0) * N + s1] = acc * weight;
      }
  }
  Field oh(grid, Side::frequency, std::move(outhat));
  return inverse_fourier_transform(oh);
}

Field wave_bilinear_apply(const BilinearSymbol& sigma, const WavePhase& phi1,
                          const WavePhase& phi2, const Field& f,
                          const Field& g) {
  auto premodulate = [](const WavePhase& phi, const Field& in) {
    if (phi.is_zero()) return in;
    Field inhat = fourier_transform(in);
    Field mod = multiply_spectrum(
        inhat, [&phi](Point p) { return std::exp(cplx(0.0, phi(p))); });
    return inverse_fourier_transform(mod);
  };
  return bilinear_multiplier_apply(sigma, premodulate(phi1, f),
                                   premodulate(phi2, g));
}

int max_dyadic_level(const GridSpec& grid) {
  int j = 0;
  while (std::exp2(j + 3) <= grid.nyquist() * kNyquistGuard) ++j;
  return j;
}

Field sj_apply(int j, const Field& f) {
  const GridSpec& grid = f.grid();
  if (std::exp2(j + 2) > grid.nyquist() * kNyquistGuard)
    throw std::domain_error("sj_apply: dyadic shell exceeds the Nyquist guard");
  static const DyadicPartition part = make_dyadic_partition();
  const int n = grid.dim;
  auto mult = [j, n](Point xi) {
    double r = rho(xi, n);
    return std::exp(cplx(0.0, r)) * part.psi_at(j, r);
  };
  Field out = linear_multiplier_apply(mult, f);
  return out.with_band(Band{std::exp2(j - 1), std::exp2(j + 1)});
}

}  // namespace wavelab
