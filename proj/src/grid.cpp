#include "wavelab/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace wavelab {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_finite(const std::vector<cplx>& v) {
  for (const cplx& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::domain_error("field contains NaN/Inf samples");
  }
}

// Multiplies sample id by (-1)^{i0 + i1}. Together with the matching sign on
// the output bins this recenters the DFT so that index N/2 is the origin on
// both sides. Requires N divisible by 4 so the global phase e^{-i pi N/2} = 1.
void checkerboard(std::vector<cplx>& v, const GridSpec& g) {
  const int n = g.samples;
  if (g.dim == 1) {
    for (int i = 0; i < n; ++i)
      if (i & 1) v[i] = -v[i];
  } else {
    std::size_t id = 0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k, ++id)
        if ((i + k) & 1) v[id] = -v[id];
  }
}

void run_fft(std::vector<cplx>& v, const GridSpec& g, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(v.data());
  fftw_plan plan =
      g.dim == 1
          ? fftw_plan_dft_1d(g.samples, ptr, ptr, sign, FFTW_ESTIMATE)
          : fftw_plan_dft_2d(g.samples, g.samples, ptr, ptr, sign,
                             FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

}  // namespace

GridSpec make_grid(int dim, int samples, double box) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("grid dimension must be 1 or 2");
  if (!is_pow2(samples) || samples < 16)
    throw std::invalid_argument("sample count must be a power of two >= 16");
  if (!(box > 0.0)) throw std::invalid_argument("box side must be positive");
  return GridSpec{dim, samples, box};
}

Field::Field(GridSpec grid, Side side, std::vector<cplx> data,
             std::optional<Band> band)
    : grid_(grid), side_(side), data_(std::move(data)), band_(band) {
  if (data_.size() != grid_.size())
    throw std::invalid_argument("field data length does not match grid");
}

Field fourier_transform(const Field& f) {
  if (f.side() != Side::physical)
    throw std::invalid_argument("fourier_transform expects a physical field");
  const GridSpec& g = f.grid();
  check_finite(f.data());
  std::vector<cplx> buf = f.data();
  checkerboard(buf, g);
  run_fft(buf, g, FFTW_FORWARD);
  checkerboard(buf, g);
  const double scale = std::pow(g.dx(), g.dim);
  for (cplx& z : buf) z *= scale;
  return Field(g, Side::frequency, std::move(buf), f.band());
}

Field inverse_fourier_transform(const Field& F) {
  if (F.side() != Side::frequency)
    throw std::invalid_argument(
        "inverse_fourier_transform expects a frequency field");
  const GridSpec& g = F.grid();
  check_finite(F.data());
  std::vector<cplx> buf = F.data();
  checkerboard(buf, g);
  run_fft(buf, g, FFTW_BACKWARD);
  checkerboard(buf, g);
  const double scale = 1.0 / std::pow(g.box, g.dim);
  for (cplx& z : buf) z *= scale;
  return Field(g, Side::physical, std::move(buf), F.band());
}

Field synthesize_frequency(const std::function<cplx(Point)>& sampler,
                           Band support, const GridSpec& grid) {
  if (support.rho_max > grid.guard())
    throw std::invalid_argument(
        "frequency support " + std::to_string(support.rho_max) +
        " exceeds Nyquist guard " + std::to_string(grid.guard()));
  std::vector<cplx> buf(grid.size());
  for (std::size_t id = 0; id < buf.size(); ++id) {
    Point xi = grid.freq_at(id);
    double r = rho(xi, grid.dim);
    buf[id] = (r >= support.rho_min && r <= support.rho_max) ? sampler(xi)
                                                             : cplx(0.0);
  }
  Field F(grid, Side::frequency, std::move(buf), support);
  return inverse_fourier_transform(F);
}

Field synthesize_radial(const std::function<cplx(double)>& profile,
                        Band support, const GridSpec& grid) {
  return synthesize_frequency(
      [&](Point xi) { return profile(rho(xi, grid.dim)); }, support, grid);
}

double band_leakage(const Field& f) {
  if (!f.band()) throw std::invalid_argument("field carries no band");
  Field F = f.side() == Side::frequency ? f : fourier_transform(f);
  const Band& b = *f.band();
  double inside = 0.0, outside = 0.0;
  for (std::size_t id = 0; id < F.size(); ++id) {
    double r = rho(F.grid().freq_at(id), F.grid().dim);
    double m = std::norm(F[id]);
    (r >= b.rho_min && r <= b.rho_max ? inside : outside) += m;
  }
  double total = inside + outside;
  return total > 0.0 ? outside / total : 0.0;
}

}  // namespace wavelab
