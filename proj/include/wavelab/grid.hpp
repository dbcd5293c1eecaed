#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace wavelab {

using cplx = std::complex<double>;
using Point = std::array<double, 2>;  // second component ignored for dim == 1

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Fraction of the Nyquist frequency usable by frequency-side constructions.
/// Anything supported beyond guard() is treated as an aliasing error.
inline constexpr double kNyquistGuard = 15.0 / 16.0;

/// Uniform periodic grid on [-L/2, L/2)^n with N samples per axis.
/// Physical samples sit at x_i = (i - N/2) dx; frequency samples at
/// xi_k = (k - N/2) dxi with dx dxi N = 2 pi exactly.
struct GridSpec {
  int dim = 1;
  int samples = 0;
  double box = 0.0;

  double dx() const { return box / samples; }
  double dxi() const { return 2.0 * kPi / box; }
  double nyquist() const { return kPi * samples / box; }
  double guard() const { return kNyquistGuard * nyquist(); }

  std::size_t size() const {
    std::size_t s = 1;
    for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(samples);
    return s;
  }

  double coord(int i) const { return (i - samples / 2) * dx(); }
  double freq(int k) const { return (k - samples / 2) * dxi(); }

  /// Row-major decomposition of a flat index into per-axis indices.
  std::array<int, 2> unravel(std::size_t id) const {
    if (dim == 1) return {static_cast<int>(id), 0};
    return {static_cast<int>(id / samples), static_cast<int>(id % samples)};
  }

  Point point_at(std::size_t id) const {
    auto ij = unravel(id);
    return {coord(ij[0]), dim == 2 ? coord(ij[1]) : 0.0};
  }
  Point freq_at(std::size_t id) const {
    auto ij = unravel(id);
    return {freq(ij[0]), dim == 2 ? freq(ij[1]) : 0.0};
  }

  bool operator==(const GridSpec&) const = default;
};

/// Validated constructor: dim in {1,2}, N a power of two >= 16, L > 0.
GridSpec make_grid(int dim, int samples, double box);

enum class Side { physical, frequency };

/// Frequency-support certificate: spectrum confined to rho_min <= |xi| <= rho_max.
struct Band {
  double rho_min = 0.0;
  double rho_max = 0.0;
};

/// Immutable sampled complex function, physical or frequency side.
class Field {
 public:
  Field(GridSpec grid, Side side, std::vector<cplx> data,
        std::optional<Band> band = std::nullopt);

  const GridSpec& grid() const { return grid_; }
  Side side() const { return side_; }
  const std::vector<cplx>& data() const { return data_; }
  const std::optional<Band>& band() const { return band_; }

  cplx operator[](std::size_t id) const { return data_[id]; }
  std::size_t size() const { return data_.size(); }

  Field with_band(Band b) const { return Field(grid_, side_, data_, b); }

 private:
  GridSpec grid_;
  Side side_;
  std::vector<cplx> data_;
  std::optional<Band> band_;
};

/// Discrete approximation of f_hat(xi) = int e^{-i xi x} f(x) dx
/// (trapezoid sum, factor dx^n). Throws on NaN/Inf input.
Field fourier_transform(const Field& f);

/// Discrete approximation of (2 pi)^{-n} int e^{i xi x} F(xi) dxi.
Field inverse_fourier_transform(const Field& F);

/// Physical-side field from an arbitrary frequency-side sampler.
/// `support` is attached as the band certificate and checked against the
/// Nyquist guard.
Field synthesize_frequency(const std::function<cplx(Point)>& sampler,
                           Band support, const GridSpec& grid);

/// Physical-side field from a radial spectral profile rho -> profile(rho).
Field synthesize_radial(const std::function<cplx(double)>& profile,
                        Band support, const GridSpec& grid);

/// Relative l2 mass of the spectrum of `f` outside its band certificate.
double band_leakage(const Field& f);

inline double norm2(Point p, int dim) {
  return dim == 2 ? p[0] * p[0] + p[1] * p[1] : p[0] * p[0];
}
inline double rho(Point p, int dim) {
  return dim == 2 ? std::hypot(p[0], p[1]) : std::abs(p[0]);
}

}  // namespace wavelab
