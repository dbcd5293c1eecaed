#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wavelab/grid.hpp"

#include <cmath>
#include <cstdint>
#include <random>

using namespace wavelab;

namespace {

std::vector<cplx> rand_field(const GridSpec& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v(g.size());
  for (auto& z : v) z = cplx(u(rng), u(rng));
  return v;
}

double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("grid spacing conventions") {
  GridSpec g = make_grid(2, 64, 8.0);
  CHECK(g.dx() == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(g.dx() * g.dxi() * g.samples == doctest::Approx(2.0 * kPi));
  CHECK(g.nyquist() == doctest::Approx(kPi * 64 / 8.0));
  CHECK(g.coord(32) == 0.0);
  CHECK(g.freq(32) == 0.0);
  auto ij = g.unravel(64 * 5 + 7);
  CHECK(ij[0] == 5);
  CHECK(ij[1] == 7);
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(make_grid(3, 64, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2, 48, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2, 8, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 64, -1.0), std::invalid_argument);
}

TEST_CASE("fft round trip") {
  for (auto [dim, n] : {std::pair{1, 256}, {1, 1024}, {2, 32}, {2, 64}}) {
    GridSpec g = make_grid(dim, n, 5.0);
    Field f(g, Side::physical, rand_field(g, 17 * n + dim));
    Field back = inverse_fourier_transform(fourier_transform(f));
    CHECK(max_abs_diff(f, back) < 1e-12);
  }
}

TEST_CASE("parseval") {
  for (int trial = 0; trial < 8; ++trial) {
    int dim = 1 + trial % 2;
    GridSpec g = make_grid(dim, dim == 1 ? 512 : 64, 4.0 + trial);
    Field f(g, Side::physical, rand_field(g, 100 + trial));
    Field F = fourier_transform(f);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) lhs += std::norm(f[i]);
    for (std::size_t i = 0; i < F.size(); ++i) rhs += std::norm(F[i]);
    lhs *= std::pow(g.dx(), dim);
    rhs *= std::pow(g.dxi() / (2.0 * kPi), dim);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("gaussian pair against the continuum transform") {
  // f(x) = e^{-x^2/2} has fhat(xi) = sqrt(2 pi) e^{-xi^2/2}; both tails are
  // far below machine precision at box 40, so the trapezoid sum is exact to
  // rounding and halving dx must not change the values.
  for (int n : {512, 1024}) {
    GridSpec g = make_grid(1, n, 40.0);
    std::vector<cplx> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      double x = g.point_at(i)[0];
      v[i] = std::exp(-0.5 * x * x);
    }
    Field F = fourier_transform(Field(g, Side::physical, std::move(v)));
    double worst = 0.0;
    for (std::size_t k = 0; k < F.size(); ++k) {
      double xi = g.freq_at(k)[0];
      if (std::abs(xi) > 8.0) continue;
      double exact = std::sqrt(2.0 * kPi) * std::exp(-0.5 * xi * xi);
      worst = std::max(worst, std::abs(F[k] - exact));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("radial synthesis matches the frequency sampler") {
  GridSpec g = make_grid(2, 64, 6.0);
  Band band{1.0, 8.0};
  auto profile = [](double r) { return cplx(std::exp(-r), 0.25 * r); };
  Field a = synthesize_radial(profile, band, g);
  Field b = synthesize_frequency(
      [&](Point xi) { return profile(rho(xi, 2)); }, band, g);
  CHECK(max_abs_diff(a, b) < 1e-12);
  CHECK(a.band().has_value());
  CHECK(a.band()->rho_max == 8.0);
}

TEST_CASE("band certificate and leakage") {
  GridSpec g = make_grid(2, 64, 6.0);
  Band band{2.0, 6.0};
  Field f = synthesize_radial(
      [](double r) { return cplx(r > 2.0 && r < 6.0 ? 1.0 : 0.0, 0.0); },
      band, g);
  CHECK(band_leakage(f) < 1e-12);
  // A too-small certificate reports the escaped mass.
  Field lying = f.with_band(Band{2.0, 3.0});
  CHECK(band_leakage(lying) > 0.1);
}

TEST_CASE("synthesis rejects bands past the nyquist guard") {
  GridSpec g = make_grid(2, 32, 4.0);  // nyquist = 8 pi ~ 25.1
  CHECK_THROWS_AS(synthesize_radial([](double) { return cplx(1.0, 0.0); },
                                    Band{0.0, 30.0}, g),
                  std::invalid_argument);
}
