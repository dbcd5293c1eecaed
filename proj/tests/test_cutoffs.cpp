#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wavelab/cutoffs.hpp"
#include "wavelab/phase.hpp"

#include <cmath>
#include <random>

using namespace wavelab;

TEST_CASE("smoothstep endpoints and monotonicity") {
  CHECK(smoothstep_exp(-0.5) == 0.0);
  CHECK(smoothstep_exp(0.0) == 0.0);
  CHECK(smoothstep_exp(1.0) == 1.0);
  CHECK(smoothstep_exp(1.5) == 1.0);
  double prev = 0.0;
  for (int i = 1; i <= 200; ++i) {
    double v = smoothstep_exp(i / 200.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("radial bump plateau and support") {
  RadialBump theta = make_wide_bump();
  CHECK(theta(0.5) == 1.0);
  CHECK(theta(1.0) == 1.0);
  CHECK(theta(2.0) == 1.0);
  CHECK(theta(1.0 / 3.0) == 0.0);
  CHECK(theta(3.0) == 0.0);
  CHECK(theta(0.4) > 0.0);
  CHECK(theta(2.5) > 0.0);
}

TEST_CASE("dyadic partition structure") {
  DyadicPartition part = make_dyadic_partition();
  CHECK(part.lowpass(1.0) == 1.0);
  CHECK(part.lowpass(2.0) == 0.0);
  CHECK(part.psi(0.5) == 0.0);
  CHECK(part.psi(0.49) == 0.0);
  CHECK(part.psi(2.01) == 0.0);
  CHECK(part.psi(1.0) == 1.0);
}

TEST_CASE("telescoping identity is exact") {
  DyadicPartition part = make_dyadic_partition();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    double r = std::exp2(u(rng));  // log-uniform in [2^-2, 2^10]
    for (int K : {-1, 0, 4, 12}) {
      double sum = 0.0;
      for (int j = K - 40; j <= K; ++j) sum += part.psi_at(j, r);
      CHECK(std::abs(sum - part.lowpass(std::ldexp(r, -K))) < 1e-12);
    }
    // Away from the origin the full sum is 1.
    double total = 0.0;
    for (int j = -10; j <= 14; ++j) total += part.psi_at(j, r);
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("phase homogeneity and values") {
  auto eu = WavePhase::euclidean(2);
  auto lin = WavePhase::linear(2, Point{0.3, -0.4});
  auto ell = WavePhase::ellipse({{{2.0, 0.3}, {0.3, 1.0}}});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    Point xi{u(rng), u(rng)};
    if (rho(xi, 2) < 0.1) continue;
    for (double t : {0.5, 2.0, 7.25}) {
      Point txi{t * xi[0], t * xi[1]};
      CHECK(eu(txi) == doctest::Approx(t * eu(xi)).epsilon(1e-12));
      CHECK(lin(txi) == doctest::Approx(t * lin(xi)).epsilon(1e-12));
      CHECK(ell(txi) == doctest::Approx(t * ell(xi)).epsilon(1e-12));
    }
  }
  CHECK(eu(Point{3.0, 4.0}) == doctest::Approx(5.0));
  CHECK(lin(Point{1.0, 1.0}) == doctest::Approx(-0.1));
}

TEST_CASE("phase gradients against central differences") {
  auto ell = WavePhase::ellipse({{{2.0, 0.3}, {0.3, 1.0}}});
  auto eu = WavePhase::euclidean(2);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double h = 1e-5;
  for (int trial = 0; trial < 50; ++trial) {
    Point xi{u(rng), u(rng)};
    if (rho(xi, 2) < 0.3) continue;
    for (const WavePhase* phi : {&ell, &eu}) {
      Point g = phi->gradient(xi);
      for (int d = 0; d < 2; ++d) {
        Point a = xi, b = xi;
        a[d] += h;
        b[d] -= h;
        double fd = ((*phi)(a) - (*phi)(b)) / (2.0 * h);
        CHECK(g[d] == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("gradient sup against a dense sphere mesh") {
  auto check = [](const WavePhase& phi) {
    double mesh_sup = 0.0;
    for (int i = 0; i < 20000; ++i) {
      double a = 2.0 * kPi * i / 20000.0;
      Point xi{std::cos(a), std::sin(a)};
      Point g = phi.gradient(xi);
      mesh_sup = std::max(mesh_sup, std::hypot(g[0], g[1]));
    }
    CHECK(phi.gradient_sup() == doctest::Approx(mesh_sup).epsilon(1e-6));
  };
  check(WavePhase::euclidean(2));
  check(WavePhase::linear(2, Point{0.3, -0.4}));
  check(WavePhase::ellipse({{{2.0, 0.3}, {0.3, 1.0}}}));
  // |grad| = 1 on the sphere for the euclidean phase, |v| for the linear one.
  CHECK(WavePhase::euclidean(2).gradient_sup() == doctest::Approx(1.0));
  CHECK(WavePhase::linear(2, Point{0.3, -0.4}).gradient_sup() ==
        doctest::Approx(0.5));
}

TEST_CASE("zero phase") {
  auto none = WavePhase::none(2);
  CHECK(none.is_zero());
  CHECK(none(Point{1.0, 2.0}) == 0.0);
  CHECK(none.gradient_sup() == 0.0);
}

TEST_CASE("one dimensional phases") {
  auto eu = WavePhase::euclidean(1);
  CHECK(eu(Point{-3.0, 0.0}) == doctest::Approx(3.0));
  CHECK(eu.gradient(Point{-3.0, 0.0})[0] == doctest::Approx(-1.0));
}
