#include "wavelab/bessel.hpp"

#include "wavelab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

namespace {
void check_args(double nu, double s) {
  if (s < 0.0) throw std::domain_error("bessel_j: s >= 0 required");
  const double ok[] = {-0.5, 0.0, 0.5, 1.0, 1.5};
  for (double v : ok)
    if (nu == v) return;
  throw std::domain_error("bessel_j: unsupported order");
}
}  // namespace

double bessel_j_series(double nu, double s) {
  check_args(nu, s);
  if (s == 0.0) return nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : INFINITY);
  // J_nu(s) = sum_k (-1)^k / (k! Gamma(k+nu+1)) (s/2)^{2k+nu}
  const double half = 0.5 * s;
  double term = std::pow(half, nu) / std::tgamma(nu + 1.0);
  double acc = term;
  for (int k = 1; k < 200; ++k) {
    term *= -(half * half) / (k * (k + nu));
    acc += term;
    if (std::abs(term) < 1e-18 * (std::abs(acc) + 1.0)) break;
  }
  return acc;
}

double bessel_j_asymptotic(double nu, double s) {
  check_args(nu, s);
  if (s <= 0.0) throw std::domain_error("bessel_j_asymptotic: s > 0 required");
  // a_k(nu) = prod_{i=1..k} (4 nu^2 - (2i-1)^2) / (k! 8^k); Hankel expansion
  // J_nu = sqrt(2/(pi s)) [P cos w - Q sin w], w = s - nu pi/2 - pi/4,
  // P = sum (-1)^k a_{2k} s^{-2k}, Q = sum (-1)^k a_{2k+1} s^{-2k-1}.
  const double mu = 4.0 * nu * nu;
  double a[13];
  a[0] = 1.0;
  for (int k = 1; k <= 12; ++k) {
    double odd = 2.0 * k - 1.0;
    a[k] = a[k - 1] * (mu - odd * odd) / (8.0 * k);
  }
  double P = 0.0, Q = 0.0;
  for (int k = 0; k < 6; ++k) {
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    P += sgn * a[2 * k] * std::pow(s, -2.0 * k);
    Q += sgn * a[2 * k + 1] * std::pow(s, -2.0 * k - 1.0);
  }
  const double w = s - nu * kPi / 2.0 - kPi / 4.0;
  return std::sqrt(2.0 / (kPi * s)) * (P * std::cos(w) - Q * std::sin(w));
}

double bessel_j(double nu, double s) {
  return s <= kBesselSwitch ? bessel_j_series(nu, s)
                            : bessel_j_asymptotic(nu, s);
}

}  // namespace wavelab
