#pragma once

#include "wavelab/grid.hpp"

namespace wavelab {

/// C^inf transition: 0 for t <= 0, 1 for t >= 1, built from exp(-1/t).
double smoothstep_exp(double t);

/// Radial bump, identically 1 on [b, c] and identically 0 outside (a, d).
struct RadialBump {
  double a, b, c, d;
  double operator()(double r) const;
};

/// The dyadic triple (psi, lowpass, highpass):
///   lowpass(rho) = 1 for rho <= 1, 0 for rho >= 2;
///   psi(rho)     = lowpass(rho) - lowpass(2 rho), supported in [1/2, 2];
///   highpass     = 1 - lowpass.
/// The telescoping identity sum_{j<=k} psi(2^{-j} rho) = lowpass(2^{-k} rho)
/// holds exactly by construction.
struct DyadicPartition {
  double lowpass(double r) const;
  double highpass(double r) const { return 1.0 - lowpass(r); }
  double psi(double r) const { return lowpass(r) - lowpass(2.0 * r); }
  /// psi(2^{-j} rho)
  double psi_at(int j, double r) const { return psi(std::ldexp(r, -j)); }
};

DyadicPartition make_dyadic_partition();

/// Wide annular cutoff: 1 on [1/2, 2], supported in [1/3, 3]. Serves both as
/// the test-multiplier profile and as the enlarged bump in symbol expansions.
RadialBump make_wide_bump();

}  // namespace wavelab
