#pragma once

namespace wavelab {

/// Bessel function J_nu(s) for s >= 0 and the half-integer / integer orders
/// used by the radial Fourier kernels (nu in {-1/2, 0, 1/2, 1, 3/2}).
/// Power series below the switch point, large-argument asymptotic above.
double bessel_j(double nu, double s);

/// The two evaluation paths, exposed so the overlap region can be checked.
double bessel_j_series(double nu, double s);
double bessel_j_asymptotic(double nu, double s);

/// Argument at which bessel_j switches from the series to the asymptotic.
inline constexpr double kBesselSwitch = 12.0;

}  // namespace wavelab
