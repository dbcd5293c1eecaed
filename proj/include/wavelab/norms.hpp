#pragma once

#include "wavelab/grid.hpp"

namespace wavelab {

/// Discrete ||f||_{L^p} = (sum |f(x_i)|^p dx^n)^{1/p}; the same formula is the
/// quasi-norm for p < 1, and p = inf (pass infinity) gives the sup.
double lp_norm(const Field& f, double p);

/// Dyadic BMO: sup over dyadic subcubes of the grid, down to side length
/// 4 dx (depth log2 N - 2), of the mean |f - mean(f)| over the cube.
double bmo_norm(const Field& f, int max_depth = -1);

/// Hardy-space surrogate: L^1 norm of the smooth maximal function
/// sup_k |(phi(t_k xi) fhat)^v| over dilation scales t_k = dx 2^k up to L/4,
/// with phi the smooth lowpass of the dyadic partition.
double h1_norm(const Field& f);

/// Norm in X_r: L^r for finite r, BMO for r = infinity.
double xr_norm(const Field& f, double r);

/// ||out|| / (||f||_{X_p} ||g||_{X_q}); returns 0 when a denominator
/// underflows.
double operator_ratio(const Field& out, double out_p, const Field& f, double p,
                      const Field& g, double q);

}  // namespace wavelab
