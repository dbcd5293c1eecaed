#pragma once

#include <vector>

namespace wavelab {

/// Least-squares fit of log2(value) against the dyadic level j.
struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;   // log2 of the prefactor
  double stderr_slope = 0.0;
  double r2 = 0.0;
  int points = 0;
};

/// Fits log2(values[i]) = slope * levels[i] + intercept. Non-positive values
/// are rejected (std::domain_error); at least three points are required.
SlopeFit fit_exponent(const std::vector<double>& levels,
                      const std::vector<double>& values);

}  // namespace wavelab
