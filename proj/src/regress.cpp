#include "wavelab/regress.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

SlopeFit fit_exponent(const std::vector<double>& levels,
                      const std::vector<double>& values) {
  const std::size_t n = levels.size();
  if (values.size() != n)
    throw std::invalid_argument("fit_exponent: length mismatch");
  if (n < 3) throw std::domain_error("fit_exponent: need at least 3 points");

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i]))
      throw std::domain_error("fit_exponent: values must be positive finite");
    y[i] = std::log2(values[i]);
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += levels[i];
    sy += y[i];
    sxx += levels[i] * levels[i];
    sxy += levels[i] * y[i];
  }
  const double dn = double(n);
  const double denom = dn * sxx - sx * sx;
  if (denom <= 0.0)
    throw std::domain_error("fit_exponent: degenerate abscissae");

  SlopeFit fit;
  fit.points = static_cast<int>(n);
  fit.slope = (dn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / dn;

  double ss_res = 0.0, ss_tot = 0.0;
  const double ybar = sy / dn;
  for (std::size_t i = 0; i < n; ++i) {
    double e = y[i] - (fit.slope * levels[i] + fit.intercept);
    ss_res += e * e;
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  if (n > 2) {
    double var = ss_res / (dn - 2.0);
    fit.stderr_slope = std::sqrt(var * dn / denom);
  }
  return fit;
}

}  // namespace wavelab
