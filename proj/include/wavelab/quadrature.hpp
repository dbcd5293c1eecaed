#pragma once

#include <functional>
#include <vector>

#include "wavelab/grid.hpp"

namespace wavelab {

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
/// the Legendre polynomial (cached per order).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Integral over [a, b] by composite Gauss-Legendre with `panels` panels of
/// `order` points each.
cplx panel_integrate(const std::function<cplx(double)>& f, double a, double b,
                     int panels, int order = 16);

/// Panel-doubling driver: doubles the panel count until two successive
/// composite values agree to rel_tol (relative to the larger magnitude).
/// Throws std::runtime_error if max_panels is exhausted.
cplx integrate_to_tolerance(const std::function<cplx(double)>& f, double a,
                            double b, double rel_tol, int start_panels,
                            int max_panels, int order = 16);

/// Adaptive Simpson on a real integrand; oracle-grade reference integrator.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 30);

}  // namespace wavelab
