#include "wavelab/cutoffs.hpp"

#include <cmath>

namespace wavelab {

namespace {
double h(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
}  // namespace

double smoothstep_exp(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double a = h(t), b = h(1.0 - t);
  return a / (a + b);
}

double RadialBump::operator()(double r) const {
  if (r <= a || r >= d) return 0.0;
  if (r < b) return smoothstep_exp((r - a) / (b - a));
  if (r <= c) return 1.0;
  return smoothstep_exp((d - r) / (d - c));
}

double DyadicPartition::lowpass(double r) const {
  // g(r) = 1 for r <= 1, 0 for r >= 2, smooth in between.
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  return smoothstep_exp(2.0 - r);
}

DyadicPartition make_dyadic_partition() { return DyadicPartition{}; }

RadialBump make_wide_bump() { return RadialBump{1.0 / 3.0, 0.5, 2.0, 3.0}; }

}  // namespace wavelab
