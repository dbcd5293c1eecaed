#pragma once

#include <string>
#include <vector>

#include "wavelab/cutoffs.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

/// One separable factor u(xi) v(eta) of a bilinear symbol.
struct SeparableTerm {
  std::function<cplx(Point)> u;
  std::function<cplx(Point)> v;
};

/// Bilinear symbol sigma(xi, eta) with an optional representation as a finite
/// sum of separable terms (the fast application path). When `tail_bound` is
/// positive the separable sum reproduces the symbol only up to that sup-norm
/// truncation error.
struct BilinearSymbol {
  int dim = 2;
  std::function<cplx(Point, Point)> eval;
  std::vector<SeparableTerm> separable;
  double tail_bound = 0.0;

  bool has_separable() const { return !separable.empty(); }
};

/// sigma(xi, eta) = (1 + |xi|^2 + |eta|^2)^{m/2}.
BilinearSymbol power_symbol(int dim, double m);

/// sigma_j(xi, eta) = 2^{jm} theta(2^{-j}|xi|) theta(2^{-j}|eta|); separable.
BilinearSymbol dyadic_test_symbol(int dim, double m, int j,
                                  const RadialBump& theta);

///// Sampled check of the derivative-decay order of a bilinear symbol: for each
/// pair of multi-indices with |alpha|+|beta| <= max_order, the supremum over a
/// log-spaced probe set of
///   |d^alpha_xi d^beta_eta sigma| (1+|xi|+|eta|)^{-m+|alpha|+|beta|}.
/// Derivatives are central differences with Richardson extrapolation at steps
/// {h, h/2}; `in_class` is true when all suprema are finite and stable under
/// step refinement.
struct SeminormEntry {
  int order_xi = 0;
  int order_eta = 0;
  double sup_ratio = 0.0;
  bool stable = true;
};
struct SeminormReport {
  double m = 0.0;
  std::vector<SeminormEntry> entries;
  bool in_class = true;
  double max_ratio() const;
};

SeminormReport symbol_seminorm(const BilinearSymbol& sigma, double m,
                               int max_order);

}  // namespace wavelab
