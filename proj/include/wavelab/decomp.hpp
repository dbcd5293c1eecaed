#pragma once

#include "wavelab/cutoffs.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/phase.hpp"
#include "wavelab/regress.hpp"
#include "wavelab/symbols.hpp"

#include <array>
#include <vector>

namespace wavelab {

/// Flag decomposition sigma = sigma_I + sigma_II + sigma_III by relative
/// dyadic size: I where |xi| dominates, II where |xi| ~ |eta|, III where
/// |eta| dominates. Exact pointwise identity away from xi = 0.
struct FlagSplit {
  BilinearSymbol I, II, III;
};
FlagSplit flag_split(const BilinearSymbol& sigma,
                     const DyadicPartition& part);

/// Directional frame on the circle at scale j: centers spaced by
/// 2pi/ceil(2pi 2^{j/2}) and smooth 0-homogeneous cutoffs chi_nu summing to 1
/// away from the origin.
struct AngularFrame {
  int j = 0;
  int count = 0;
  double gap = 0.0;                 // angular spacing
  std::vector<double> angles;      // center angles
  std::vector<Point> centers;      // unit vectors

  /// chi_nu(xi); 0-homogeneous, supported in |xi/|xi| - center_nu| < 2 gap.
  /// sum over nu of chi(nu, xi) is 1 for xi != 0.
  double chi(int nu, Point xi) const;
  /// Raw window sum used as the normalizer of chi (roughly 3 everywhere).
  double partition_sum(Point xi) const;
};
AngularFrame make_angular_frame(int j);

/// Wave packets f_j^nu = (e^{-i phi(xi)} psi(2^{-j}|xi|) chi_nu(xi))^v for a
/// sampled subset of directions: L^1 norms, peak localization at
/// grad phi(center), and the anisotropic envelope constant
///   |f(x)| <= C 2^{j(n+1)/2} (1+2^j|long|)^{-N} (1+2^{j/2}|trans|)^{-N}
/// with N = 2 (long/trans measured from the packet center along/across the
/// direction), minimal C reported.
struct AngularPieceReport {
  int j = 0;
  std::vector<int> sampled;          // nu indices
  std::vector<double> l1_norms;
  double sum_l1_estimate = 0.0;      // count * mean of sampled L^1 norms
  double max_peak_offset = 0.0;      // |argmax - grad phi| in units 2^{-j/2}
  double envelope_C = 0.0;
  bool ok = false;
};
AngularPieceReport angular_piece_bounds(const AngularFrame& frame,
                                        const WavePhase& phi, int n_sample);

/// One retained Fourier mode of a rescaled symbol block.
struct ExpansionMode {
  std::array<int, 2> a{};  // xi-side lattice mode
  std::array<int, 2> b{};  // eta-side lattice mode
  cplx coeff;
};

/// Fourier-series expansion of the block sigma(2^j xi, 2^k eta)
/// theta~(|xi|) theta~(|eta|) on the cell [-pi, pi]^{2n}: coefficients for
/// modes with |a|_inf, |b|_inf <= radius, the exact dropped-mass tail bound
/// (sum of |c| over all computed but unretained modes), and the fitted decay
/// exponents in (1+|a|), (1+|b|).
struct SeparableExpansion {
  int dim = 2;
  int j = 0, k = 0;
  int radius = 8;
  int samples = 32;  // DFT samples per axis
  std::vector<ExpansionMode> modes;
  double tail_bound = 0.0;
  double max_coeff = 0.0;
  SlopeFit decay_a, decay_b;  // log2|c| vs log2(1+|mode|)

  /// Value of the retained sum at a cell point (xi, eta in [-pi, pi]^n).
  cplx eval_cell(Point xi, Point eta) const;
};

SeparableExpansion fourier_symbol_expansion(const BilinearSymbol& sigma, int j,
                                            int k, int radius = 8,
                                            int samples = 32);

/// Symbol whose separable terms are the expansion modes mapped back to the
/// original frequency scale: c e^{i a. 2^{-j} xi} theta~(2^{-j}|xi|) x
/// e^{i b. 2^{-k} eta} theta~(2^{-k}|eta|). Equals the original symbol on
/// supp psi_j x psi_k up to the tail bound.
BilinearSymbol expansion_to_symbol(const SeparableExpansion& exp);

}  // namespace wavelab
