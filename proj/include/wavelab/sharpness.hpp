#pragma once

#include "wavelab/grid.hpp"
#include "wavelab/kernels.hpp"
#include "wavelab/phase.hpp"
#include "wavelab/regress.hpp"
#include "wavelab/symbols.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wavelab {

struct SharpnessConfig {
  int n = 2;
  double p = 1.0, q = 1.0;   // input exponents; r from 1/r = 1/p + 1/q
  int j_min = 5, j_max = 8;
  double delta = 0.5;        // Case 3 lattice parameter
  double delta_prime = 0.0;  // defaults to delta / (2 sqrt(n))
  int sign_draws = 64;       // Monte-Carlo cross-check of the sign average
  std::uint64_t seed = 12345;

  double r() const;                 // output exponent (may be inf)
  double dprime() const;            // delta_prime with the default applied
  void validate() const;            // throws std::invalid_argument
};

struct ExperimentRecord {
  std::string case_id;
  int n = 2;
  double p = 0.0, q = 0.0, m = 0.0;
  int j = 0;
  double value = 0.0;   // the fitted quantity (ratio or statistic)
  double norm_f = 0.0, norm_g = 0.0, norm_out = 0.0;
  std::uint64_t seed = 0;
  int grid_samples = 0;
  double grid_box = 0.0;
};

struct CaseResult {
  std::vector<ExperimentRecord> records;
  SlopeFit fit;
};

/// Grid used by the sharpness experiments at scale j.
GridSpec sharpness_grid(int n, int j);

enum class TestKind { f_j, f_tilde_j };

/// f_j = (psi(2^{-j}|xi|))^v or f~_j = (e^{-i|xi|} psi(2^{-j}|xi|))^v,
/// with band certificate [2^{j-1}, 2^{j+1}].
Field make_test_function(TestKind kind, int j, const GridSpec& grid);

/// Lattice sum g = sum_l alpha_l f_j(x - s l), s = delta' 2^{-j}, with
/// alpha = 1 on the box |l|_inf <= K, K = floor(1/(s sqrt(n))) (so the
/// translates stay inside the unit ball); implemented spectrally with the
/// closed-form Dirichlet factor per axis.
Field make_lattice_ones(int j, double delta_prime, const GridSpec& grid);

/// General finitely supported lattice coefficients (for cross-checks).
struct LatticePoint {
  std::array<int, 2> l{};
  double alpha = 0.0;
};
Field make_lattice_function(int j, double delta_prime,
                            const std::vector<LatticePoint>& alpha,
                            const GridSpec& grid);

/// Case 1: f = g = f_j, out = (S_j f_j)^2, ratio in L^r vs L^p x L^q.
/// Requires p, q <= 2.
CaseResult run_case1(const SharpnessConfig& cfg);

/// Case 2: f = g = f~_j; S_j f~_j = (psi(2^{-j}|xi|)^2)^v exactly (the wave
/// phases cancel); X_r = BMO when r = inf. Requires p, q >= 2.
CaseResult run_case2(const SharpnessConfig& cfg);

/// Case 3 statistic (exact Rademacher second moment):
///   T(j) = sum_l ( sum_nu | int_{Q_nu} S(x) S(x - s l) dx |^2 )^{q'/2}
/// over lattice shifts 0 < |s l| < 1, s = delta' 2^{-j}, with S = S_j f_j
/// evaluated from its radial kernel profile and Q_nu the cubes of side s
/// near the intersection set {|x| = |x - s l| = 1}. q' = 1 (p=1, q=inf)
/// is the validated default; n = 2 only.
struct Case3Diagnostics {
  int j = 0;
  double statistic = 0.0;
  std::size_t ell_count = 0;        // lattice shifts enumerated
  double ell_per_2jn = 0.0;         // ell_count / 2^{jn}
  int cubes_per_ell = 0;            // cubes kept near each intersection set
  double best_piece_over_2j = 0.0;  // max |int| / (c0^2 delta'^2 2^j)
  double mc_ratio_min = 0.0;        // sign-average / l2 statistic, sampled l
  double mc_ratio_max = 0.0;
};
struct Case3Result {
  CaseResult base;
  std::vector<Case3Diagnostics> diagnostics;
};
Case3Result run_case3(const SharpnessConfig& cfg);

/// Per-cube integral of S(x) S(x-v) over the cube of side s centered at c,
/// from a radial profile of S (tensor Gauss-Legendre). Exposed for oracles.
cplx case3_pair_integral(const KernelProfile& profile, Point v, Point c,
                         double s);

/// Radial profile of S_j f_j = (e^{i|xi|} psi(2^{-j}|xi|)^2)^v (conjugate of
/// the outgoing kernel built on psi^2).
KernelProfile sjfj_profile(int j, int n, const std::vector<double>& radii);

/// Upper-bound consistency sweep: per j apply the dyadic symbol family
/// sigma_j = 2^{jm} theta(2^{-j}|xi|) theta(2^{-j}|eta|) with wave phases
/// phi1, phi2 to a battery of inputs (f_j, f~_j, seeded random band-limited
/// pairs) and record the maximal L^p x L^q -> X_r ratio; for (p, q) = (1, inf)
/// the Case 3 statistic enters the battery as 2^{jm} T(j) 2^{-jn}, the
/// quantity whose growth detects super-critical m.
CaseResult upper_bound_sweep(const SharpnessConfig& cfg, double m,
                             const WavePhase& phi1, const WavePhase& phi2);

}  // namespace wavelab
