#pragma once

#include "wavelab/cutoffs.hpp"
#include "wavelab/grid.hpp"
#include "wavelab/phase.hpp"
#include "wavelab/regress.hpp"

#include <vector>

namespace wavelab {

/// Radial samples of the wave kernel h_j = (e^{-i|xi|} psi(2^{-j}|xi|))^v.
struct KernelProfile {
  int j = 0;
  int n = 2;
  std::vector<double> radii;   // strictly increasing, > 0
  std::vector<cplx> values;    // h_j(|x|) at those radii

  /// Value at radius r by linear interpolation (radii must bracket r).
  cplx at(double r) const;
};

/// h_j sampled at the given radii by oscillatory quadrature of
///   (2pi)^{-n/2} int_0^inf J_{(n-2)/2}(rt) (rt)^{-(n-2)/2}
///                        psi(2^{-j} t) e^{-it} t^{n-1} dt
/// over the support [2^{j-1}, 2^{j+1}]. Gauss-Legendre panels sized for
/// >= 10 nodes per oscillation wavelength at the largest radius; panel
/// doubling must agree to 1e-6 relative (std::runtime_error otherwise).
KernelProfile radial_wave_kernel(const DyadicPartition& part, int j, int n,
                                 std::vector<double> radii);

/// Same quadrature for an arbitrary real radial spectral profile g(t)
/// supported in [a, b]; `check_scale` sets the amplitude against which the
/// panel-doubling tolerance is measured (use the expected peak magnitude).
KernelProfile radial_oscillatory_kernel(const std::function<double(double)>& g,
                                        double a, double b, int n,
                                        std::vector<double> radii,
                                        double check_scale);

/// c0 = (2pi)^{-(n+1)/2} int psi(t) t^{(n-1)/2} dt  (> 0).
double plateau_constant(const DyadicPartition& part, int n);

/// Phase factor gamma = (n-2) pi/4 + pi/4 aligning h_j on the plateau:
/// e^{i gamma} 2^{-j(n+1)/2} h_j(r) -> c0 as j -> inf, |1-r| << 2^{-j}.
double plateau_phase(int n);

struct PlateauCertificate {
  bool ok = false;
  double delta = 0.0;         // certified plateau half-width (in units 2^{-j})
  int j0 = -1;                // invariant holds for all tested j > j0
  double phase = 0.0;         // gamma actually used
  std::vector<int> levels;    // tested j
  std::vector<double> deviation_at_one;  // |e^{ig}2^{-j(n+1)/2}h_j(1) - c0|
};

/// Largest delta from delta_grid and smallest j0 such that
/// |e^{i gamma} 2^{-j(n+1)/2} h_j(r) - c0| <= c0/10 for all profile radii
/// with |1 - r| < delta 2^{-j} and all j > j0. Profiles must cover a
/// contiguous j range and sample the plateau.
PlateauCertificate certify_plateau(const std::vector<KernelProfile>& profiles,
                                   double c0,
                                   const std::vector<double>& delta_grid);

inline const std::vector<double> kDeltaGrid = {1.0, 0.5, 0.25, 0.1, 0.05};

struct EnvelopeReport {
  double L = 0.0;
  double C = 0.0;                    // minimal single constant across scales
  std::vector<double> per_scale_C;   // for stability diagnostics
  bool ok = false;                   // C below the 1e6 cap
};

/// Minimal C with |h_j(r)| <= C 2^{j(n+1)/2} (1 + 2^j |1-r|)^{-L} over all
/// profiles and radii.
EnvelopeReport envelope_fit(const std::vector<KernelProfile>& profiles,
                            double L);

/// ||h_j||_{L^p(R^n)} from a profile whose radii cover (0, r_max] densely
/// enough; trapezoid in r with surface-measure weight.
double kernel_lp_norm(const KernelProfile& profile, double p);

/// Radius set tailored to h_j: fine grid r = 1 + u 2^{-j}, |u| <= window,
/// plus a coarse grid on the rest of (0, r_max].
std::vector<double> kernel_radius_grid(int j, double window = 64.0,
                                       double r_max = 3.0);

enum class ProbeVariant { lowpass, highpass };

struct ProbeReport {
  std::vector<double> levels;
  std::vector<double> values;  // L^1 norms per level
  SlopeFit fit;
};

/// L^1 norms of wave-modulated cutoff kernels.
/// highpass: ||(e^{i phi(xi)} theta(2^{-j}|xi|))^v||_1 per j — grows like
///   2^{j(n-1)/2}.
/// lowpass: ||(e^{i 2^{-j} phi(xi)} lowpass(|xi|))^v||_1 per j — by the
///   degree-1 homogeneity of phi this equals the norm for the cutoff
///   lowpass(2^j |xi|) of shrinking support, and stays bounded in j.
ProbeReport l1_scaling_probe(const WavePhase& phi, const RadialBump& theta,
                             int j_min, int j_max, ProbeVariant variant,
                             int dim = 2);

}  // namespace wavelab
