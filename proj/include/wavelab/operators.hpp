#pragma once

#include "wavelab/grid.hpp"
#include "wavelab/phase.hpp"
#include "wavelab/symbols.hpp"

#include <functional>

namespace wavelab {

/// Apply a scalar Fourier multiplier m(xi) to a physical-side field:
/// out = (m(xi) fhat(xi))^v. Throws if the multiplier moves appreciable
/// mass past the Nyquist guard of the grid.
Field linear_multiplier_apply(const std::function<cplx(Point)>& mult,
                              const Field& f);

/// Bilinear multiplier out(x) = (2pi)^{-n} sum over the frequency grid of
/// sigma(xi, eta) fhat(xi) ghat(eta) e^{i(xi+eta)x} dxi^n deta^n.
/// Uses the separable fast path (one inverse transform per term, pointwise
/// product in x) when the symbol provides it, otherwise falls back to the
/// dense oracle. Inputs are physical-side fields on the same grid.
Field bilinear_multiplier_apply(const BilinearSymbol& sigma, const Field& f,
                                const Field& g);

/// Reference evaluation of the same sum by grouping on s = xi + eta:
/// outhat(s) = (2pi)^{-n} deta^n sum_eta sigma(s - eta, eta) fhat(s - eta)
/// ghat(eta), with periodic wrap of s - eta onto the frequency grid, then a
/// single inverse transform. O(N^{2n}) but exact for grid-supported spectra.
Field bilinear_dense_oracle(const BilinearSymbol& sigma, const Field& f,
                            const Field& g);

/// Wave variant: symbol sigma(xi,eta) e^{i(phi1(xi) + phi2(eta))}. The phase
/// factors are folded into the input spectra (premodulation), so the fast
/// separable path of `sigma` stays usable.
Field wave_bilinear_apply(const BilinearSymbol& sigma, const WavePhase& phi1,
                          const WavePhase& phi2, const Field& f,
                          const Field& g);

/// Half-wave dyadic piece: S_j f = (e^{i|xi|} psi(2^{-j}|xi|) fhat)^v.
/// Requires 2^{j+2} <= nyquist * guard on f's grid (throws otherwise).
Field sj_apply(int j, const Field& f);

/// Largest j admissible on a grid under the guard above.
int max_dyadic_level(const GridSpec& grid);

}  // namespace wavelab
