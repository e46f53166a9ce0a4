#pragma once

// Chirp-twisted convolution compatible with the affine transform:
//
//   h(t) = K_B · conj(chirp(t)) · (f_chirped * g_chirped)(t)
//
// where chirp(x) = exp{i A x² / (2B)}. Its transform factors as
// F[h](w) = Φ(w) · F[f](w) · F[g](w) with the unit-modulus Φ below.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "saftw/errors.hpp"
#include "saftw/fft.hpp"
#include "saftw/numerics.hpp"
#include "saftw/params.hpp"
#include "saftw/saft.hpp"
#include "saftw/signals.hpp"

namespace saftw {

struct ChirpedPair {
  SampledSignal forward;   // chirp · f
  SampledSignal backward;  // conj(chirp) · f
};

inline ChirpedPair chirp_pair(const SampledSignal& f, const SaftMatrix& m) {
  if (m.b == 0.0) throw DegenerateB();
  std::vector<cd> fwd(f.grid.count), bwd(f.grid.count);
  for (std::size_t k = 0; k < f.grid.count; ++k) {
    const cd c = chirp_modulation(m, f.grid.point(k));
    fwd[k] = f.samples[k] * c;
    bwd[k] = f.samples[k] * std::conj(c);
  }
  return ChirpedPair{SampledSignal{f.grid, std::move(fwd)},
                     SampledSignal{f.grid, std::move(bwd)}};
}

// Discrete twisted convolution on the shared input grid. The linear
// convolution's central segment lands back on the grid only when origin/step
// is an integer; anything else cannot represent h on the input lattice.
inline SampledSignal saft_convolve(const SampledSignal& f, const SampledSignal& g,
                                   const SaftMatrix& m) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  if (f.grid.count != g.grid.count ||
      std::abs(f.grid.origin - g.grid.origin) > 1e-12 * (1.0 + std::abs(f.grid.origin)) ||
      std::abs(f.grid.step - g.grid.step) > 1e-12 * f.grid.step)
    throw GridMismatch("twisted convolution requires a shared grid");
  const double ratio = f.grid.origin / f.grid.step;
  const double r_real = std::round(ratio);
  if (std::abs(ratio - r_real) > 1e-9)
    throw GridMismatch("grid origin must be an integer multiple of the step");
  const auto r = static_cast<long long>(r_real);

  warn_if_poor_edge_decay(f, "saft_convolve");
  warn_if_poor_edge_decay(g, "saft_convolve");

  const std::vector<cd> conv =
      linear_convolution(chirp_pair(f, m).forward.samples, chirp_pair(g, m).forward.samples);
  const cd constant = k_b(m).value * f.grid.step;
  const auto n = static_cast<long long>(f.grid.count);
  std::vector<cd> h(f.grid.count, cd{});
  for (long long k = 0; k < n; ++k) {
    const long long j = k - r;
    if (j < 0 || j >= 2 * n - 1) continue;
    const double t = f.grid.point(static_cast<std::size_t>(k));
    h[static_cast<std::size_t>(k)] =
        constant * std::conj(chirp_modulation(m, t)) * conv[static_cast<std::size_t>(j)];
  }
  return SampledSignal{f.grid, std::move(h)};
}

inline cd phase_factor(const SaftMatrix& m, double w) {
  if (m.b == 0.0) throw DegenerateB();
  return std::polar(1.0, -detail::rho_phase(m, w));
}

// Relative sup-norm gap between the transform of the twisted convolution and
// the phase-weighted product of the individual transforms, evaluated by the
// quadrature path on both sides over the resolved band around p.
inline double convolution_theorem_residual(const SampledSignal& f, const SampledSignal& g,
                                           const SaftMatrix& m) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  const double halfwidth = saft_legal_halfwidth(m, f.grid);
  if (halfwidth <= 0.0)
    throw UnderResolved("input grid cannot resolve the kernel anywhere");
  const UniformGrid band = make_grid(m.p, halfwidth, 400);

  const SampledSignal h = saft_convolve(f, g, m);
  const Spectrum lhs = saft_direct(h, m, band);
  const Spectrum fs = saft_direct(f, m, band);
  const Spectrum gs = saft_direct(g, m, band);

  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < band.count; ++k) {
    const cd rhs = phase_factor(m, band.point(k)) * fs.values[k] * gs.values[k];
    num = std::max(num, std::abs(lhs.values[k] - rhs));
    den = std::max(den, std::abs(rhs));
  }
  return den == 0.0 ? num : num / den;
}

}  // namespace saftw
