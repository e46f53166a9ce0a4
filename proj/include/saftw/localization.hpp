#pragma once

// Window geometry: energy center and root-second-moment radius of analyzing
// functions in both domains, the transform-domain window built from a chirped
// reflection of the mother wavelet, the scale-invariant quality factor, and
// the time-frequency concentration box.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "saftw/errors.hpp"
#include "saftw/numerics.hpp"
#include "saftw/nsawt.hpp"
#include "saftw/params.hpp"
#include "saftw/saft.hpp"
#include "saftw/signals.hpp"

namespace saftw {

struct WindowStats {
  double center = 0.0;
  double radius = 0.0;
};

inline WindowStats window_stats(const SampledSignal& w) {
  const std::size_t n = w.grid.count;
  double energy = 0.0, first = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = trapezoid_weight(k, n) * std::norm(w.samples[k]);
    energy += d;
    first += d * w.grid.point(k);
  }
  if (energy <= 0.0) throw ZeroNorm("window statistics need a nonzero signal");
  const double center = first / energy;
  double second = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = w.grid.point(k) - center;
    second += trapezoid_weight(k, n) * std::norm(w.samples[k]) * d * d;
  }
  return WindowStats{center, std::sqrt(second / energy)};
}

struct DaughterWindowLaw {
  WindowStats predicted;
  WindowStats measured;
};

// The daughter's modulus is an affine image of the mother's, so its center
// and radius obey center = t + z·E, radius = z·Δ; the chirp drops out.
inline DaughterWindowLaw daughter_window_law(const MotherWavelet& psi, double t,
                                             double zeta, const SaftMatrix& m) {
  if (zeta <= 0.0) throw NonpositiveScale("scale must be positive");
  const WindowStats mother = window_stats(psi.signal);
  const UniformGrid image{t + zeta * psi.signal.grid.origin, zeta * psi.signal.grid.step,
                          psi.signal.grid.count};
  const SampledSignal d = daughter_wavelet(psi, t, zeta, m, image);
  return DaughterWindowLaw{
      WindowStats{t + zeta * mother.center, zeta * mother.radius}, window_stats(d)};
}

// Transform-domain window: the transform of
//   exp{ i/(2B) (2 x z p - 2 x p - A x²) } conj(psi(-x))
// evaluated on the requested frequency grid.
inline Spectrum gamma_window(const SampledSignal& mother, double zeta, const SaftMatrix& m,
                             const UniformGrid& grid) {
  if (zeta <= 0.0) throw NonpositiveScale("scale must be positive");
  if (m.b == 0.0) throw DegenerateB();
  const UniformGrid base = mother.grid;
  std::vector<cd> vals(base.count);
  for (std::size_t k = 0; k < base.count; ++k) {
    const double x = base.point(k);
    const double phase =
        (2.0 * x * zeta * m.p - 2.0 * x * m.p - m.a * x * x) / (2.0 * m.b);
    vals[k] = std::polar(1.0, phase) * std::conj(sample_at(mother, -x));
  }
  return saft_direct(SampledSignal{base, std::move(vals)}, m, grid);
}

// Center/radius of the scaled transform-domain window; both grow linearly
// with the scale, so the raw stats are measured once and scaled by z.
inline WindowStats safd_window(const MotherWavelet& psi, double zeta, const SaftMatrix& m,
                               const UniformGrid& grid) {
  const WindowStats raw = window_stats(as_signal(gamma_window(psi.signal, zeta, m, grid)));
  return WindowStats{zeta * raw.center, zeta * raw.radius};
}

namespace detail {

// Exact stride-decimation of a long mother tabulation; keeps window scans
// cheap without interpolation error at the retained nodes.
inline SampledSignal decimate(const SampledSignal& f, std::size_t target) {
  if (f.grid.count <= target || target == 0) return f;
  const std::size_t stride = f.grid.count / target;
  const std::size_t count = f.grid.count / stride;
  std::vector<cd> vals(count);
  for (std::size_t k = 0; k < count; ++k) vals[k] = f.samples[k * stride];
  return SampledSignal{UniformGrid{f.grid.origin, f.grid.step * static_cast<double>(stride), count},
                       std::move(vals)};
}

// Locate the transform-domain support with the fast path, then measure stats
// on a fine grid spanning it.
inline WindowStats gamma_stats_auto(const SampledSignal& mother, double zeta,
                                    const SaftMatrix& m) {
  std::vector<cd> vals(mother.grid.count);
  for (std::size_t k = 0; k < mother.grid.count; ++k) {
    const double x = mother.grid.point(k);
    const double phase =
        (2.0 * x * zeta * m.p - 2.0 * x * m.p - m.a * x * x) / (2.0 * m.b);
    vals[k] = std::polar(1.0, phase) * std::conj(sample_at(mother, -x));
  }
  const SampledSignal h{mother.grid, std::move(vals)};
  const Spectrum coarse = saft_fast(h, m);
  const double peak = max_abs(coarse.values);
  if (peak <= 0.0) throw ZeroNorm("transform-domain window vanishes");
  double lo = 0.0, hi = 0.0;
  bool found = false;
  for (std::size_t k = 0; k < coarse.grid.count; ++k) {
    if (std::abs(coarse.values[k]) < 1e-6 * peak) continue;
    const double w = coarse.grid.point(k);
    if (!found) {
      lo = hi = w;
      found = true;
    } else {
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
  }
  const double pad = 0.15 * (hi - lo) + 2.0 * coarse.grid.step;
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo) + pad;
  const UniformGrid fine = make_grid(center, half, 1024);
  return window_stats(as_signal(saft_direct(h, m, fine)));
}

}  // namespace detail

// Quality factor radius/center of the transform-domain window, at each
// requested scale. The z-scaling cancels in the ratio, so constancy across
// scales is the meaningful check.
inline std::vector<double> q_factor(const MotherWavelet& psi, const SaftMatrix& m,
                                    const std::vector<double>& zeta_samples) {
  const SampledSignal dec = detail::decimate(psi.signal, 4096);
  std::vector<double> q(zeta_samples.size());
  for (std::size_t i = 0; i < zeta_samples.size(); ++i) {
    if (zeta_samples[i] <= 0.0) throw NonpositiveScale("scale must be positive");
    const WindowStats s = detail::gamma_stats_auto(dec, zeta_samples[i], m);
    if (std::abs(s.center) < 1e-8 * s.radius)
      throw ZeroCenter("transform-domain window is centered at zero; quality factor undefined");
    q[i] = s.radius / s.center;
  }
  return q;
}

struct TfBox {
  double time_lo = 0.0, time_hi = 0.0;
  double freq_lo = 0.0, freq_hi = 0.0;
  double area() const { return (time_hi - time_lo) * (freq_hi - freq_lo); }
};

inline TfBox tf_box(const MotherWavelet& psi, double t, double zeta, const SaftMatrix& m) {
  const WindowStats mother = window_stats(psi.signal);
  const SampledSignal dec = detail::decimate(psi.signal, 4096);
  const WindowStats gamma = detail::gamma_stats_auto(dec, zeta, m);  // unscaled stats
  const double tc = t + zeta * mother.center;
  const double th = zeta * mother.radius;
  const double fc = zeta * gamma.center;
  const double fh = zeta * gamma.radius;
  return TfBox{tc - th, tc + th, fc - fh, fc + fh};
}

}  // namespace saftw
