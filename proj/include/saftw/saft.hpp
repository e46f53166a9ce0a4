#pragma once

// The six-parameter affine Fourier transform:
//
//   F[f](w) = ∫ f(x) K(x, w) dx,   B != 0,
//   K(x, w) = K_B · exp{ i/(2B) (A x² + 2x(p - w) - 2w(Dp - Bq) + D w²) }
//
// with K_B = 1/sqrt(2π|B|). The degenerate B = 0 branch is a scaled, chirped
// point evaluation. The fast path factors the kernel into chirp · Fourier ·
// chirp and runs on its own "native" frequency grid; the inverse reuses the
// same machinery with the inverse parameter set.

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "saftw/errors.hpp"
#include "saftw/fft.hpp"
#include "saftw/numerics.hpp"
#include "saftw/params.hpp"
#include "saftw/threads.hpp"

namespace saftw {

namespace detail {

// Frequency-only part of the kernel phase.
inline double rho_phase(const SaftMatrix& m, double w) {
  return (m.d * w * w - 2.0 * w * (m.d * m.p - m.b * m.q)) / (2.0 * m.b);
}

}  // namespace detail

inline cd kernel(const SaftMatrix& m, double x, double w) {
  if (m.b == 0.0) throw DegenerateB();
  const double theta = (m.a * x * x + 2.0 * x * (m.p - w)) / (2.0 * m.b) +
                       detail::rho_phase(m, w);
  return k_b(m).value * std::polar(1.0, theta);
}

// Largest |w - p| for which the kernel stays resolved at >= 8 samples per
// oscillation period on a grid with the given extent and step.
inline double saft_legal_halfwidth(const SaftMatrix& m, const UniformGrid& in) {
  if (m.b == 0.0) throw DegenerateB();
  return std::abs(m.b) * (pi / (4.0 * in.step)) - std::abs(m.a) * in.abs_max();
}

inline void check_oscillation_guard(const SaftMatrix& m, const UniformGrid& in,
                                    const UniformGrid& out) {
  const double off = std::max(std::abs(m.p - out.origin), std::abs(m.p - out.back()));
  const double freq = (std::abs(m.a) * in.abs_max() + off) / std::abs(m.b);
  if (freq * in.step > pi / 4.0)
    throw UnderResolved("kernel needs >= 8 samples per period: local frequency " +
                        std::to_string(freq) + " at step " + std::to_string(in.step));
}

namespace detail {

// Shared quadrature engine: direct transform and inverse differ only in the
// parameter set and in which grid plays "input".
inline std::vector<cd> quadrature_transform(const std::vector<cd>& values,
                                            const UniformGrid& in,
                                            const SaftMatrix& m,
                                            const UniformGrid& out) {
  const std::size_t n = in.count;
  const std::size_t mcount = out.count;
  const cd constant = k_b(m).value;
  std::vector<cd> result(mcount);
  parallel_for(mcount, [&](std::size_t k) {
    const double w = out.point(k);
    const double rho = rho_phase(m, w);
    cd acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = in.point(i);
      const double theta = (m.a * x * x + 2.0 * x * (m.p - w)) / (2.0 * m.b) + rho;
      acc += trapezoid_weight(i, n) * values[i] * std::polar(1.0, theta);
    }
    result[k] = acc * (constant * in.step);
  });
  return result;
}

}  // namespace detail

inline Spectrum saft_direct(const SampledSignal& f, const SaftMatrix& m,
                            const UniformGrid& out) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  out.require_valid();
  check_oscillation_guard(m, f.grid, out);
  warn_if_poor_edge_decay(f, "saft_direct");
  return Spectrum{out, detail::quadrature_transform(f.samples, f.grid, m, out)};
}

// B = 0 branch: sqrt(D) · exp{(i/2)(C D (w-p)² + 2 w q)} · f(D (w-p)),
// with f read off by linear interpolation. Requires D > 0.
inline Spectrum saft_bzero(const SampledSignal& f, const SaftMatrix& m,
                           const UniformGrid& out) {
  m.require_valid();
  if (m.b != 0.0) throw BadParameter("degenerate branch requires B = 0");
  if (m.d == 0.0) throw DegenerateD("degenerate branch requires D != 0");
  if (m.d < 0.0) throw DegenerateD("degenerate branch with D < 0 is not supported");
  out.require_valid();
  const double root = std::sqrt(m.d);
  std::vector<cd> vals(out.count);
  for (std::size_t k = 0; k < out.count; ++k) {
    const double w = out.point(k);
    const double shift = w - m.p;
    const double phase = 0.5 * (m.c * m.d * shift * shift + 2.0 * w * m.q);
    vals[k] = root * std::polar(1.0, phase) * sample_at(f, m.d * shift);
  }
  return Spectrum{out, std::move(vals)};
}

// Native frequency lattice of the fast path: w_j = B · 2π(j - N/2)/(N dx),
// reported in ascending order (the lattice flips when B < 0).
inline UniformGrid native_grid(const SaftMatrix& m, const UniformGrid& in) {
  if (m.b == 0.0) throw DegenerateB();
  const std::size_t n = next_pow2(in.count);
  const double dnu = two_pi / (static_cast<double>(n) * in.step);
  const double dw = std::abs(m.b) * dnu;
  const double half = static_cast<double>(n / 2);
  double w_first = m.b * dnu * (0.0 - half);
  double w_last = m.b * dnu * (static_cast<double>(n - 1) - half);
  return UniformGrid{std::min(w_first, w_last), dw, n};
}

// Chirp-premultiply, one radix-2 FFT, chirp-postmultiply. Identical to the
// direct sum on the native lattice up to rounding (the trapezoid end weights
// are folded into the premultiplied samples).
inline Spectrum saft_fast(const SampledSignal& f, const SaftMatrix& m) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  const std::size_t n0 = f.grid.count;
  const std::size_t n = next_pow2(n0);
  const double dx = f.grid.step;
  const double x0 = f.grid.origin;

  std::vector<cd> g(n, cd{});
  for (std::size_t i = 0; i < n0; ++i) {
    const double x = f.grid.point(i);
    const double phase = (m.a * x * x + 2.0 * x * m.p) / (2.0 * m.b);
    cd v = f.samples[i] * std::polar(1.0, phase) * trapezoid_weight(i, n0);
    if (i & 1) v = -v;  // shifts the frequency origin to the lattice center
    g[i] = v;
  }
  fft(g);

  const double dnu = two_pi / (static_cast<double>(n) * dx);
  const double half = static_cast<double>(n / 2);
  const cd constant = k_b(m).value;
  std::vector<cd> vals(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double nu = dnu * (static_cast<double>(j) - half);
    const double w = m.b * nu;
    const cd sum = g[j] * std::polar(1.0, -x0 * nu) * dx;
    vals[j] = constant * std::polar(1.0, detail::rho_phase(m, w)) * sum;
  }
  if (m.b < 0.0) std::reverse(vals.begin(), vals.end());
  return Spectrum{native_grid(m, f.grid), std::move(vals)};
}

// Inverse transform: the quadrature machinery run with the inverse parameter
// set, integrating over the spectrum grid.
inline SampledSignal isaft(const Spectrum& spectrum, const SaftMatrix& m,
                           const UniformGrid& out) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  out.require_valid();
  const SaftMatrix inv = inverse_matrix(m);
  warn_if_poor_edge_decay(as_signal(spectrum), "isaft");
  return SampledSignal{out,
                       detail::quadrature_transform(spectrum.values, spectrum.grid, inv, out)};
}

inline SampledSignal isaft_fast(const Spectrum& spectrum, const SaftMatrix& m) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  const Spectrum back = saft_fast(as_signal(spectrum), inverse_matrix(m));
  return as_signal(back);
}

enum class SaftPath { direct, fast };

struct SaftPlan {
  SaftMatrix matrix;
  UniformGrid input;
  UniformGrid output;
  SaftPath path = SaftPath::direct;
};

inline SaftPlan make_plan(const SaftMatrix& m, const UniformGrid& input, SaftPath path,
                          const UniformGrid& output = UniformGrid{}) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  input.require_valid();
  SaftPlan plan{m, input, output, path};
  if (path == SaftPath::fast) {
    plan.output = native_grid(m, input);
  } else {
    plan.output.require_valid();
    check_oscillation_guard(m, input, plan.output);
  }
  return plan;
}

inline Spectrum execute(const SaftPlan& plan, const SampledSignal& f) {
  if (f.grid.count != plan.input.count ||
      std::abs(f.grid.origin - plan.input.origin) > 1e-12 * (1.0 + std::abs(plan.input.origin)) ||
      std::abs(f.grid.step - plan.input.step) > 1e-12 * plan.input.step)
    throw GridMismatch("signal grid does not match plan input grid");
  return plan.path == SaftPath::fast ? saft_fast(f, plan.matrix)
                                     : saft_direct(f, plan.matrix, plan.output);
}

struct ParsevalPair {
  cd time_side;
  cd transform_side;
};

// Both spectra land on the same native lattice, so the transform-side inner
// product is taken over matching grids.
inline ParsevalPair parseval_pair(const SampledSignal& f, const SampledSignal& g,
                                  const SaftMatrix& m) {
  const Spectrum fs = saft_fast(f, m);
  const Spectrum gs = saft_fast(g, m);
  return ParsevalPair{inner_product(f, g), inner_product(as_signal(fs), as_signal(gs))};
}

// Residual normalized by ‖f‖‖g‖ (the Cauchy-Schwarz scale), so orthogonal
// pairs with near-zero inner products are measured sensibly.
inline double parseval_residual(const SampledSignal& f, const SampledSignal& g,
                                const SaftMatrix& m) {
  const ParsevalPair pair = parseval_pair(f, g, m);
  const double scale = norm_l2(f) * norm_l2(g);
  const double diff = std::abs(pair.time_side - pair.transform_side);
  return scale == 0.0 ? diff : diff / scale;
}

}  // namespace saftw
