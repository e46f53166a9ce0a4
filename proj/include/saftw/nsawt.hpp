#pragma once

// Scale–translation analysis built on the affine kernel. The daughter family
//
//   psi_{t,z}(x) = (K_B/sqrt(z)) psi((x-t)/z) exp{i A x (t - x) / B}
//
// yields coefficients W(t,z) = <f, psi_{t,z}>. A spectral factorization
// turns each fixed-scale row into a product in the transform domain, which
// also drives the admissibility constant, the orthogonality relation, the
// synthesis formula, and the range projection below.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "saftw/convolution.hpp"
#include "saftw/errors.hpp"
#include "saftw/fft.hpp"
#include "saftw/numerics.hpp"
#include "saftw/params.hpp"
#include "saftw/saft.hpp"
#include "saftw/signals.hpp"
#include "saftw/threads.hpp"

namespace saftw {

struct MotherWavelet {
  std::string name;
  SampledSignal signal;
  double l2_norm = 0.0;
  // Largest |w| carrying spectral mass above 1e-6 of the peak (classical
  // Fourier spectrum); feeds the resolution guard of the analysis transforms.
  double spectral_radius = 0.0;
};

inline MotherWavelet make_mother(std::string name, SampledSignal signal) {
  const double nrm = norm_l2(signal);
  if (nrm <= 0.0) throw ZeroNorm("mother wavelet must have positive norm");
  if (edge_decay(signal) > 1e-10)
    throw BadParameter("mother wavelet must decay to 1e-10 of its peak at the grid edges");
  const Spectrum spec = saft_fast(signal, presets::fourier());
  double peak = max_abs(spec.values);
  double radius = 0.0;
  for (std::size_t k = 0; k < spec.grid.count; ++k)
    if (std::abs(spec.values[k]) >= 1e-6 * peak)
      radius = std::max(radius, std::abs(spec.grid.point(k)));
  return MotherWavelet{std::move(name), std::move(signal), nrm, radius};
}

inline constexpr double mother_halfwidth = 8.0;
inline constexpr std::size_t mother_samples = 65536;

inline MotherWavelet make_morlet(double omega0 = 5.0) {
  const UniformGrid g = make_grid(0.0, mother_halfwidth, mother_samples);
  return make_mother("morlet", gen_morlet(g, omega0));
}

inline MotherWavelet make_morlet_real(double omega0 = 5.0) {
  const UniformGrid g = make_grid(0.0, mother_halfwidth, mother_samples);
  return make_mother("morlet-real", gen_morlet_real(g, omega0));
}

inline MotherWavelet make_gaussian_mother(double sigma = 1.0) {
  const UniformGrid g = make_grid(0.0, mother_halfwidth, mother_samples);
  return make_mother("gaussian", gen_gaussian(g, sigma));
}

inline SampledSignal daughter_wavelet(const MotherWavelet& psi, double t, double zeta,
                                      const SaftMatrix& m, const UniformGrid& grid) {
  if (zeta <= 0.0) throw NonpositiveScale("daughter scale must be positive");
  if (m.b == 0.0) throw DegenerateB();
  grid.require_valid();
  const cd factor = k_b(m).value / std::sqrt(zeta);
  std::vector<cd> vals(grid.count);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    const cd base = sample_at(psi.signal, (x - t) / zeta);
    vals[k] = factor * base * std::polar(1.0, m.a * x * (t - x) / m.b);
  }
  return SampledSignal{grid, std::move(vals)};
}

struct Scalogram {
  UniformGrid t_grid;
  ScaleGrid scale_grid;
  std::vector<cd> coeffs;  // row-major: [i * n_scales + j] for (t_i, zeta_j)
  SaftMatrix matrix;
  std::string wavelet_id;

  cd& at(std::size_t i, std::size_t j) { return coeffs[i * scale_grid.count + j]; }
  const cd& at(std::size_t i, std::size_t j) const {
    return coeffs[i * scale_grid.count + j];
  }
  void require_valid() const {
    if (coeffs.size() != t_grid.count * scale_grid.count)
      throw BadParameter("scalogram dimensions do not match grids");
    for (const auto& v : coeffs)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw BadParameter("scalogram contains non-finite coefficients");
  }
};

namespace detail {

// Index range of `grid` covered by the daughter at (t, zeta): outside the
// mother's scaled support every sample reads zero, so loops skip it.
inline std::pair<std::size_t, std::size_t> support_range(const UniformGrid& grid,
                                                         const UniformGrid& mother,
                                                         double t, double zeta) {
  const double lo = t + zeta * mother.origin;
  const double hi = t + zeta * mother.back();
  const double a = std::ceil((lo - grid.origin) / grid.step);
  const double b = std::floor((hi - grid.origin) / grid.step);
  if (b < 0.0 || a > static_cast<double>(grid.count - 1) || b < a)
    return {1, 0};  // empty
  const std::size_t k_lo = a <= 0.0 ? 0 : static_cast<std::size_t>(a);
  const std::size_t k_hi = std::min(grid.count - 1, static_cast<std::size_t>(b));
  return {k_lo, k_hi};
}

// Resolution guard for the analysis quadrature: the integrand oscillates at
// most at the mother rate (compressed by the smallest scale) plus the chirp
// rate |A|(|t| + 2|x|)/|B|; require >= 8 samples per period of that bound.
inline void check_nsawt_guard(const MotherWavelet& psi, const UniformGrid& signal_grid,
                              const UniformGrid& t_grid, double zeta_min,
                              const SaftMatrix& m) {
  const double t_max = std::max(std::abs(t_grid.origin), std::abs(t_grid.back()));
  const double freq = psi.spectral_radius / zeta_min +
                      std::abs(m.a) * (t_max + 2.0 * signal_grid.abs_max()) / std::abs(m.b);
  if (freq * signal_grid.step > pi / 4.0)
    throw UnderResolved("analysis kernel needs >= 8 samples per period: frequency bound " +
                        std::to_string(freq) + " at step " + std::to_string(signal_grid.step));
}

}  // namespace detail

inline Scalogram nsawt_direct(const SampledSignal& f, const MotherWavelet& psi,
                              const UniformGrid& t_grid, const ScaleGrid& scale_grid,
                              const SaftMatrix& m) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  t_grid.require_valid();
  detail::check_nsawt_guard(psi, f.grid, t_grid, scale_grid.zeta_min, m);
  const auto zetas = scale_grid.nodes();
  Scalogram w{t_grid, scale_grid,
              std::vector<cd>(t_grid.count * scale_grid.count), m, psi.name};
  const std::size_t n = f.grid.count;
  const double dx = f.grid.step;
  const double ratio = m.a / m.b;
  parallel_for(scale_grid.count, [&](std::size_t j) {
    const double zeta = zetas[j];
    const cd factor = std::conj(k_b(m).value) / std::sqrt(zeta);
    for (std::size_t i = 0; i < t_grid.count; ++i) {
      const double t = t_grid.point(i);
      const auto [k_lo, k_hi] = detail::support_range(f.grid, psi.signal.grid, t, zeta);
      cd acc = 0.0;
      if (ratio == 0.0) {
        for (std::size_t k = k_lo; k <= k_hi; ++k) {
          const double x = f.grid.point(k);
          acc += trapezoid_weight(k, n) * f.samples[k] *
                 std::conj(sample_at(psi.signal, (x - t) / zeta));
        }
      } else {
        for (std::size_t k = k_lo; k <= k_hi; ++k) {
          const double x = f.grid.point(k);
          const cd base = sample_at(psi.signal, (x - t) / zeta);
          if (base == cd{}) continue;
          acc += trapezoid_weight(k, n) * f.samples[k] * std::conj(base) *
                 std::polar(1.0, -ratio * x * (t - x));
        }
      }
      w.at(i, j) = factor * acc * dx;
    }
  });
  w.require_valid();
  return w;
}

// Chirped reflection whose transform carries the fixed-scale filter:
//   Psi(x,z) = exp{ i/(2B) (A x² (z²-1) + 2 x p (z-1)) } conj(psi(-x)).
inline SampledSignal capital_psi(const MotherWavelet& psi, double zeta,
                                 const SaftMatrix& m, const UniformGrid& grid) {
  if (zeta <= 0.0) throw NonpositiveScale("scale must be positive");
  if (m.b == 0.0) throw DegenerateB();
  grid.require_valid();
  std::vector<cd> vals(grid.count);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = grid.point(k);
    const double phase =
        (m.a * x * x * (zeta * zeta - 1.0) + 2.0 * x * m.p * (zeta - 1.0)) / (2.0 * m.b);
    vals[k] = std::polar(1.0, phase) * std::conj(sample_at(psi.signal, -x));
  }
  return SampledSignal{grid, std::move(vals)};
}

namespace detail {

// Four-point cubic (Catmull-Rom) read of a uniformly sampled spectrum;
// nullopt when the argument falls outside the sampled band.
inline std::optional<cd> cubic_read(const Spectrum& s, double w) {
  const double u = (w - s.grid.origin) / s.grid.step;
  const auto n = static_cast<double>(s.grid.count - 1);
  if (u < 0.0 || u > n) return std::nullopt;
  auto idx = static_cast<long long>(u);
  if (idx >= static_cast<long long>(s.grid.count) - 1) idx = static_cast<long long>(s.grid.count) - 2;
  const double t = u - static_cast<double>(idx);
  const auto pick = [&](long long k) {
    k = std::clamp(k, 0LL, static_cast<long long>(s.grid.count) - 1);
    return s.values[static_cast<std::size_t>(k)];
  };
  const cd p0 = pick(idx - 1), p1 = pick(idx), p2 = pick(idx + 1), p3 = pick(idx + 2);
  return 0.5 * (2.0 * p1 + (p2 - p0) * t + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * t * t +
                (3.0 * p1 - p0 - 3.0 * p2 + p3) * t * t * t);
}

// Transform of the fixed-scale filter on an 8x zero-padded lattice, fine
// enough for the cubic read. Rows are built one scale at a time (a row of
// the padded lattice is a few MB) rather than tabulated for all scales.
// The row is stored with the kernel's output chirp removed: that factor
// oscillates too fast for the cubic read at off-lattice arguments, and the
// consumers either cancel it against phase_factor (the analysis product)
// or take magnitudes only (the admissibility scan). Removing it at the
// row's own nodes is exact.
inline Spectrum spectral_filter_row(const MotherWavelet& psi, double zeta,
                                    const SaftMatrix& m) {
  const UniformGrid base = psi.signal.grid;
  const UniformGrid padded{base.origin, base.step, 8 * next_pow2(base.count)};
  SampledSignal big{padded, std::vector<cd>(padded.count, cd{})};
  const SampledSignal psi_row = capital_psi(psi, zeta, m, base);
  std::copy(psi_row.samples.begin(), psi_row.samples.end(), big.samples.begin());
  Spectrum row = saft_fast(big, m);
  for (std::size_t k = 0; k < row.grid.count; ++k)
    row.values[k] *= phase_factor(m, row.grid.point(k));
  return row;
}

// When the chirp in capital_psi is scale-independent (A = 0 and p = 0) one
// shared row serves every scale.
inline bool filter_row_is_shared(const SaftMatrix& m) {
  return m.a == 0.0 && m.p == 0.0;
}

}  // namespace detail

// Per-scale product in the transform domain: the transform of W(.,z)
// factorizes as sqrt(z) times the signal transform times the filter row
// read at z*w (the row demodulation already cancelled the kernel's output
// chirp), followed by an inverse transform to recover the row over t. The
// t grid is the fast path's native lattice for the signal grid.
inline Scalogram nsawt_spectral(const SampledSignal& f, const MotherWavelet& psi,
                                const ScaleGrid& scale_grid, const SaftMatrix& m) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  const UniformGrid t_grid = native_grid(inverse_matrix(m), native_grid(m, f.grid));
  detail::check_nsawt_guard(psi, f.grid, t_grid, scale_grid.zeta_min, m);

  // The fast inverse is periodic in translation with period equal to the
  // transformed span. A scale-z daughter keeps its support within half the
  // mother span times z of its translation, so the signal is zero-extended
  // until the periodic images of that reach cannot fold back into the
  // reported translation window. The lattices share step and centering, so
  // the output window is an exact sub-lattice of the extended one.
  const double psi_half_span =
      0.5 * psi.signal.grid.step * static_cast<double>(psi.signal.grid.count);
  const double needed = f.grid.step * static_cast<double>(f.grid.count) +
                        psi_half_span * scale_grid.zeta_max;
  std::size_t padded_count = next_pow2(f.grid.count);
  while (static_cast<double>(padded_count) * f.grid.step < needed) padded_count *= 2;
  const std::size_t lead = (padded_count - f.grid.count) / 2;
  SampledSignal padded{
      UniformGrid{f.grid.origin - f.grid.step * static_cast<double>(lead), f.grid.step,
                  padded_count},
      std::vector<cd>(padded_count, cd{})};
  std::copy(f.samples.begin(), f.samples.end(),
            padded.samples.begin() + static_cast<std::ptrdiff_t>(lead));
  const Spectrum fhat = saft_fast(padded, m);
  const UniformGrid t_full = native_grid(inverse_matrix(m), fhat.grid);
  const std::size_t t_lead = (t_full.count - t_grid.count) / 2;
  if (std::abs(t_full.point(t_lead) - t_grid.point(0)) >
      1e-9 * (1.0 + std::abs(t_grid.point(0))))
    throw GridMismatch("extended translation lattice does not contain the output lattice");
  const bool shared = detail::filter_row_is_shared(m);
  const Spectrum shared_row =
      shared ? detail::spectral_filter_row(psi, 1.0, m) : Spectrum{};
  const double f_peak = max_abs(fhat.values);
  const auto zetas = scale_grid.nodes();

  Scalogram w{t_grid, scale_grid,
              std::vector<cd>(t_grid.count * scale_grid.count), m, psi.name};
  parallel_for(scale_grid.count, [&](std::size_t j) {
    const double zeta = zetas[j];
    const double root = std::sqrt(zeta);
    const Spectrum own_row =
        shared ? Spectrum{} : detail::spectral_filter_row(psi, zeta, m);
    const Spectrum& filter = shared ? shared_row : own_row;
    std::vector<cd> product(fhat.grid.count);
    for (std::size_t k = 0; k < fhat.grid.count; ++k) {
      const double wk = fhat.grid.point(k);
      const auto filt = detail::cubic_read(filter, zeta * wk);
      if (!filt) {
        if (std::abs(fhat.values[k]) > 1e-12 * f_peak)
          throw InterpolationOutOfBand(
              "scaled filter argument outside the computed spectral support");
        product[k] = cd{};
        continue;
      }
      product[k] = root * fhat.values[k] * (*filt);
    }
    const SampledSignal row = isaft_fast(Spectrum{fhat.grid, std::move(product)}, m);
    for (std::size_t i = 0; i < t_grid.count; ++i) w.at(i, j) = row.samples[t_lead + i];
  });
  w.require_valid();
  return w;
}

struct AdmissibilityReport {
  std::vector<double> omega_grid;
  std::vector<double> c_psi_per_omega;
  double c_psi_mean = 0.0;
  double relative_spread = 0.0;
};

// C(w) = ∫ |F[Psi(.,z)](z w)|² dz/z over the scale range, evaluated per w on
// a log grid. Finiteness requires the end decades of the integrand to be
// negligible; a flat (or growing) end decade flags divergence.
inline AdmissibilityReport admissibility(const MotherWavelet& psi, const SaftMatrix& m,
                                         const UniformGrid& omega_grid,
                                         const ScaleGrid& scale_grid) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  omega_grid.require_valid();
  if (std::log10(scale_grid.zeta_max / scale_grid.zeta_min) < 3.0 - 1e-9)
    throw BadParameter("admissibility scan needs a scale range of at least 3 decades");
  const auto zetas = scale_grid.nodes();
  const auto logw = scale_log_weights(scale_grid);
  const bool shared = detail::filter_row_is_shared(m);
  const Spectrum shared_row =
      shared ? detail::spectral_filter_row(psi, 1.0, m) : Spectrum{};

  // Per-scale contributions to every omega, reduced afterwards in fixed
  // ascending-scale order so the result is independent of the thread count.
  std::vector<double> term(scale_grid.count * omega_grid.count, 0.0);
  parallel_for(scale_grid.count, [&](std::size_t j) {
    const Spectrum own_row =
        shared ? Spectrum{} : detail::spectral_filter_row(psi, zetas[j], m);
    const Spectrum& row = shared ? shared_row : own_row;
    for (std::size_t i = 0; i < omega_grid.count; ++i) {
      const auto filt = detail::cubic_read(row, zetas[j] * omega_grid.point(i));
      const double a = filt ? std::abs(*filt) : 0.0;
      term[j * omega_grid.count + i] = logw[j] * a * a;
    }
  });

  AdmissibilityReport report;
  report.omega_grid.resize(omega_grid.count);
  report.c_psi_per_omega.resize(omega_grid.count);
  // Divergence of the dz/z integral can only enter from the z -> 0 end (the
  // filter argument z·w goes to zero there; at the other end the 1/z weight
  // tames any square-integrable filter), so the detector watches the mass
  // share of the lowest scanned decade.
  const double lo_decade = scale_grid.zeta_min * 10.0;
  double worst_end_share = 0.0;
  for (std::size_t i = 0; i < omega_grid.count; ++i) {
    double total = 0.0, lo_share = 0.0;
    for (std::size_t j = 0; j < scale_grid.count; ++j) {
      const double t = term[j * omega_grid.count + i];
      total += t;
      if (zetas[j] <= lo_decade) lo_share += t;
    }
    report.omega_grid[i] = omega_grid.point(i);
    report.c_psi_per_omega[i] = total;
    if (total > 0.0) worst_end_share = std::max(worst_end_share, lo_share / total);
  }
  double sum = 0.0, lo = report.c_psi_per_omega[0], hi = lo;
  for (double c : report.c_psi_per_omega) {
    sum += c;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  report.c_psi_mean = sum / static_cast<double>(omega_grid.count);
  report.relative_spread = report.c_psi_mean > 0.0 ? (hi - lo) / report.c_psi_mean : 0.0;
  if (worst_end_share > 0.10)
    throw DivergentAdmissibility(
        "small-scale decade carries " + std::to_string(worst_end_share) +
        " of the scale integral (gate: 10%); the admissibility integral diverges");
  return report;
}

// Grid bundle for the theorem-verification runs: where the signal lives,
// where the scalogram lives, and where the admissibility constant is scanned.
struct NsawtGrids {
  UniformGrid signal_grid;
  UniformGrid t_grid;
  ScaleGrid scale_grid;
  UniformGrid adm_omega_grid;
  ScaleGrid adm_scale_grid;
};

inline NsawtGrids default_nsawt_grids(const SaftMatrix& m, const UniformGrid& signal_grid) {
  // The analyzing family carries spectral mass on the sign(B) side; scan the
  // admissibility constant over that band.
  const double lo = m.b < 0.0 ? -8.0 : 1.0;
  return NsawtGrids{signal_grid,
                    signal_grid,
                    ScaleGrid{0.25, 8.0, 64},
                    UniformGrid{lo, 0.5, 15},
                    ScaleGrid{0.02, 40.0, 256}};
}

namespace detail {

inline AdmissibilityReport gated_admissibility(const MotherWavelet& psi, const SaftMatrix& m,
                                               const NsawtGrids& grids) {
  const AdmissibilityReport adm =
      admissibility(psi, m, grids.adm_omega_grid, grids.adm_scale_grid);
  if (adm.relative_spread > 0.05)
    throw AdmissibilitySpreadTooLarge("admissibility constant varies by " +
                                      std::to_string(adm.relative_spread) +
                                      " across the scanned band (gate: 5%)");
  return adm;
}

// L²(dt · dz/z²) pairing of two scalograms.
inline cd scalogram_pairing(const Scalogram& a, const Scalogram& b) {
  const auto mw = scale_measure_weights(a.scale_grid);
  cd acc = 0.0;
  for (std::size_t j = 0; j < a.scale_grid.count; ++j) {
    cd row = 0.0;
    for (std::size_t i = 0; i < a.t_grid.count; ++i)
      row += trapezoid_weight(i, a.t_grid.count) * a.at(i, j) * std::conj(b.at(i, j));
    acc += row * mw[j] * a.t_grid.step;
  }
  return acc;
}

}  // namespace detail

// |<W_f, W_g>_(dt dz/z²) − C·<f,g>| / (C·‖f‖‖g‖): the orthogonality relation
// of the analysis transform, with C the mean admissibility constant.
inline double moyal_residual(const SampledSignal& f, const SampledSignal& g,
                             const MotherWavelet& psi, const SaftMatrix& m,
                             const NsawtGrids& grids) {
  const AdmissibilityReport adm = detail::gated_admissibility(psi, m, grids);
  const double nf = norm_l2(f), ng = norm_l2(g);
  if (nf == 0.0 || ng == 0.0) {
    const Scalogram wf = nsawt_direct(f, psi, grids.t_grid, grids.scale_grid, m);
    const Scalogram wg = nsawt_direct(g, psi, grids.t_grid, grids.scale_grid, m);
    return std::abs(detail::scalogram_pairing(wf, wg));
  }
  const Scalogram wf = nsawt_direct(f, psi, grids.t_grid, grids.scale_grid, m);
  const Scalogram wg = nsawt_direct(g, psi, grids.t_grid, grids.scale_grid, m);
  const cd lhs = detail::scalogram_pairing(wf, wg);
  const cd rhs = adm.c_psi_mean * inner_product(f, g);
  return std::abs(lhs - rhs) / (adm.c_psi_mean * nf * ng);
}

// Synthesis: f(x) ≈ (1/C) Σ_ij w_ij W_ij psi_{t_i, z_j}(x) with the measure
// weights dt · dz/z². The admissibility scan supplies C.
inline SampledSignal nsawt_invert(const Scalogram& w, const MotherWavelet& psi,
                                  const UniformGrid& out, const NsawtGrids& grids) {
  out.require_valid();
  w.require_valid();
  const SaftMatrix m = w.matrix;
  const AdmissibilityReport adm = detail::gated_admissibility(psi, m, grids);
  const auto zetas = w.scale_grid.nodes();
  const auto mw = scale_measure_weights(w.scale_grid);
  std::vector<cd> acc(out.count, cd{});
  std::vector<std::vector<cd>> partial(zetas.size());
  const double ratio = m.a / m.b;
  parallel_for(zetas.size(), [&](std::size_t j) {
    std::vector<cd> local(out.count, cd{});
    const double zeta = zetas[j];
    const cd factor = k_b(m).value / std::sqrt(zeta);
    for (std::size_t i = 0; i < w.t_grid.count; ++i) {
      const double t = w.t_grid.point(i);
      const cd weight = factor * w.at(i, j) *
                        (trapezoid_weight(i, w.t_grid.count) * w.t_grid.step * mw[j]);
      if (weight == cd{}) continue;
      const auto [k_lo, k_hi] = detail::support_range(out, psi.signal.grid, t, zeta);
      if (ratio == 0.0) {
        for (std::size_t k = k_lo; k <= k_hi; ++k)
          local[k] += weight * sample_at(psi.signal, (out.point(k) - t) / zeta);
      } else {
        for (std::size_t k = k_lo; k <= k_hi; ++k) {
          const double x = out.point(k);
          const cd base = sample_at(psi.signal, (x - t) / zeta);
          if (base == cd{}) continue;
          local[k] += weight * base * std::polar(1.0, ratio * x * (t - x));
        }
      }
    }
    partial[j] = std::move(local);
  });
  for (std::size_t j = 0; j < partial.size(); ++j)
    for (std::size_t k = 0; k < out.count; ++k) acc[k] += partial[j][k];
  const double inv_c = 1.0 / adm.c_psi_mean;
  for (auto& v : acc) v *= inv_c;
  return SampledSignal{out, std::move(acc)};
}

inline cd reproducing_kernel(double t, double zeta, double t2, double zeta2,
                             const MotherWavelet& psi, const SaftMatrix& m,
                             const UniformGrid& grid) {
  const SampledSignal a = daughter_wavelet(psi, t, zeta, m, grid);
  const SampledSignal b = daughter_wavelet(psi, t2, zeta2, m, grid);
  return inner_product(a, b);
}

// Distance of a coefficient field from the transform's range, via the
// projection P[F](t',z') = (1/C) Σ F(t,z) <psi_{t,z}, psi_{t',z'}> dt dz/z².
// Synthesizing on the signal grid and re-analyzing evaluates exactly that
// double sum (the x-quadrature reorders with the (t,z) sums).
inline double range_projection_residual(const Scalogram& field, const MotherWavelet& psi,
                                        const SaftMatrix& m, const NsawtGrids& grids) {
  field.require_valid();
  const auto mw = scale_measure_weights(field.scale_grid);
  double field_norm2 = 0.0;
  for (std::size_t j = 0; j < field.scale_grid.count; ++j)
    for (std::size_t i = 0; i < field.t_grid.count; ++i)
      field_norm2 += trapezoid_weight(i, field.t_grid.count) * field.t_grid.step *
                     mw[j] * std::norm(field.at(i, j));
  if (field_norm2 == 0.0) return 0.0;

  const SampledSignal synth = nsawt_invert(field, psi, grids.signal_grid, grids);
  const Scalogram projected =
      nsawt_direct(synth, psi, field.t_grid, field.scale_grid, m);
  double diff2 = 0.0;
  for (std::size_t j = 0; j < field.scale_grid.count; ++j)
    for (std::size_t i = 0; i < field.t_grid.count; ++i)
      diff2 += trapezoid_weight(i, field.t_grid.count) * field.t_grid.step *
               mw[j] * std::norm(projected.at(i, j) - field.at(i, j));
  return std::sqrt(diff2 / field_norm2);
}

}  // namespace saftw
