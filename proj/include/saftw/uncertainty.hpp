#pragma once

// Uncertainty-type inequalities in the affine transform domain, each reported
// as an LHS/RHS pair whose ratio must reach 1 up to quadrature tolerance:
//  - product of second moments vs (|B|/2)·energy (and its p-norm extension),
//  - a weighted-norm (Pitt-type) inequality with an explicit Gamma-function
//    constant,
//  - a scale-translation analogue with the admissibility constant.

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "saftw/errors.hpp"
#include "saftw/nsawt.hpp"
#include "saftw/numerics.hpp"
#include "saftw/params.hpp"
#include "saftw/saft.hpp"
#include "saftw/signals.hpp"

namespace saftw {

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // the side expected to dominate, over the other
  bool passed = false;
  double tolerance = 0.0;
};

namespace detail {

inline InequalityReport finish_report(std::string name, double dominant, double other,
                                      double tolerance) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = dominant;
  r.rhs = other;
  r.ratio = dominant / other;
  r.tolerance = tolerance;
  r.passed = r.ratio >= 1.0 - tolerance;
  return r;
}

}  // namespace detail

// (∫|x|^p |f|^p)^{1/p} (∫|w|^p |F f|^p)^{1/p} >= (|B|^{(p+2)/(2p)}/2) ‖f‖₂²
// for 1 <= p <= 2; p = 2 is the classical second-moment product bound.
inline InequalityReport generalized_saft(const SampledSignal& f, const SaftMatrix& m,
                                         double p, double tolerance = 1e-3) {
  if (p < 1.0 || p > 2.0)
    throw ExponentOutOfRange("moment exponent must lie in [1, 2]");
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  if (norm_l2(f) == 0.0) throw ZeroNorm("uncertainty reports need a nonzero signal");
  const SampledSignal F = as_signal(saft_fast(f, m));
  const double lhs = std::pow(p_moment(f, p, 0.0, MomentWeight::pth_power), 1.0 / p) *
                     std::pow(p_moment(F, p, 0.0, MomentWeight::pth_power), 1.0 / p);
  const double energy = inner_product(f, f).real();
  const double rhs = 0.5 * std::pow(std::abs(m.b), (p + 2.0) / (2.0 * p)) * energy;
  return detail::finish_report("generalized(p=" + std::to_string(p) + ")", lhs, rhs,
                               tolerance);
}

inline InequalityReport heisenberg_saft(const SampledSignal& f, const SaftMatrix& m,
                                        double tolerance = 1e-3) {
  InequalityReport r = generalized_saft(f, m, 2.0, tolerance);
  r.name = "heisenberg";
  return r;
}

// |B|^a ∫ |w|^{-a} |F f|² dw  <=  C_a ∫ |x|^a |f|² dx  for 0 <= a < 1, with
// C_a = pi^a [Gamma((1-a)/4) / Gamma((1+a)/4)]². The singular weight is
// integrated in closed form per cell against a locally constant |F f|².
inline InequalityReport pitt_saft(const SampledSignal& f, const SaftMatrix& m,
                                  double alpha, double tolerance = 1e-3) {
  if (alpha < 0.0 || alpha >= 1.0)
    throw AlphaOutOfRange("weight exponent must lie in [0, 1)");
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  if (norm_l2(f) == 0.0) throw ZeroNorm("uncertainty reports need a nonzero signal");
  const Spectrum F = saft_fast(f, m);

  // Antiderivative of |w|^{-a}: sign(w) |w|^{1-a} / (1-a).
  const auto anti = [alpha](double w) {
    const double mag = std::pow(std::abs(w), 1.0 - alpha) / (1.0 - alpha);
    return w < 0.0 ? -mag : mag;
  };
  double weighted = 0.0;
  for (std::size_t k = 0; k + 1 < F.grid.count; ++k) {
    const double a = F.grid.point(k), b = F.grid.point(k + 1);
    const double density = 0.5 * (std::norm(F.values[k]) + std::norm(F.values[k + 1]));
    weighted += density * (anti(b) - anti(a));
  }
  const double lhs = std::pow(std::abs(m.b), alpha) * weighted;
  const double c_alpha = std::pow(pi, alpha) *
                         std::pow(std::tgamma((1.0 - alpha) / 4.0) /
                                      std::tgamma((1.0 + alpha) / 4.0),
                                  2.0);
  const double rhs = c_alpha * p_moment(f, alpha, 0.0, MomentWeight::density);
  return detail::finish_report("pitt(alpha=" + std::to_string(alpha) + ")", rhs, lhs,
                               tolerance);
}

// (∫∫ t² |W|² dt dz/z²)^{1/2} (∫ w² |F f|² dw)^{1/2} >= (sqrt(C)·|B|/2) ‖f‖₂²
// with W the scale-translation coefficients and C the admissibility constant.
// Scale truncation only removes LHS mass, so the tolerance is loose.
inline InequalityReport heisenberg_nsawt(const SampledSignal& f, const MotherWavelet& psi,
                                         const SaftMatrix& m, const NsawtGrids& grids,
                                         double tolerance = 5e-2) {
  m.require_valid();
  if (m.b == 0.0) throw DegenerateB();
  const double nf = norm_l2(f);
  if (nf == 0.0) throw ZeroNorm("uncertainty reports need a nonzero signal");
  const AdmissibilityReport adm = detail::gated_admissibility(psi, m, grids);
  const Scalogram w = nsawt_direct(f, psi, grids.t_grid, grids.scale_grid, m);
  const auto mw = scale_measure_weights(w.scale_grid);
  double tmom = 0.0;
  for (std::size_t j = 0; j < w.scale_grid.count; ++j) {
    double row = 0.0;
    for (std::size_t i = 0; i < w.t_grid.count; ++i) {
      const double t = w.t_grid.point(i);
      row += trapezoid_weight(i, w.t_grid.count) * t * t * std::norm(w.at(i, j));
    }
    tmom += row * w.t_grid.step * mw[j];
  }
  const SampledSignal F = as_signal(saft_fast(f, m));
  const double wmom = p_moment(F, 2.0, 0.0, MomentWeight::density);
  const double lhs = std::sqrt(tmom) * std::sqrt(wmom);
  const double rhs = std::sqrt(adm.c_psi_mean) * 0.5 * std::abs(m.b) * nf * nf;
  return detail::finish_report("scale-translation-heisenberg", lhs, rhs, tolerance);
}

// Fixed sweep of signals × parameter sets × inequalities used by the
// verification harness and the command-line battery mode.
struct BatteryRow {
  std::string signal_id;
  std::string matrix_id;
  InequalityReport report;
};

inline std::vector<std::pair<std::string, SaftMatrix>> battery_matrices() {
  return {
      {"fourier", presets::fourier()},
      {"fresnel-0.5", presets::fresnel(0.5)},
      {"fresnel-1", presets::fresnel(1.0)},
      {"fresnel-2", presets::fresnel(2.0)},
      {"fractional-pi4", presets::fractional(pi / 4.0)},
  };
}

inline std::vector<std::pair<std::string, SampledSignal>> battery_signals(
    const UniformGrid& grid) {
  return {
      {"gaussian", gen_gaussian(grid, 1.0)},
      {"gaussian-narrow", gen_gaussian(grid, 0.6)},
      {"chirped-gaussian", gen_chirp(grid, 0.5, 1.0)},
      {"gabor", gen_chirp(grid, 0.0, 4.0)},
      {"hermite-0", gen_hermite(grid, 0)},
      {"hermite-1", gen_hermite(grid, 1)},
      {"hermite-2", gen_hermite(grid, 2)},
  };
}

inline std::vector<BatteryRow> standard_battery(bool include_scale_translation = true) {
  const UniformGrid grid = make_grid(0.0, 14.0, 2048);
  const auto matrices = battery_matrices();
  const auto signals = battery_signals(grid);

  std::vector<BatteryRow> rows;
  for (const auto& [mid, m] : matrices) {
    for (const auto& [sid, f] : signals) {
      rows.push_back({sid, mid, heisenberg_saft(f, m)});
      rows.push_back({sid, mid, generalized_saft(f, m, 1.0)});
      rows.push_back({sid, mid, generalized_saft(f, m, 1.5)});
      rows.push_back({sid, mid, pitt_saft(f, m, 0.0, 1e-5)});
      rows.push_back({sid, mid, pitt_saft(f, m, 0.25)});
      rows.push_back({sid, mid, pitt_saft(f, m, 0.5)});
      rows.push_back({sid, mid, pitt_saft(f, m, 0.75)});
    }
    // The equality witness: modulus-matched, chirp-matched Gaussian.
    rows.push_back(
        {"matched-gaussian", mid, heisenberg_saft(matched_gaussian(grid, m), m)});
  }
  if (include_scale_translation) {
    // Signals whose spectral mass sits inside the truncated scale range.
    const MotherWavelet psi = make_morlet();
    const SaftMatrix m = presets::fourier();
    NsawtGrids grids = default_nsawt_grids(m, grid);
    grids.t_grid = make_grid(0.0, 10.0, 128);
    grids.scale_grid = ScaleGrid{0.25, 8.0, 48};
    rows.push_back({"gabor", "fourier",
                    heisenberg_nsawt(gen_chirp(grid, 0.0, 4.0), psi, m, grids)});
    rows.push_back({"chirped-gabor", "fourier",
                    heisenberg_nsawt(gen_chirp(grid, 0.3, 3.0), psi, m, grids)});
  }
  return rows;
}

}  // namespace saftw
