#pragma once

// Sampled-signal containers and the quadrature / moment helpers shared by
// every transform module. All integrals are trapezoidal on uniform grids;
// scale integrals use log-spaced nodes with measure-adapted weights.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "saftw/errors.hpp"

namespace saftw {

using cd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

struct UniformGrid {
  double origin = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double point(std::size_t k) const { return origin + step * static_cast<double>(k); }
  double back() const { return count ? point(count - 1) : origin; }
  double span() const { return count > 1 ? step * static_cast<double>(count - 1) : 0.0; }
  // Largest |coordinate| on the grid; used by oscillation guards.
  double abs_max() const { return std::max(std::abs(origin), std::abs(back())); }

  void require_valid() const {
    if (count == 0 || !(step > 0.0) || !std::isfinite(origin) || !std::isfinite(step))
      throw BadParameter("grid requires count > 0 and finite step > 0");
  }
};

struct SampledSignal {
  UniformGrid grid;
  std::vector<cd> samples;

  SampledSignal() = default;
  SampledSignal(UniformGrid g, std::vector<cd> s) : grid(g), samples(std::move(s)) {
    grid.require_valid();
    if (samples.size() != grid.count)
      throw GridMismatch("sample count does not match grid");
  }
};

struct Spectrum {
  UniformGrid grid;  // frequency nodes: origin = w0, step = dw
  std::vector<cd> values;

  Spectrum() = default;
  Spectrum(UniformGrid g, std::vector<cd> v) : grid(g), values(std::move(v)) {
    grid.require_valid();
    if (values.size() != grid.count)
      throw GridMismatch("value count does not match grid");
  }
};

inline SampledSignal as_signal(const Spectrum& s) { return SampledSignal{s.grid, s.values}; }
inline Spectrum as_spectrum(const SampledSignal& s) { return Spectrum{s.grid, s.samples}; }

// Log-spaced scale ladder. A single-node grid needs an explicit log step
// because the node spacing is otherwise undefined.
struct ScaleGrid {
  double zeta_min = 0.0;
  double zeta_max = 0.0;
  std::size_t count = 0;
  double explicit_dlog = 0.0;

  ScaleGrid() = default;
  ScaleGrid(double lo, double hi, std::size_t n, double dlog_if_single = 0.0)
      : zeta_min(lo), zeta_max(hi), count(n), explicit_dlog(dlog_if_single) {
    if (!(lo > 0.0) || !(hi > 0.0)) throw NonpositiveScale("scales must be positive");
    if (hi < lo) throw BadParameter("scale range is inverted");
    if (n == 0) throw BadParameter("scale grid needs at least one node");
    if (n == 1 && !(dlog_if_single > 0.0))
      throw BadParameter("single-node scale grid needs an explicit log step");
  }

  double dlog() const {
    return count > 1 ? std::log(zeta_max / zeta_min) / static_cast<double>(count - 1)
                     : explicit_dlog;
  }

  std::vector<double> nodes() const {
    std::vector<double> z(count);
    const double l0 = std::log(zeta_min), dl = dlog();
    for (std::size_t j = 0; j < count; ++j) z[j] = std::exp(l0 + dl * static_cast<double>(j));
    if (count > 1) z.back() = zeta_max;  // pin the endpoint against exp/log drift
    return z;
  }

  double decades() const { return std::log10(zeta_max / zeta_min); }
};

// Trapezoid weight for node k of an n-node grid (per unit step).
inline double trapezoid_weight(std::size_t k, std::size_t n) {
  return (n > 1 && (k == 0 || k == n - 1)) ? 0.5 : 1.0;
}

// <f, g> = ∫ f(x) conj(g(x)) dx by the trapezoid rule. Summation order is
// fixed, so <f,g> == conj(<g,f>) holds exactly in floating point.
inline cd inner_product(const SampledSignal& f, const SampledSignal& g) {
  if (f.grid.count != g.grid.count || f.grid.count == 0 ||
      std::abs(f.grid.origin - g.grid.origin) > 1e-12 * (1.0 + std::abs(f.grid.origin)) ||
      std::abs(f.grid.step - g.grid.step) > 1e-12 * f.grid.step)
    throw GridMismatch("inner product requires matching grids");
  const std::size_t n = f.grid.count;
  cd acc = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    acc += trapezoid_weight(k, n) * f.samples[k] * std::conj(g.samples[k]);
  return acc * f.grid.step;
}

inline double norm_l2(const SampledSignal& f) {
  return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

// ∫ |x − center|^p · w(x) dx where w is |f|^p (weight matching the exponent)
// or |f|² (plain energy density). The two coincide at p = 2.
enum class MomentWeight { pth_power, density };

inline double p_moment(const SampledSignal& f, double p, double center,
                       MomentWeight mode) {
  if (p < 0.0) throw NegativeExponent("moment exponent must be nonnegative");
  if (p == 0.0 && mode == MomentWeight::pth_power)
    throw NegativeExponent("moment with |f|^p weight requires p > 0");
  const std::size_t n = f.grid.count;
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = f.grid.point(k) - center;
    const double a = std::abs(f.samples[k]);
    const double w = (mode == MomentWeight::pth_power) ? std::pow(a, p) : a * a;
    acc += trapezoid_weight(k, n) * std::pow(std::abs(x), p) * w;
  }
  return acc * f.grid.step;
}

// Quadrature weights for ∫ · dζ/ζ² over a log-spaced grid: w_j = Δlnζ / ζ_j.
inline std::vector<double> scale_measure_weights(const ScaleGrid& grid) {
  const double dl = grid.dlog();
  auto z = grid.nodes();
  std::vector<double> w(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) w[j] = dl / z[j];
  return w;
}

// Weights for the admissibility measure dζ/ζ = dlnζ: flat in log scale.
inline std::vector<double> scale_log_weights(const ScaleGrid& grid) {
  return std::vector<double>(grid.count, grid.dlog());
}

// Linear interpolation of a sampled signal; zero outside the grid.
inline cd sample_at(const SampledSignal& f, double x) {
  const double u = (x - f.grid.origin) / f.grid.step;
  if (u < 0.0 || u > static_cast<double>(f.grid.count - 1)) return cd{0.0, 0.0};
  const auto k = static_cast<std::size_t>(u);
  if (k + 1 >= f.grid.count) return f.samples[f.grid.count - 1];
  const double t = u - static_cast<double>(k);
  return f.samples[k] * (1.0 - t) + f.samples[k + 1] * t;
}

// Relative edge decay |f(edge)| / max|f|; theorem-verification runs expect
// this below 1e-10 and warn otherwise.
inline double edge_decay(const SampledSignal& f) {
  double peak = 0.0;
  for (const auto& v : f.samples) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(f.samples.front()), std::abs(f.samples.back())) / peak;
}

inline void warn_if_poor_edge_decay(const SampledSignal& f, const char* who) {
  const double d = edge_decay(f);
  if (d > 1e-10)
    warnings::emit(std::string(who) + ": signal edge decay " + std::to_string(d) +
                   " exceeds 1e-10; truncation may dominate the result");
}

inline double max_abs(const std::vector<cd>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace saftw
