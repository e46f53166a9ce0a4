#pragma once

// Test-signal factories: Gaussians, chirped Gaussians, the first three
// orthonormal Hermite functions, and mean-corrected Morlet atoms.

#include <cmath>
#include <complex>

#include "saftw/numerics.hpp"
#include "saftw/params.hpp"

namespace saftw {

// Half-open symmetric grid [center - half, center + half): keeps the node
// count a free power of two and places x = center exactly on a node.
inline UniformGrid make_grid(double center, double half, std::size_t n) {
  if (n == 0 || !(half > 0.0)) throw BadParameter("grid requires n > 0 and half > 0");
  const double dx = 2.0 * half / static_cast<double>(n);
  return UniformGrid{center - half, dx, n};
}

template <typename Fn>
SampledSignal tabulate(const UniformGrid& grid, Fn&& fn) {
  grid.require_valid();
  std::vector<cd> s(grid.count);
  for (std::size_t k = 0; k < grid.count; ++k) s[k] = fn(grid.point(k));
  return SampledSignal{grid, std::move(s)};
}

// Unnormalized bump exp{-(x-x0)²/(2σ²)}, peak value 1.
inline SampledSignal gen_gaussian(const UniformGrid& grid, double sigma, double x0 = 0.0) {
  if (!(sigma > 0.0)) throw BadParameter("gaussian requires sigma > 0");
  return tabulate(grid, [=](double x) {
    const double u = (x - x0) / sigma;
    return cd{std::exp(-0.5 * u * u), 0.0};
  });
}

// Gaussian-windowed linear chirp exp{-x²/2} · exp{i(a x²/2 + b x)}.
// a = 0 makes it a Gabor atom at frequency b.
inline SampledSignal gen_chirp(const UniformGrid& grid, double a, double b) {
  return tabulate(grid, [=](double x) {
    return std::exp(-0.5 * x * x) * std::polar(1.0, 0.5 * a * x * x + b * x);
  });
}

// Orthonormal Hermite functions h0, h1, h2.
inline SampledSignal gen_hermite(const UniformGrid& grid, int n) {
  if (n < 0 || n > 2) throw BadParameter("hermite order must be 0, 1, or 2");
  const double c = std::pow(pi, -0.25);
  return tabulate(grid, [=](double x) {
    const double g = std::exp(-0.5 * x * x);
    double h = 1.0;
    if (n == 1) h = std::sqrt(2.0) * x;
    if (n == 2) h = (2.0 * x * x - 1.0) / std::sqrt(2.0);
    return cd{c * h * g, 0.0};
  });
}

// Analytic Morlet atom with the zero-mean correction:
// π^{-1/4} (e^{i ω0 x} - e^{-ω0²/2}) e^{-x²/2}.
inline SampledSignal gen_morlet(const UniformGrid& grid, double omega0) {
  if (!(omega0 > 0.0)) throw BadParameter("morlet requires omega0 > 0");
  const double c = std::pow(pi, -0.25);
  const double corr = std::exp(-0.5 * omega0 * omega0);
  return tabulate(grid, [=](double x) {
    return c * (std::polar(1.0, omega0 * x) - corr) * std::exp(-0.5 * x * x);
  });
}

// Real cosine variant; its spectrum is even, which some identities need.
inline SampledSignal gen_morlet_real(const UniformGrid& grid, double omega0) {
  if (!(omega0 > 0.0)) throw BadParameter("morlet requires omega0 > 0");
  const double c = std::pow(pi, -0.25);
  const double corr = std::exp(-0.5 * omega0 * omega0);
  return tabulate(grid, [=](double x) {
    return cd{c * (std::cos(omega0 * x) - corr) * std::exp(-0.5 * x * x), 0.0};
  });
}

// Extremizer of the spread inequality for a B != 0 matrix with p = 0:
// exp{-x²/(2|B|)} · exp{-i A x²/(2B)}.
inline SampledSignal matched_gaussian(const UniformGrid& grid, const SaftMatrix& m) {
  if (m.b == 0.0) throw DegenerateB();
  const double ab = std::abs(m.b);
  return tabulate(grid, [=](double x) {
    return std::exp(-x * x / (2.0 * ab)) * std::polar(1.0, -m.a * x * x / (2.0 * m.b));
  });
}

}  // namespace saftw
