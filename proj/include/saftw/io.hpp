#pragma once

// File formats: CSV for signals (x,re,im), spectra (omega,re,im), and
// scalograms (t,zeta,re,im long form); an SVG heatmap for scalogram moduli.
// All floating-point output uses 17 significant digits so that rewritten
// files round-trip bit-identically.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "saftw/errors.hpp"
#include "saftw/numerics.hpp"
#include "saftw/nsawt.hpp"

namespace saftw {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

struct Column3 {
  std::vector<double> axis;
  std::vector<cd> values;
};

inline bool numeric_line(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '.' ||
        c == '-' || c == '+' || c == 'e' || c == 'E' || std::isdigit(static_cast<unsigned char>(c)))
      continue;
    return false;
  }
  return !line.empty();
}

inline Column3 read_column3(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open " + path);
  Column3 out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!numeric_line(line)) continue;  // header or comment
    double a = 0.0, re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &a, &re, &im) != 3)
      throw BadParameter("malformed row in " + path + ": " + line);
    out.axis.push_back(a);
    out.values.emplace_back(re, im);
  }
  if (out.axis.size() < 2) throw BadParameter(path + " holds fewer than 2 samples");
  return out;
}

// Reconstruct a uniform grid from an axis column; rejects jitter > 1e-9
// relative to the span.
inline UniformGrid uniform_from_axis(const std::vector<double>& axis, const std::string& who) {
  const std::size_t n = axis.size();
  const double step = (axis.back() - axis.front()) / static_cast<double>(n - 1);
  if (!(step > 0.0)) throw BadParameter(who + ": axis must be strictly increasing");
  const double tol = 1e-9 * std::max(1.0, std::abs(axis.back() - axis.front()));
  for (std::size_t k = 0; k < n; ++k) {
    const double expected = axis.front() + static_cast<double>(k) * step;
    if (std::abs(axis[k] - expected) > tol)
      throw BadParameter(who + ": axis is not uniform (jitter above 1e-9 of the span)");
  }
  return UniformGrid{axis.front(), step, n};
}

inline void write_column3(const std::string& path, const char* header,
                          const UniformGrid& grid, const std::vector<cd>& values) {
  std::ofstream out(path);
  if (!out) throw BadParameter("cannot open " + path + " for writing");
  out << header << "\n";
  for (std::size_t k = 0; k < grid.count; ++k)
    out << fmt17(grid.point(k)) << ',' << fmt17(values[k].real()) << ','
        << fmt17(values[k].imag()) << "\n";
  if (!out) throw BadParameter("write failed for " + path);
}

}  // namespace detail

inline void write_signal_csv(const std::string& path, const SampledSignal& f) {
  detail::write_column3(path, "x,re,im", f.grid, f.samples);
}

inline SampledSignal read_signal_csv(const std::string& path) {
  auto cols = detail::read_column3(path);
  return SampledSignal{detail::uniform_from_axis(cols.axis, path), std::move(cols.values)};
}

inline void write_spectrum_csv(const std::string& path, const Spectrum& s) {
  detail::write_column3(path, "omega,re,im", s.grid, s.values);
}

inline Spectrum read_spectrum_csv(const std::string& path) {
  auto cols = detail::read_column3(path);
  return Spectrum{detail::uniform_from_axis(cols.axis, path), std::move(cols.values)};
}

inline void write_scalogram_csv(const std::string& path, const Scalogram& w) {
  std::ofstream out(path);
  if (!out) throw BadParameter("cannot open " + path + " for writing");
  out << "t,zeta,re,im\n";
  const auto zetas = w.scale_grid.nodes();
  for (std::size_t i = 0; i < w.t_grid.count; ++i)
    for (std::size_t j = 0; j < w.scale_grid.count; ++j)
      out << fmt17(w.t_grid.point(i)) << ',' << fmt17(zetas[j]) << ','
          << fmt17(w.at(i, j).real()) << ',' << fmt17(w.at(i, j).imag()) << "\n";
  if (!out) throw BadParameter("write failed for " + path);
}

// Rebuilds the grids from the long-form rows; the parameter matrix and
// wavelet tag are not stored in CSV and must be supplied by the caller.
inline Scalogram read_scalogram_csv(const std::string& path, const SaftMatrix& m,
                                    std::string wavelet_id) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open " + path);
  std::vector<double> ts, zs;
  std::vector<cd> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || !detail::numeric_line(line)) continue;
    double t = 0.0, z = 0.0, re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &t, &z, &re, &im) != 4)
      throw BadParameter("malformed row in " + path + ": " + line);
    ts.push_back(t);
    zs.push_back(z);
    vals.emplace_back(re, im);
  }
  if (vals.empty()) throw BadParameter(path + " holds no scalogram rows");
  // i-major layout: the scale column cycles fastest.
  std::size_t n_scales = 1;
  while (n_scales < zs.size() && zs[n_scales] > zs[n_scales - 1]) ++n_scales;
  if (zs.size() % n_scales != 0)
    throw BadParameter(path + ": row count is not a multiple of the scale count");
  const std::size_t n_t = zs.size() / n_scales;

  std::vector<double> t_axis(n_t);
  for (std::size_t i = 0; i < n_t; ++i) t_axis[i] = ts[i * n_scales];
  UniformGrid t_grid = n_t == 1
                           ? UniformGrid{t_axis[0], 1.0, 1}
                           : detail::uniform_from_axis(t_axis, path + " (t axis)");

  const double zmin = zs[0], zmax = zs[n_scales - 1];
  ScaleGrid scale_grid = n_scales == 1 ? ScaleGrid{zmin, zmin, 1, 1.0}
                                       : ScaleGrid{zmin, zmax, n_scales};
  const auto nodes = scale_grid.nodes();
  for (std::size_t i = 0; i < n_t; ++i)
    for (std::size_t j = 0; j < n_scales; ++j) {
      const std::size_t row = i * n_scales + j;
      if (std::abs(ts[row] - t_grid.point(i)) > 1e-9 * std::max(1.0, t_grid.span()) ||
          std::abs(zs[row] - nodes[j]) > 1e-9 * std::max(1.0, nodes[j]))
        throw BadParameter(path + ": rows are not a complete t-major grid sweep");
    }
  Scalogram w{t_grid, scale_grid, std::move(vals), m, std::move(wavelet_id)};
  w.require_valid();
  return w;
}

// Grayscale heatmap of |coefficients|, dark = large, scale axis upward
// (already log-spaced). 256 brightness steps with a display gamma.
inline void write_scalogram_svg(const std::string& path, const Scalogram& w,
                                double gamma = 0.5) {
  std::ofstream out(path);
  if (!out) throw BadParameter("cannot open " + path + " for writing");
  const std::size_t nt = w.t_grid.count, nz = w.scale_grid.count;
  double peak = 0.0;
  for (const auto& v : w.coeffs) peak = std::max(peak, std::abs(v));
  const int margin = 40, cell = std::max<int>(1, static_cast<int>(768 / std::max(nt, nz)));
  const int width = margin * 2 + cell * static_cast<int>(nt);
  const int height = margin * 2 + cell * static_cast<int>(nz);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = 0; j < nz; ++j) {
      const double rel = peak > 0.0 ? std::abs(w.at(i, j)) / peak : 0.0;
      const int level = 255 - static_cast<int>(std::lround(255.0 * std::pow(rel, gamma)));
      char color[8];
      std::snprintf(color, sizeof color, "#%02x%02x%02x", level, level, level);
      out << "<rect x=\"" << margin + cell * static_cast<int>(i) << "\" y=\""
          << margin + cell * static_cast<int>(nz - 1 - j) << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"" << color << "\"/>\n";
    }
  out << "<text x=\"" << margin << "\" y=\"" << height - 12
      << "\" font-size=\"12\">t in [" << fmt17(w.t_grid.origin) << ", "
      << fmt17(w.t_grid.back()) << "]</text>\n"
      << "<text x=\"4\" y=\"" << margin - 8 << "\" font-size=\"12\">zeta in ["
      << fmt17(w.scale_grid.zeta_min) << ", " << fmt17(w.scale_grid.zeta_max)
      << "] (log axis)</text>\n</svg>\n";
  if (!out) throw BadParameter("write failed for " + path);
}

}  // namespace saftw
