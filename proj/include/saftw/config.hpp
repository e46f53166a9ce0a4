#pragma once

// Run configuration: a flat `key = value` file with bracketed sections, a
// compact one-line matrix/preset syntax shared with the command line, and
// the wavelet selector. Values here are plumbing only — validation beyond
// syntax happens in the modules that consume them.

#include <cctype>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "saftw/errors.hpp"
#include "saftw/io.hpp"
#include "saftw/nsawt.hpp"
#include "saftw/numerics.hpp"
#include "saftw/params.hpp"

namespace saftw {

struct RunConfig {
  SaftMatrix matrix = presets::fourier();
  double grid_x0 = -16.0;
  double grid_dx = 0.015625;
  std::size_t grid_n = 2048;
  double zeta_min = 0.25;
  double zeta_max = 8.0;
  std::size_t zeta_count = 64;
  std::string wavelet = "morlet";  // morlet | morlet-real | gaussian | csv:PATH
  double omega0 = 5.0;
  std::string path = "fast";  // direct | fast | spectral
  std::string out_dir = ".";
  std::map<std::string, double> tolerances;

  UniformGrid signal_grid() const { return UniformGrid{grid_x0, grid_dx, grid_n}; }
  ScaleGrid scale_grid() const { return ScaleGrid{zeta_min, zeta_max, zeta_count}; }
  double tolerance(const std::string& key, double fallback) const {
    auto it = tolerances.find(key);
    return it == tolerances.end() ? fallback : it->second;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  return parts;
}

inline double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw BadParameter("cannot parse number '" + s + "' for " + what);
  }
}

}  // namespace detail

// Matrix syntax: a preset name ("fourier", "fractional:theta[:p:q]",
// "fresnel:b[:p:q]", "lct:a:b:c:d[:p:q]") or six comma-separated numbers
// "A,B,C,D,p,q".
inline SaftMatrix parse_matrix_spec(const std::string& spec_in) {
  const std::string spec = detail::trim(spec_in);
  if (spec.empty()) throw BadParameter("empty matrix spec");
  if (spec.find(',') != std::string::npos) {
    const auto parts = detail::split(spec, ',');
    if (parts.size() != 6)
      throw BadParameter("matrix needs exactly six numbers A,B,C,D,p,q");
    SaftMatrix m{detail::parse_number(parts[0], "A"), detail::parse_number(parts[1], "B"),
                 detail::parse_number(parts[2], "C"), detail::parse_number(parts[3], "D"),
                 detail::parse_number(parts[4], "p"), detail::parse_number(parts[5], "q")};
    m.require_valid();
    return m;
  }
  const auto parts = detail::split(spec, ':');
  const std::string& name = parts[0];
  const auto arg = [&](std::size_t i, double fallback) {
    return parts.size() > i ? detail::parse_number(parts[i], name) : fallback;
  };
  if (name == "fourier") {
    if (parts.size() > 1) throw BadParameter("fourier preset takes no arguments");
    return presets::fourier();
  }
  if (name == "fractional") {
    if (parts.size() < 2) throw BadParameter("fractional preset needs an angle");
    return presets::fractional(arg(1, 0.0), arg(2, 0.0), arg(3, 0.0));
  }
  if (name == "fresnel") {
    if (parts.size() < 2) throw BadParameter("fresnel preset needs a B parameter");
    return presets::fresnel(arg(1, 0.0), arg(2, 0.0), arg(3, 0.0));
  }
  if (name == "lct") {
    if (parts.size() < 5) throw BadParameter("lct preset needs a:b:c:d");
    SaftMatrix m = presets::lct(arg(1, 0.0), arg(2, 0.0), arg(3, 0.0), arg(4, 0.0),
                                arg(5, 0.0), arg(6, 0.0));
    m.require_valid();
    return m;
  }
  throw BadParameter("unknown matrix spec '" + spec + "'");
}

inline MotherWavelet make_wavelet(const std::string& selector, double omega0 = 5.0) {
  if (selector == "morlet") return make_morlet(omega0);
  if (selector == "morlet-real") return make_morlet_real(omega0);
  if (selector == "gaussian") return make_gaussian_mother(1.0);
  if (selector.rfind("csv:", 0) == 0) {
    const std::string path = selector.substr(4);
    return make_mother(selector, read_signal_csv(path));
  }
  throw BadParameter("unknown wavelet selector '" + selector + "'");
}

// Flat key = value format with [section] headers and '#' comments.
inline RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open config " + path);
  RunConfig cfg;
  SaftMatrix manual = presets::fourier();
  bool manual_matrix = false;
  std::string section, line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = detail::trim(line.substr(1, line.size() - 2));
      if (section != "matrix" && section != "grid" && section != "scales" &&
          section != "wavelet" && section != "run" && section != "tolerances")
        throw BadParameter(path + ":" + std::to_string(lineno) + ": unknown section [" +
                           section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw BadParameter(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    const std::string where = path + ":" + std::to_string(lineno);

    if (section == "matrix") {
      if (key == "preset")
        cfg.matrix = parse_matrix_spec(value);
      else if (key == "a" || key == "b" || key == "c" || key == "d" || key == "p" ||
               key == "q") {
        manual_matrix = true;
        const double v = detail::parse_number(value, key);
        if (key == "a") manual.a = v;
        if (key == "b") manual.b = v;
        if (key == "c") manual.c = v;
        if (key == "d") manual.d = v;
        if (key == "p") manual.p = v;
        if (key == "q") manual.q = v;
      } else
        throw BadParameter(where + ": unknown matrix key '" + key + "'");
    } else if (section == "grid") {
      if (key == "x0")
        cfg.grid_x0 = detail::parse_number(value, key);
      else if (key == "dx")
        cfg.grid_dx = detail::parse_number(value, key);
      else if (key == "n")
        cfg.grid_n = static_cast<std::size_t>(detail::parse_number(value, key));
      else
        throw BadParameter(where + ": unknown grid key '" + key + "'");
    } else if (section == "scales") {
      if (key == "min")
        cfg.zeta_min = detail::parse_number(value, key);
      else if (key == "max")
        cfg.zeta_max = detail::parse_number(value, key);
      else if (key == "count")
        cfg.zeta_count = static_cast<std::size_t>(detail::parse_number(value, key));
      else
        throw BadParameter(where + ": unknown scales key '" + key + "'");
    } else if (section == "wavelet") {
      if (key == "kind")
        cfg.wavelet = value;
      else if (key == "omega0")
        cfg.omega0 = detail::parse_number(value, key);
      else
        throw BadParameter(where + ": unknown wavelet key '" + key + "'");
    } else if (section == "run") {
      if (key == "path") {
        if (value != "direct" && value != "fast" && value != "spectral")
          throw BadParameter(where + ": path must be direct, fast, or spectral");
        cfg.path = value;
      } else if (key == "out_dir")
        cfg.out_dir = value;
      else
        throw BadParameter(where + ": unknown run key '" + key + "'");
    } else if (section == "tolerances") {
      cfg.tolerances[key] = detail::parse_number(value, key);
    } else {
      throw BadParameter(where + ": key outside any [section]");
    }
  }
  if (manual_matrix) {
    manual.require_valid();
    cfg.matrix = manual;
  }
  if (cfg.wavelet.rfind("csv:", 0) == 0) {
    const std::string wpath = cfg.wavelet.substr(4);
    if (!std::filesystem::exists(wpath))
      throw BadParameter("wavelet file does not exist: " + wpath);
  }
  return cfg;
}

}  // namespace saftw
