#pragma once

// Six-parameter transform matrix (A, B, C, D : p, q) with AD - BC = 1,
// its inverse, the kernel constant, chirp modulation, and the classical
// reduction presets.

#include <cmath>
#include <complex>
#include <string>

#include "saftw/errors.hpp"
#include "saftw/numerics.hpp"

namespace saftw {

inline constexpr double unimodular_tol = 1e-12;

struct SaftMatrix {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double p = 0.0, q = 0.0;

  double determinant() const { return a * d - b * c; }
  bool degenerate() const { return b == 0.0; }

  void require_valid() const {
    if (std::abs(determinant() - 1.0) > unimodular_tol)
      throw NonUnimodular(determinant());
  }
};

struct ValidationResult {
  bool ok = false;
  double determinant = 0.0;
  bool degenerate = false;  // B == 0 branch
  std::string message;
};

// Diagnostic check: unimodularity to 1e-12 and branch selection. Emits the
// negative-B warning here (and only here) so internal inverse-matrix plumbing
// stays quiet.
inline ValidationResult validate(const SaftMatrix& m) {
  ValidationResult r;
  r.determinant = m.determinant();
  r.degenerate = m.degenerate();
  r.ok = std::abs(r.determinant - 1.0) <= unimodular_tol;
  if (!r.ok) {
    r.message = "determinant " + std::to_string(r.determinant) + " is not 1";
    return r;
  }
  r.message = r.degenerate ? "degenerate branch (B = 0)" : "integral branch (B != 0)";
  if (m.b < 0.0)
    warnings::emit("matrix has B < 0; the kernel constant uses the real positive "
                   "branch 1/sqrt(2*pi*|B|)");
  return r;
}

// Leading kernel constant. Real positive for every B != 0; the modulus
// 1/sqrt(2*pi*|B|) is what unitarity and the inverse machinery require.
struct KernelConstant {
  cd value;
};

inline KernelConstant k_b(const SaftMatrix& m) {
  if (m.b == 0.0) throw DegenerateB();
  return KernelConstant{cd{1.0 / std::sqrt(two_pi * std::abs(m.b)), 0.0}};
}

// Parameter set whose transform undoes the original one:
// (D, -B, -C, A : Bq - Dp, Cp - Aq). Applying it twice restores all six
// entries when AD - BC = 1.
inline SaftMatrix inverse_matrix(const SaftMatrix& m) {
  m.require_valid();
  SaftMatrix inv;
  inv.a = m.d;
  inv.b = -m.b;
  inv.c = -m.c;
  inv.d = m.a;
  inv.p = m.b * m.q - m.d * m.p;
  inv.q = m.c * m.p - m.a * m.q;
  return inv;
}

// Unit-modulus chirp m(x) = exp{i A x² / (2B)}.
inline cd chirp_modulation(const SaftMatrix& m, double x) {
  if (m.b == 0.0) throw DegenerateB();
  return std::polar(1.0, m.a * x * x / (2.0 * m.b));
}

namespace presets {

inline SaftMatrix fourier() { return SaftMatrix{0.0, 1.0, -1.0, 0.0, 0.0, 0.0}; }

// The angle is kept symbolic until this call; trig happens exactly once.
inline SaftMatrix fractional(double theta, double p = 0.0, double q = 0.0) {
  const double s = std::sin(theta);
  if (std::abs(s) <= 1e-12) throw SingularAngle(theta);
  return SaftMatrix{std::cos(theta), s, -s, std::cos(theta), p, q};
}

inline SaftMatrix fresnel(double b, double p = 0.0, double q = 0.0) {
  return SaftMatrix{1.0, b, 0.0, 1.0, p, q};
}

inline SaftMatrix lct(double a, double b, double c, double d, double p = 0.0,
                      double q = 0.0) {
  return SaftMatrix{a, b, c, d, p, q};
}

}  // namespace presets

}  // namespace saftw
