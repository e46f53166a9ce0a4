#pragma once

// Error taxonomy and warning sink. Every failure mode that callers are
// expected to handle gets its own type; everything carries a message.

#include <cstdio>
#include <stdexcept>
#include <string>

namespace saftw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix parameter failures.
struct NonUnimodular : Error {
  double determinant;
  explicit NonUnimodular(double det)
      : Error("matrix is not unimodular: det = " + std::to_string(det)),
        determinant(det) {}
};

struct DegenerateB : Error {
  DegenerateB() : Error("operation requires B != 0") {}
  explicit DegenerateB(const std::string& what) : Error(what) {}
};

struct DegenerateD : Error {
  explicit DegenerateD(const std::string& what = "degenerate branch requires D > 0")
      : Error(what) {}
};

struct SingularAngle : Error {
  explicit SingularAngle(double theta)
      : Error("fractional angle has sin(theta) ~ 0 at theta = " + std::to_string(theta)) {}
};

// Grid and sampling failures.
struct GridMismatch : Error {
  using Error::Error;
};

struct UnderResolved : Error {
  using Error::Error;
};

struct InterpolationOutOfBand : Error {
  using Error::Error;
};

// Domain failures of the analysis operations.
struct NegativeExponent : Error {
  using Error::Error;
};

struct ExponentOutOfRange : Error {
  using Error::Error;
};

struct AlphaOutOfRange : Error {
  using Error::Error;
};

struct NonpositiveScale : Error {
  using Error::Error;
};

struct ZeroNorm : Error {
  using Error::Error;
};

struct ZeroCenter : Error {
  using Error::Error;
};

struct DivergentAdmissibility : Error {
  using Error::Error;
};

struct AdmissibilitySpreadTooLarge : Error {
  using Error::Error;
};

// Catch-all for precondition violations that have no richer type.
struct BadParameter : Error {
  using Error::Error;
};

namespace warnings {

using Handler = void (*)(const std::string&);

inline Handler& handler() {
  static Handler h = nullptr;
  return h;
}

inline void emit(const std::string& msg) {
  if (handler())
    handler()(msg);
  else
    std::fprintf(stderr, "warning: %s\n", msg.c_str());
}

// Scoped silencer for tests that intentionally trip warnings.
struct Silence {
  Handler saved;
  Silence() : saved(handler()) {
    handler() = [](const std::string&) {};
  }
  ~Silence() { handler() = saved; }
};

}  // namespace warnings

}  // namespace saftw
