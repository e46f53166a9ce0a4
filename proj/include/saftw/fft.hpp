#pragma once

// Iterative radix-2 Cooley-Tukey FFT, power-of-two lengths only.
// Forward kernel e^{-2πikn/N}; inverse carries the 1/N.

#include <complex>
#include <cstddef>
#include <vector>

#include "saftw/errors.hpp"
#include "saftw/numerics.hpp"

namespace saftw {

inline bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

namespace detail {

inline void fft_radix2(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw BadParameter("fft length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? two_pi : -two_pi) / static_cast<double>(len);
    const cd wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cd u = a[i + k];
        const cd v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

}  // namespace detail

inline void fft(std::vector<cd>& a) { detail::fft_radix2(a, false); }
inline void ifft(std::vector<cd>& a) { detail::fft_radix2(a, true); }

// Full linear convolution (length |f| + |g| - 1) via zero-padded FFTs.
inline std::vector<cd> linear_convolution(const std::vector<cd>& f,
                                          const std::vector<cd>& g) {
  if (f.empty() || g.empty()) return {};
  const std::size_t out = f.size() + g.size() - 1;
  const std::size_t n = next_pow2(out);
  std::vector<cd> a(n, cd{}), b(n, cd{});
  std::copy(f.begin(), f.end(), a.begin());
  std::copy(g.begin(), g.end(), b.begin());
  fft(a);
  fft(b);
  for (std::size_t k = 0; k < n; ++k) a[k] *= b[k];
  ifft(a);
  a.resize(out);
  return a;
}

}  // namespace saftw
