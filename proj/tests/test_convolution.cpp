// Tests for the chirp-twisted convolution and its spectral factorization.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "saftw/convolution.hpp"
#include "saftw/errors.hpp"
#include "saftw/saft.hpp"
#include "saftw/signals.hpp"

#include "oracles.hpp"

using namespace saftw;

namespace {

SaftMatrix random_unimodular(std::mt19937_64& eng) {
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * ((eng() >> 11) * 0x1.0p-53);
  };
  SaftMatrix m;
  m.a = uniform(-1.2, 1.2);
  m.d = uniform(-1.2, 1.2);
  m.b = uniform(0.5, 2.0);
  m.c = (m.a * m.d - 1.0) / m.b;
  m.p = uniform(-0.5, 0.5);
  m.q = uniform(-0.5, 0.5);
  return m;
}

}  // namespace

TEST_CASE("chirp pair splits a signal into oppositely modulated copies") {
  const UniformGrid g = make_grid(0.0, 8.0, 256);
  const SampledSignal f = gen_gaussian(g, 1.0);
  const SaftMatrix m = presets::fresnel(2.0, 0.5, 0.25);
  const ChirpedPair pair = chirp_pair(f, m);

  for (std::size_t k = 0; k < g.count; ++k) {
    // Equal moduli: the modulation is unimodular.
    CHECK(std::abs(std::abs(pair.forward.samples[k]) - std::abs(f.samples[k])) <= 1e-14);
    CHECK(std::abs(std::abs(pair.backward.samples[k]) - std::abs(f.samples[k])) <= 1e-14);
    // forward * conj(backward) = |f|^2 * exp(i A x^2 / B).
    const double x = g.point(k);
    const cd want = std::norm(f.samples[k]) * std::polar(1.0, m.a * x * x / m.b);
    CHECK(std::abs(pair.forward.samples[k] * std::conj(pair.backward.samples[k]) - want) <=
          1e-13);
  }

  SECTION("zero chirp rate leaves both copies untouched") {
    const SaftMatrix plain = presets::fourier();
    const ChirpedPair id = chirp_pair(f, plain);
    for (std::size_t k = 0; k < g.count; ++k) {
      CHECK(id.forward.samples[k] == f.samples[k]);
      CHECK(id.backward.samples[k] == f.samples[k]);
    }
  }

  SECTION("degenerate parameter set is rejected") {
    SaftMatrix bad{1.0, 0.0, 0.5, 1.0, 0.0, 0.0};
    CHECK_THROWS_AS(chirp_pair(f, bad), DegenerateB);
  }
}

TEST_CASE("convolving with a unit impulse reproduces the signal up to the constant") {
  const UniformGrid g = make_grid(0.0, 8.0, 512);
  const SampledSignal f = gen_chirp(g, 0.4, 1.0);
  SampledSignal delta{g, std::vector<cd>(g.count, cd{})};
  // x = 0 sits exactly on node count/2 for a zero-centered power-of-two grid.
  delta.samples[g.count / 2] = cd{1.0 / g.step, 0.0};
  REQUIRE(std::abs(g.point(g.count / 2)) <= 1e-15);

  const SaftMatrix m = presets::fresnel(1.5, 0.3, 0.2);
  const SampledSignal h = saft_convolve(f, delta, m);
  const cd scale = k_b(m).value;

  double peak = 0.0;
  for (const cd& v : f.samples) peak = std::max(peak, std::abs(v));
  for (std::size_t k = 0; k < g.count; ++k)
    CHECK(std::abs(h.samples[k] - scale * f.samples[k]) <= 1e-13 * peak);
}

TEST_CASE("plain-Fourier twisted convolution matches the analytic Gaussian convolution") {
  const UniformGrid g = make_grid(0.0, 8.0, 512);
  const SampledSignal f = gen_gaussian(g, 1.0);
  const SaftMatrix m = presets::fourier();
  const SampledSignal h = saft_convolve(f, f, m);

  // int exp(-(t-x)^2/2) exp(-x^2/2) dx = sqrt(pi) exp(-t^2/4).
  const double scale = std::sqrt(pi) / std::sqrt(2.0 * pi);
  for (std::size_t k = 0; k < g.count; ++k) {
    const double t = g.point(k);
    const double want = scale * std::exp(-0.25 * t * t);
    CHECK(std::abs(h.samples[k] - cd{want, 0.0}) <= 1e-8);
  }
}

TEST_CASE("twisted convolution agrees with the direct quadrature oracle") {
  const UniformGrid g = make_grid(0.0, 6.0, 256);
  const SampledSignal f = gen_gaussian(g, 0.9, 0.4);
  const SampledSignal w = gen_chirp(g, 0.3, -0.8);

  std::mt19937_64 eng(0x5eedc04cULL);
  for (int trial = 0; trial < 4; ++trial) {
    const SaftMatrix m = random_unimodular(eng);
    const SampledSignal h = saft_convolve(f, w, m);

    const std::vector<cd> naive = oracles::naive_convolution(
        chirp_pair(f, m).forward.samples, chirp_pair(w, m).forward.samples, g.step, g.origin);
    const cd scale = k_b(m).value;
    std::vector<cd> want(g.count);
    for (std::size_t k = 0; k < g.count; ++k)
      want[k] = scale * std::conj(chirp_modulation(m, g.point(k))) * naive[k];

    CHECK(oracles::rel_sup_error(h.samples, want) <= 1e-10);
  }
}

TEST_CASE("twisted convolution is commutative and bilinear") {
  const UniformGrid g = make_grid(0.0, 6.0, 256);
  const SampledSignal f = gen_gaussian(g, 0.8, -0.5);
  const SampledSignal w = gen_chirp(g, 0.5, 1.2);
  const SaftMatrix m = presets::fresnel(2.0, 0.1, -0.3);

  const SampledSignal fg = saft_convolve(f, w, m);
  const SampledSignal gf = saft_convolve(w, f, m);
  double peak = 0.0;
  for (const cd& v : fg.samples) peak = std::max(peak, std::abs(v));
  REQUIRE(peak > 0.0);
  for (std::size_t k = 0; k < g.count; ++k)
    CHECK(std::abs(fg.samples[k] - gf.samples[k]) <= 1e-12 * peak);

  SECTION("scaling and addition pass through the first argument") {
    const cd alpha{0.7, -1.1};
    SampledSignal mix{g, std::vector<cd>(g.count)};
    for (std::size_t k = 0; k < g.count; ++k)
      mix.samples[k] = alpha * f.samples[k] + w.samples[k];
    const SampledSignal lhs = saft_convolve(mix, w, m);
    const SampledSignal ww = saft_convolve(w, w, m);
    for (std::size_t k = 0; k < g.count; ++k) {
      const cd rhs = alpha * fg.samples[k] + ww.samples[k];
      CHECK(std::abs(lhs.samples[k] - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("twisted convolution validates its grids") {
  const SaftMatrix m = presets::fourier();
  const UniformGrid g = make_grid(0.0, 8.0, 512);
  const SampledSignal f = gen_gaussian(g, 1.0);

  SECTION("different sample counts are rejected") {
    const SampledSignal other = gen_gaussian(make_grid(0.0, 8.0, 256), 1.0);
    CHECK_THROWS_AS(saft_convolve(f, other, m), GridMismatch);
  }

  SECTION("shifted origins are rejected") {
    UniformGrid off{g.origin + 0.5 * g.step, g.step, g.count};
    const SampledSignal other = gen_gaussian(off, 1.0);
    CHECK_THROWS_AS(saft_convolve(f, other, m), GridMismatch);
  }

  SECTION("an origin that is not a whole number of steps is rejected") {
    UniformGrid off{-8.0 - 0.5 * 0.03125, 0.03125, 512};
    std::vector<cd> vals(512, cd{});
    for (std::size_t k = 0; k < 512; ++k) {
      const double x = off.point(k);
      vals[k] = std::exp(-0.5 * x * x);
    }
    const SampledSignal a{off, vals};
    CHECK_THROWS_AS(saft_convolve(a, a, m), GridMismatch);
  }
}

TEST_CASE("spectral weight of the convolution theorem has unit modulus") {
  SECTION("zero frequency carries no phase") {
    const SaftMatrix m = presets::fresnel(1.5, 0.7, -0.4);
    CHECK(phase_factor(m, 0.0) == cd{1.0, 0.0});
  }

  SECTION("the plain Fourier weight is identically one") {
    const SaftMatrix m = presets::fourier();
    for (double w : {-3.0, -1.0, 0.0, 0.5, 2.0, 7.0})
      CHECK(std::abs(phase_factor(m, w) - cd{1.0, 0.0}) <= 1e-15);
  }

  SECTION("random parameter sets give unimodular weights") {
    std::mt19937_64 eng(0xfadedfadULL);
    for (int trial = 0; trial < 50; ++trial) {
      const SaftMatrix m = random_unimodular(eng);
      const double w = -5.0 + 10.0 * ((eng() >> 11) * 0x1.0p-53);
      CHECK(std::abs(std::abs(phase_factor(m, w)) - 1.0) <= 1e-14);
    }
  }

  SECTION("degenerate parameter set is rejected") {
    SaftMatrix bad{1.0, 0.0, 0.5, 1.0, 0.0, 0.0};
    CHECK_THROWS_AS(phase_factor(bad, 1.0), DegenerateB);
  }
}

TEST_CASE("transforming a twisted convolution factors into a weighted product") {
  const UniformGrid g = make_grid(0.0, 8.0, 512);
  const SampledSignal f = gen_gaussian(g, 0.8, 0.3);
  const SampledSignal w = gen_gaussian(g, 0.7, -0.5);

  SECTION("plain Fourier case") {
    CHECK(convolution_theorem_residual(f, w, presets::fourier()) <= 1e-5);
  }

  SECTION("chirped case with offsets") {
    CHECK(convolution_theorem_residual(f, w, presets::fresnel(2.0, 0.5, 0.25)) <= 1e-4);
  }

  SECTION("zero input gives a zero residual") {
    const SampledSignal zero{g, std::vector<cd>(g.count, cd{})};
    CHECK(convolution_theorem_residual(zero, w, presets::fourier()) <= 1e-12);
  }
}
