#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "saftw/saftw.hpp"

using namespace saftw;

TEST_CASE("inner product integrates constants exactly") {
  const UniformGrid g{0.0, 0.01, 101};  // closed [0, 1]
  const SampledSignal ones = tabulate(g, [](double) { return cd{1.0, 0.0}; });
  const cd ip = inner_product(ones, ones);
  CHECK(ip.real() == Catch::Approx(1.0).margin(1e-12));
  CHECK(std::abs(ip.imag()) <= 1e-15);
}

TEST_CASE("inner product reproduces the Gaussian energy integral") {
  const UniformGrid g = make_grid(0.0, 8.0, 1024);
  const SampledSignal f = gen_gaussian(g, 1.0);
  // Oracle value: adaptive quadrature of exp(-x^2) over the same interval.
  const cd oracle =
      oracles::integrate([](double x) { return cd{std::exp(-x * x), 0.0}; }, -8.0, 8.0);
  CHECK(oracle.real() == Catch::Approx(std::sqrt(pi)).margin(1e-12));
  CHECK(inner_product(f, f).real() == Catch::Approx(1.7724538509055159).margin(1e-8));
}

TEST_CASE("inner product vanishes for an orthogonal sine and cosine pair") {
  const std::size_t n = 2048;
  const UniformGrid g{-pi, 2.0 * pi / static_cast<double>(n - 1), n};  // closed [-pi, pi]
  const SampledSignal s = tabulate(g, [](double x) { return cd{std::sin(x), 0.0}; });
  const SampledSignal c = tabulate(g, [](double x) { return cd{std::cos(x), 0.0}; });
  CHECK(std::abs(inner_product(s, c)) <= 1e-10);
}

TEST_CASE("inner product is conjugate-symmetric and rejects grid mismatches") {
  const UniformGrid g = make_grid(0.0, 4.0, 256);
  const SampledSignal f = gen_chirp(g, 0.4, 1.3);
  const SampledSignal h = gen_hermite(g, 1);
  const cd fh = inner_product(f, h);
  const cd hf = inner_product(h, f);
  CHECK(fh == std::conj(hf));  // identical summation order makes this exact
  CHECK(inner_product(f, f).real() >= 0.0);
  CHECK(std::abs(inner_product(f, f).imag()) <= 1e-13);

  const UniformGrid other = make_grid(0.5, 4.0, 256);
  CHECK_THROWS_AS(inner_product(f, gen_hermite(other, 1)), GridMismatch);
}

TEST_CASE("trapezoid quadrature converges at second order on rough integrands") {
  // x^3 on [0, 1] has mismatched endpoint derivatives, so the trapezoid error
  // is h^2/4 to leading order; halving h must shrink it by about four.
  auto ip_error = [](std::size_t n) {
    const UniformGrid g{0.0, 1.0 / static_cast<double>(n - 1), n};
    const SampledSignal f = tabulate(g, [](double x) { return cd{std::pow(x, 1.5), 0.0}; });
    return std::abs(inner_product(f, f).real() - 0.25);
  };
  const double coarse = ip_error(101);
  const double fine = ip_error(201);
  CHECK(coarse / fine >= 3.0);
}

TEST_CASE("second moment of the unit Gaussian matches the closed form") {
  const UniformGrid g = make_grid(0.0, 8.0, 1024);
  const SampledSignal f = gen_gaussian(g, 1.0);
  const double m2 = p_moment(f, 2.0, 0.0, MomentWeight::density);
  CHECK(m2 == Catch::Approx(0.88622692545275805).margin(1e-8));  // sqrt(pi)/2
  // Both weight modes coincide at p = 2.
  CHECK(p_moment(f, 2.0, 0.0, MomentWeight::pth_power) == Catch::Approx(m2).margin(1e-14));
}

TEST_CASE("moment preconditions reject unusable exponents") {
  const UniformGrid g = make_grid(0.0, 4.0, 128);
  const SampledSignal f = gen_gaussian(g, 1.0);
  CHECK_THROWS_AS(p_moment(f, -0.5, 0.0, MomentWeight::density), NegativeExponent);
  CHECK_THROWS_AS(p_moment(f, 0.0, 0.0, MomentWeight::pth_power), NegativeExponent);
  // p = 0 with the energy-density weight is the plain energy integral.
  CHECK(p_moment(f, 0.0, 0.0, MomentWeight::density) ==
        Catch::Approx(inner_product(f, f).real()).margin(1e-13));
}

TEST_CASE("signed first moment of an even energy density vanishes") {
  const UniformGrid g = make_grid(0.0, 8.0, 1024);
  const SampledSignal f = gen_gaussian(g, 1.0);
  const SampledSignal xf = tabulate(g, [](double x) { return cd{x * std::exp(-x * x / 2.0), 0.0}; });
  CHECK(std::abs(inner_product(xf, f).real()) <= 1e-10);

  const SampledSignal h = gen_hermite(g, 1);  // odd function, even |h|^2
  const SampledSignal xh2 = tabulate(g, [&](double x) {
    const double v = std::abs(sample_at(h, x));
    return cd{x * v * v, 0.0};
  });
  const SampledSignal ones = tabulate(g, [](double) { return cd{1.0, 0.0}; });
  CHECK(std::abs(inner_product(xh2, ones).real()) <= 1e-10);
}

TEST_CASE("scale measure weights implement the inverse-square measure") {
  const ScaleGrid single{1.0, 1.0, 1, 0.1};
  const auto w1 = scale_measure_weights(single);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == Catch::Approx(0.1).margin(1e-15));

  const ScaleGrid ladder{0.25, 8.0, 512};
  const auto w = scale_measure_weights(ladder);
  double sum = 0.0;
  for (double v : w) sum += v;
  const double closed_form = 1.0 / 0.25 - 1.0 / 8.0;
  CHECK(sum == Catch::Approx(closed_form).epsilon(0.01));

  // Doubling every node halves the weight at equal log step.
  const ScaleGrid doubled{0.5, 16.0, 512};
  const auto wd = scale_measure_weights(doubled);
  for (std::size_t j = 0; j < w.size(); ++j)
    CHECK(wd[j] == Catch::Approx(0.5 * w[j]).epsilon(1e-12));
}

TEST_CASE("log-spaced scale ladder pins its endpoints and validates input") {
  const ScaleGrid g{0.25, 8.0, 64};
  const auto nodes = g.nodes();
  REQUIRE(nodes.size() == 64);
  CHECK(nodes.front() == Catch::Approx(0.25).margin(1e-15));
  CHECK(nodes.back() == 8.0);
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    CHECK(nodes[j] > nodes[j - 1]);
    // Constant ratio between neighbors (log spacing).
    CHECK(nodes[j] / nodes[j - 1] ==
          Catch::Approx(nodes[1] / nodes[0]).epsilon(1e-10));
  }
  CHECK(g.decades() == Catch::Approx(std::log10(32.0)).margin(1e-14));

  CHECK_THROWS_AS(ScaleGrid(0.0, 1.0, 8), NonpositiveScale);
  CHECK_THROWS_AS(ScaleGrid(-1.0, 1.0, 8), NonpositiveScale);
  CHECK_THROWS_AS(ScaleGrid(2.0, 1.0, 8), BadParameter);   // inverted range
  CHECK_THROWS_AS(ScaleGrid(1.0, 2.0, 0), BadParameter);   // no nodes
  CHECK_THROWS_AS(ScaleGrid(1.0, 1.0, 1), BadParameter);   // single node, no log step
}

TEST_CASE("grid containers validate their shape") {
  CHECK_THROWS_AS(UniformGrid({0.0, -1.0, 4}).require_valid(), BadParameter);
  CHECK_THROWS_AS(UniformGrid({0.0, 1.0, 0}).require_valid(), BadParameter);
  CHECK_THROWS_AS(SampledSignal(UniformGrid{0.0, 1.0, 4}, std::vector<cd>(3)), GridMismatch);

  const UniformGrid g = make_grid(1.0, 2.0, 8);
  CHECK(g.origin == Catch::Approx(-1.0));
  CHECK(g.step == Catch::Approx(0.5));
  CHECK(g.count == 8);
  CHECK(g.point(4) == Catch::Approx(1.0));
  CHECK(g.abs_max() == Catch::Approx(2.5));
}

TEST_CASE("edge decay ratio flags poorly truncated signals") {
  const UniformGrid g = make_grid(0.0, 8.0, 512);
  CHECK(edge_decay(gen_gaussian(g, 1.0)) <= 1e-10);
  const SampledSignal flat = tabulate(g, [](double) { return cd{1.0, 0.0}; });
  CHECK(edge_decay(flat) == Catch::Approx(1.0));
}
