// Tests for file formats (CSV round trips, SVG heatmap) and run
// configuration (matrix specs, wavelet selectors, config files).

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "saftw/config.hpp"
#include "saftw/errors.hpp"
#include "saftw/io.hpp"
#include "saftw/nsawt.hpp"
#include "saftw/signals.hpp"

using namespace saftw;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("saftw_test_" + name)).string();
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scalogram sample_scalogram() {
  const UniformGrid t{-1.0, 0.5, 5};
  const ScaleGrid z{0.5, 4.0, 4};
  std::vector<cd> coeffs(t.count * z.count);
  std::mt19937_64 eng(0x5ca10ULL);
  for (cd& v : coeffs) {
    const double re = -1.0 + 2.0 * ((eng() >> 11) * 0x1.0p-53);
    const double im = -1.0 + 2.0 * ((eng() >> 11) * 0x1.0p-53);
    v = cd{re, im};
  }
  return Scalogram{t, z, std::move(coeffs), presets::fourier(), "morlet"};
}

}  // namespace

TEST_CASE("seventeen-digit formatting round-trips doubles exactly") {
  for (double v : {0.1 + 0.2, pi, -1.0 / 3.0, 1e-300, 123456789.123456789}) {
    CHECK(std::stod(fmt17(v)) == v);
  }
}

TEST_CASE("signal CSV files round-trip bit-identically") {
  const std::string path = temp_path("signal.csv");
  const SampledSignal f = gen_chirp(make_grid(0.3, 5.0, 64), 0.7, 1.3);
  write_signal_csv(path, f);
  const SampledSignal back = read_signal_csv(path);

  REQUIRE(back.grid.count == f.grid.count);
  CHECK(back.grid.origin == f.grid.origin);
  CHECK(std::abs(back.grid.step - f.grid.step) <= 1e-12 * f.grid.step);
  for (std::size_t k = 0; k < f.grid.count; ++k) CHECK(back.samples[k] == f.samples[k]);
  std::filesystem::remove(path);
}

TEST_CASE("spectrum CSV files round-trip bit-identically") {
  const std::string path = temp_path("spectrum.csv");
  const Spectrum s = saft_fast(gen_gaussian(make_grid(0.0, 8.0, 128), 1.0),
                               presets::fourier());
  write_spectrum_csv(path, s);
  const Spectrum back = read_spectrum_csv(path);

  REQUIRE(back.grid.count == s.grid.count);
  CHECK(back.grid.origin == s.grid.origin);
  for (std::size_t k = 0; k < s.grid.count; ++k) CHECK(back.values[k] == s.values[k]);
  std::filesystem::remove(path);
}

TEST_CASE("malformed signal CSV files are rejected") {
  const std::string path = temp_path("bad_signal.csv");

  SECTION("jittered axis") {
    write_text(path, "x,re,im\n0,1,0\n1,1,0\n2.1,1,0\n3,1,0\n");
    CHECK_THROWS_AS(read_signal_csv(path), BadParameter);
  }

  SECTION("descending axis") {
    write_text(path, "x,re,im\n2,1,0\n1,1,0\n0,1,0\n");
    CHECK_THROWS_AS(read_signal_csv(path), BadParameter);
  }

  SECTION("too few samples") {
    write_text(path, "x,re,im\n0,1,0\n");
    CHECK_THROWS_AS(read_signal_csv(path), BadParameter);
  }

  SECTION("missing file") {
    CHECK_THROWS_AS(read_signal_csv(temp_path("does_not_exist.csv")), BadParameter);
  }
  std::filesystem::remove(path);
}

TEST_CASE("scalogram CSV files round-trip through the long form") {
  const std::string path = temp_path("scalogram.csv");
  const Scalogram w = sample_scalogram();
  write_scalogram_csv(path, w);
  const Scalogram back = read_scalogram_csv(path, w.matrix, w.wavelet_id);

  REQUIRE(back.t_grid.count == w.t_grid.count);
  REQUIRE(back.scale_grid.count == w.scale_grid.count);
  CHECK(back.t_grid.origin == w.t_grid.origin);
  CHECK(std::abs(back.t_grid.step - w.t_grid.step) <= 1e-12);
  CHECK(back.scale_grid.zeta_min == w.scale_grid.zeta_min);
  CHECK(back.scale_grid.zeta_max == w.scale_grid.zeta_max);
  for (std::size_t k = 0; k < w.coeffs.size(); ++k) CHECK(back.coeffs[k] == w.coeffs[k]);
  std::filesystem::remove(path);
}

TEST_CASE("degenerate scalogram shapes survive the CSV round trip") {
  const std::string path = temp_path("scalogram_edge.csv");

  SECTION("single scale, many times") {
    const UniformGrid t{0.0, 0.25, 6};
    Scalogram w{t, ScaleGrid{2.0, 2.0, 1, 0.7}, std::vector<cd>(6, cd{1.0, -2.0}),
                presets::fourier(), "morlet"};
    write_scalogram_csv(path, w);
    const Scalogram back = read_scalogram_csv(path, w.matrix, w.wavelet_id);
    REQUIRE(back.scale_grid.count == 1);
    REQUIRE(back.t_grid.count == 6);
    CHECK(back.scale_grid.zeta_min == 2.0);
    for (const cd& v : back.coeffs) CHECK(v == cd{1.0, -2.0});
  }

  SECTION("single time, many scales") {
    Scalogram w{UniformGrid{1.5, 1.0, 1}, ScaleGrid{0.5, 4.0, 4},
                std::vector<cd>(4, cd{0.0, 3.0}), presets::fourier(), "morlet"};
    write_scalogram_csv(path, w);
    const Scalogram back = read_scalogram_csv(path, w.matrix, w.wavelet_id);
    REQUIRE(back.t_grid.count == 1);
    CHECK(back.t_grid.origin == 1.5);
    REQUIRE(back.scale_grid.count == 4);
  }
  std::filesystem::remove(path);
}

TEST_CASE("inconsistent scalogram CSV files are rejected") {
  const std::string path = temp_path("scalogram_bad.csv");
  const Scalogram w = sample_scalogram();
  write_scalogram_csv(path, w);

  SECTION("truncated sweep") {
    std::string body = read_text(path);
    body.erase(body.rfind('\n', body.size() - 2) + 1);  // drop the final row
    write_text(path, body);
    CHECK_THROWS_AS(read_scalogram_csv(path, w.matrix, w.wavelet_id), BadParameter);
  }

  SECTION("empty file") {
    write_text(path, "t,zeta,re,im\n");
    CHECK_THROWS_AS(read_scalogram_csv(path, w.matrix, w.wavelet_id), BadParameter);
  }
  std::filesystem::remove(path);
}

TEST_CASE("scalogram SVG heatmaps contain the expected structure") {
  const std::string path = temp_path("scalogram.svg");
  Scalogram w = sample_scalogram();
  w.coeffs[0] = cd{100.0, 0.0};  // forces a full-dark cell
  w.coeffs[1] = cd{};            // and a full-light cell
  write_scalogram_svg(path, w);
  const std::string svg = read_text(path);

  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(svg.find("fill=\"white\"") != std::string::npos);
  CHECK(svg.find("#000000") != std::string::npos);
  CHECK(svg.find("#ffffff") != std::string::npos);
  CHECK(svg.find("<text") != std::string::npos);
  CHECK(svg.find("(log axis)") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  std::filesystem::remove(path);
}

TEST_CASE("matrix specs parse presets, raw sextuples, and reject malformed input") {
  const SaftMatrix f = parse_matrix_spec("fourier");
  CHECK(f.a == 0.0);
  CHECK(f.b == 1.0);
  CHECK(f.c == -1.0);
  CHECK(f.d == 0.0);

  const SaftMatrix raw = parse_matrix_spec("1, 2, 0, 1, 0.5, 0.25");
  const SaftMatrix fres = presets::fresnel(2.0, 0.5, 0.25);
  CHECK(raw.a == fres.a);
  CHECK(raw.b == fres.b);
  CHECK(raw.c == fres.c);
  CHECK(raw.d == fres.d);
  CHECK(raw.p == fres.p);
  CHECK(raw.q == fres.q);

  const SaftMatrix colon = parse_matrix_spec("fresnel:2:0.5:0.25");
  CHECK(colon.b == 2.0);
  CHECK(colon.p == 0.5);
  CHECK(colon.q == 0.25);

  const SaftMatrix lct = parse_matrix_spec("lct:1:2:0:1");
  CHECK(lct.determinant() == 1.0);

  CHECK_THROWS_AS(parse_matrix_spec("1,1,1,1,0,0"), NonUnimodular);
  CHECK_THROWS_AS(parse_matrix_spec("1,2,3"), BadParameter);
  CHECK_THROWS_AS(parse_matrix_spec("bogus"), BadParameter);
  CHECK_THROWS_AS(parse_matrix_spec("fourier:1"), BadParameter);
  CHECK_THROWS_AS(parse_matrix_spec("fractional"), BadParameter);
  CHECK_THROWS_AS(parse_matrix_spec("1,2,0,x,0,0"), BadParameter);
  CHECK_THROWS_AS(parse_matrix_spec("  "), BadParameter);
}

TEST_CASE("wavelet selectors build the requested analyzing function") {
  CHECK(make_wavelet("morlet", 5.0).name == "morlet");
  CHECK(make_wavelet("gaussian").name == "gaussian");
  CHECK_THROWS_AS(make_wavelet("triangle"), BadParameter);

  SECTION("tabulated wavelet from a CSV file") {
    const std::string path = temp_path("mother.csv");
    write_signal_csv(path, gen_gaussian(make_grid(0.0, 8.0, 512), 1.0));
    const MotherWavelet psi = make_wavelet("csv:" + path);
    CHECK(psi.name == "csv:" + path);
    CHECK(psi.signal.grid.count == 512);
    CHECK(psi.l2_norm > 0.0);
    std::filesystem::remove(path);
  }
}

TEST_CASE("run configuration files populate every section") {
  const std::string path = temp_path("run.cfg");
  write_text(path,
             "# full configuration\n"
             "[matrix]\n"
             "preset = fresnel:2:0.5:0.25\n"
             "[grid]\n"
             "x0 = -8\n"
             "dx = 0.03125\n"
             "n = 512\n"
             "[scales]\n"
             "min = 0.5\n"
             "max = 4\n"
             "count = 16\n"
             "[wavelet]\n"
             "kind = morlet\n"
             "omega0 = 6\n"
             "[run]\n"
             "path = direct\n"
             "out_dir = out\n"
             "[tolerances]\n"
             "roundtrip = 1e-6\n");
  const RunConfig cfg = parse_config_file(path);
  CHECK(cfg.matrix.b == 2.0);
  CHECK(cfg.matrix.p == 0.5);
  CHECK(cfg.grid_x0 == -8.0);
  CHECK(cfg.grid_dx == 0.03125);
  CHECK(cfg.grid_n == 512);
  CHECK(cfg.zeta_min == 0.5);
  CHECK(cfg.zeta_max == 4.0);
  CHECK(cfg.zeta_count == 16);
  CHECK(cfg.wavelet == "morlet");
  CHECK(cfg.omega0 == 6.0);
  CHECK(cfg.path == "direct");
  CHECK(cfg.out_dir == "out");
  CHECK(cfg.tolerance("roundtrip", 1.0) == 1e-6);
  CHECK(cfg.tolerance("absent", 0.125) == 0.125);
  std::filesystem::remove(path);
}

TEST_CASE("run configuration defaults survive an empty file") {
  const std::string path = temp_path("empty.cfg");
  write_text(path, "# nothing but comments\n\n");
  const RunConfig cfg = parse_config_file(path);
  CHECK(cfg.grid_x0 == -16.0);
  CHECK(cfg.grid_dx == 0.015625);
  CHECK(cfg.grid_n == 2048);
  CHECK(cfg.zeta_min == 0.25);
  CHECK(cfg.zeta_max == 8.0);
  CHECK(cfg.zeta_count == 64);
  CHECK(cfg.wavelet == "morlet");
  CHECK(cfg.path == "fast");
  CHECK(cfg.out_dir == ".");
  CHECK(cfg.matrix.b == 1.0);
  std::filesystem::remove(path);
}

TEST_CASE("manual matrix entries override the preset") {
  const std::string path = temp_path("manual.cfg");
  write_text(path,
             "[matrix]\n"
             "preset = fourier\n"
             "a = 1\nb = 2\nc = 0\nd = 1\np = 0.5\nq = 0.25\n");
  const RunConfig cfg = parse_config_file(path);
  CHECK(cfg.matrix.a == 1.0);
  CHECK(cfg.matrix.b == 2.0);
  CHECK(cfg.matrix.p == 0.5);
  std::filesystem::remove(path);
}

TEST_CASE("configuration errors carry the file location") {
  const std::string path = temp_path("broken.cfg");

  auto message_of = [&](const std::string& body) {
    write_text(path, body);
    try {
      parse_config_file(path);
    } catch (const BadParameter& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  SECTION("unknown key in a known section") {
    const std::string msg = message_of("[grid]\nfoo = 1\n");
    CHECK(msg.find("unknown grid key") != std::string::npos);
    CHECK(msg.find(":2") != std::string::npos);
  }

  SECTION("unknown section") {
    const std::string msg = message_of("[nonsense]\n");
    CHECK(msg.find("unknown section") != std::string::npos);
  }

  SECTION("key before any section") {
    const std::string msg = message_of("x0 = 1\n");
    CHECK(msg.find("outside any [section]") != std::string::npos);
  }

  SECTION("missing equals sign") {
    const std::string msg = message_of("[grid]\nx0 1\n");
    CHECK(msg.find("expected key = value") != std::string::npos);
  }

  SECTION("invalid run path") {
    const std::string msg = message_of("[run]\npath = sideways\n");
    CHECK(msg.find("path must be") != std::string::npos);
  }

  SECTION("missing wavelet file") {
    const std::string msg =
        message_of("[wavelet]\nkind = csv:/no/such/file.csv\n");
    CHECK(msg.find("does not exist") != std::string::npos);
  }

  SECTION("degenerate manual matrix") {
    write_text(path, "[matrix]\na = 1\nb = 1\nc = 1\nd = 1\n");
    CHECK_THROWS_AS(parse_config_file(path), NonUnimodular);
  }
  std::filesystem::remove(path);
}
