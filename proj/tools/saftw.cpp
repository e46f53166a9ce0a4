// Command-line front end: signal generation and ingestion, transform
// dispatch, scalogram analysis/synthesis, localization and inequality
// reports, and the verify-all aggregate. Exit codes: 0 = success / all
// checks pass, 1 = a check failed its threshold, 2 = configuration or
// validation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "saftw/saftw.hpp"

namespace {

using saftw::cd;
using saftw::VerifyRow;

struct CliState {
  saftw::RunConfig cfg;
  bool json = false;
  bool quiet = false;
};

std::string in_out_dir(const CliState& s, const std::string& name) {
  return (std::filesystem::path(s.cfg.out_dir) / name).string();
}

void say(const CliState& s, const std::string& line) {
  if (!s.quiet) std::cout << line << "\n";
}

nlohmann::json row_to_json(const VerifyRow& r) {
  return nlohmann::json{{"check", r.name},
                        {"value", r.value},
                        {"threshold", r.threshold},
                        {"mode", r.pass_when_le ? "le" : "ge"},
                        {"passed", r.passed},
                        {"note", r.note}};
}

void print_rows(const CliState& s, const std::vector<VerifyRow>& rows) {
  if (s.quiet) return;
  if (s.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(row_to_json(r));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : rows) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  value="
              << saftw::fmt17(r.value) << "  threshold=" << saftw::fmt17(r.threshold)
              << (r.pass_when_le ? " (<=)" : " (>=)");
    if (!r.note.empty()) std::cout << "  [" << r.note << "]";
    std::cout << "\n";
  }
}

int rows_exit(const std::vector<VerifyRow>& rows) {
  for (const auto& r : rows)
    if (!r.passed) return 1;
  return 0;
}

// Translation lattice for direct scalogram evaluation: the signal grid
// thinned to at most 256 nodes.
saftw::UniformGrid thin_grid(const saftw::UniformGrid& g, std::size_t cap) {
  const std::size_t stride = std::max<std::size_t>(1, g.count / cap);
  return saftw::UniformGrid{g.origin, g.step * static_cast<double>(stride),
                            std::max<std::size_t>(1, g.count / stride)};
}

saftw::SampledSignal generate_kind(const std::string& spec, const CliState& s) {
  const auto parts = saftw::detail::split(spec, ':');
  if (parts.empty()) throw saftw::BadParameter("empty generator spec");
  const auto arg = [&](std::size_t i, double fallback) {
    return i < parts.size() ? saftw::detail::parse_number(parts[i], "generator") : fallback;
  };
  const saftw::UniformGrid grid = s.cfg.signal_grid();
  const std::string& name = parts[0];
  if (name == "gaussian") return saftw::gen_gaussian(grid, arg(1, 1.0), arg(2, 0.0));
  if (name == "chirp") return saftw::gen_chirp(grid, arg(1, 0.0), arg(2, 0.0));
  if (name == "hermite")
    return saftw::gen_hermite(grid, static_cast<int>(arg(1, 0.0)));
  if (name == "morlet") return saftw::gen_morlet(grid, arg(1, s.cfg.omega0));
  throw saftw::BadParameter("unknown generator '" + name +
                            "' (expected gaussian|chirp|hermite|morlet)");
}

saftw::NsawtGrids grids_for(const CliState& s) {
  saftw::NsawtGrids grids =
      saftw::default_nsawt_grids(s.cfg.matrix, s.cfg.signal_grid());
  grids.scale_grid = s.cfg.scale_grid();
  grids.t_grid = thin_grid(s.cfg.signal_grid(), 128);
  return grids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine-kernel transform and scale-translation analysis toolkit"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  CliState st;
  std::string config_path, matrix_spec, out_dir_flag, path_flag;
  app.add_option("--config", config_path, "configuration file (key = value sections)")
      ->check(CLI::ExistingFile);
  app.add_option("--matrix", matrix_spec,
                 "parameter set: fourier | fractional:theta[:p:q] | fresnel:b[:p:q] | "
                 "lct:a:b:c:d[:p:q] | A,B,C,D,p,q");
  app.add_option("--path", path_flag, "evaluation path: direct | fast | spectral");
  app.add_option("--out-dir", out_dir_flag, "directory for default outputs");
  app.add_flag("--json", st.json, "print reports as JSON");
  app.add_flag("--quiet", st.quiet, "suppress stdout reports");

  // generate
  std::string gen_kind, gen_out;
  auto* gen = app.add_subcommand("generate", "tabulate a named analytic signal");
  gen->add_option("--kind", gen_kind,
                  "gaussian[:sigma[:x0]] | chirp[:a[:b]] | hermite[:n] | morlet[:omega0]")
      ->required();
  gen->add_option("--out", gen_out, "output signal CSV");

  // saft / isaft
  std::string tr_in, tr_out;
  double w0 = 0.0, dw = 0.0;
  std::size_t nw = 0;
  auto* tr = app.add_subcommand("saft", "forward transform of a signal CSV");
  tr->add_option("--in", tr_in, "input signal CSV")->required()->check(CLI::ExistingFile);
  tr->add_option("--out", tr_out, "output spectrum CSV");
  tr->add_option("--w0", w0, "direct path: first output frequency");
  tr->add_option("--dw", dw, "direct path: output frequency step");
  tr->add_option("--nw", nw, "direct path: output node count");

  std::string inv_in, inv_out;
  auto* inv = app.add_subcommand("isaft", "inverse transform of a spectrum CSV");
  inv->add_option("--in", inv_in, "input spectrum CSV")->required()->check(CLI::ExistingFile);
  inv->add_option("--out", inv_out, "output signal CSV");

  // conv
  std::string cv_a, cv_b, cv_out;
  auto* cv = app.add_subcommand("conv", "chirp-weighted convolution of two signals");
  cv->add_option("--in-a", cv_a)->required()->check(CLI::ExistingFile);
  cv->add_option("--in-b", cv_b)->required()->check(CLI::ExistingFile);
  cv->add_option("--out", cv_out, "output signal CSV");

  // nsawt / nsawt-invert
  std::string nw_in, nw_out, nw_svg;
  auto* nwc = app.add_subcommand("nsawt", "scale-translation analysis of a signal");
  nwc->add_option("--in", nw_in, "input signal CSV")->required()->check(CLI::ExistingFile);
  nwc->add_option("--out", nw_out, "output scalogram CSV");
  nwc->add_option("--svg", nw_svg, "optional heatmap SVG path");

  std::string ni_in, ni_out;
  auto* ni = app.add_subcommand("nsawt-invert", "synthesize a signal from a scalogram");
  ni->add_option("--in", ni_in, "input scalogram CSV")->required()->check(CLI::ExistingFile);
  ni->add_option("--out", ni_out, "output signal CSV");

  // admissibility
  std::string adm_out;
  auto* adm = app.add_subcommand("admissibility",
                                 "scan the admissibility constant over the band");
  adm->add_option("--out", adm_out, "per-frequency constant CSV");

  // moyal-check
  std::string my_in;
  auto* my = app.add_subcommand("moyal-check", "orthogonality-relation residual");
  my->add_option("--in", my_in, "input signal CSV (default: built-in probe)")
      ->check(CLI::ExistingFile);

  // range-check
  std::string rg_in;
  bool rg_noise = false;
  auto* rg = app.add_subcommand("range-check", "distance of a field from the range");
  rg->add_option("--in", rg_in, "input scalogram CSV (default: built-in probe field)")
      ->check(CLI::ExistingFile);
  rg->add_flag("--noise", rg_noise, "test a seeded white-noise field instead");

  // localize
  double lc_t = 3.0, lc_zeta = 2.0;
  auto* lc = app.add_subcommand("localize", "daughter window law and quality factor");
  lc->add_option("--t", lc_t, "translation of the probed daughter");
  lc->add_option("--zeta", lc_zeta, "scale of the probed daughter");

  // uncertainty
  std::string un_out;
  auto* un = app.add_subcommand("uncertainty", "run the inequality battery");
  un->add_option("--out", un_out, "battery CSV");

  // verify-all
  std::string va_out;
  auto* va = app.add_subcommand("verify-all", "run the full identity suite");
  va->add_option("--out", va_out, "report CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // Assemble the effective configuration: file first, then flag overrides.
  try {
    if (!config_path.empty()) st.cfg = saftw::parse_config_file(config_path);
    if (!matrix_spec.empty()) st.cfg.matrix = saftw::parse_matrix_spec(matrix_spec);
    if (!out_dir_flag.empty()) st.cfg.out_dir = out_dir_flag;
    if (!path_flag.empty()) {
      if (path_flag != "direct" && path_flag != "fast" && path_flag != "spectral")
        throw saftw::BadParameter("path must be direct, fast, or spectral");
      st.cfg.path = path_flag;
    }
    st.cfg.matrix.require_valid();
    st.cfg.signal_grid().require_valid();
  } catch (const saftw::Error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  const saftw::SaftMatrix m = st.cfg.matrix;

  try {
    if (*gen) {
      const saftw::SampledSignal s = generate_kind(gen_kind, st);
      const std::string out = gen_out.empty() ? in_out_dir(st, "signal.csv") : gen_out;
      saftw::write_signal_csv(out, s);
      say(st, "wrote " + out);
      return 0;
    }

    if (*tr) {
      const saftw::SampledSignal f = saftw::read_signal_csv(tr_in);
      saftw::Spectrum sp;
      if (m.b == 0.0) {
        const saftw::UniformGrid out_grid =
            nw ? saftw::UniformGrid{w0, dw, nw}
               : saftw::UniformGrid{m.p + f.grid.origin / m.d, f.grid.step / m.d,
                                    f.grid.count};
        sp = saftw::saft_bzero(f, m, out_grid);
      } else if (st.cfg.path == "direct") {
        const saftw::UniformGrid out_grid =
            nw ? saftw::UniformGrid{w0, dw, nw}
               : saftw::make_grid(m.p, saftw::saft_legal_halfwidth(m, f.grid), 512);
        sp = saftw::saft_direct(f, m, out_grid);
      } else {
        sp = saftw::saft_fast(f, m);
      }
      const std::string out = tr_out.empty() ? in_out_dir(st, "spectrum.csv") : tr_out;
      saftw::write_spectrum_csv(out, sp);
      say(st, "wrote " + out);
      return 0;
    }

    if (*inv) {
      const saftw::Spectrum sp = saftw::read_spectrum_csv(inv_in);
      saftw::SampledSignal f = st.cfg.path == "fast"
                                   ? saftw::isaft_fast(sp, m)
                                   : saftw::isaft(sp, m, st.cfg.signal_grid());
      const std::string out = inv_out.empty() ? in_out_dir(st, "signal.csv") : inv_out;
      saftw::write_signal_csv(out, f);
      say(st, "wrote " + out);
      return 0;
    }

    if (*cv) {
      const saftw::SampledSignal a = saftw::read_signal_csv(cv_a);
      const saftw::SampledSignal b = saftw::read_signal_csv(cv_b);
      const saftw::SampledSignal h = saftw::saft_convolve(a, b, m);
      const std::string out = cv_out.empty() ? in_out_dir(st, "convolution.csv") : cv_out;
      saftw::write_signal_csv(out, h);
      say(st, "wrote " + out);
      return 0;
    }

    if (*nwc) {
      const saftw::SampledSignal f = saftw::read_signal_csv(nw_in);
      const saftw::MotherWavelet psi = saftw::make_wavelet(st.cfg.wavelet, st.cfg.omega0);
      const saftw::ScaleGrid scales = st.cfg.scale_grid();
      const saftw::Scalogram w =
          st.cfg.path == "direct"
              ? saftw::nsawt_direct(f, psi, thin_grid(f.grid, 256), scales, m)
              : saftw::nsawt_spectral(f, psi, scales, m);
      const std::string out = nw_out.empty() ? in_out_dir(st, "scalogram.csv") : nw_out;
      saftw::write_scalogram_csv(out, w);
      say(st, "wrote " + out);
      if (!nw_svg.empty()) {
        saftw::write_scalogram_svg(nw_svg, w);
        say(st, "wrote " + nw_svg);
      }
      return 0;
    }

    if (*ni) {
      const saftw::MotherWavelet psi = saftw::make_wavelet(st.cfg.wavelet, st.cfg.omega0);
      const saftw::Scalogram w = saftw::read_scalogram_csv(ni_in, m, psi.name);
      saftw::NsawtGrids grids = grids_for(st);
      grids.t_grid = w.t_grid;
      grids.scale_grid = w.scale_grid;
      const saftw::SampledSignal rec =
          saftw::nsawt_invert(w, psi, st.cfg.signal_grid(), grids);
      const std::string out = ni_out.empty() ? in_out_dir(st, "signal.csv") : ni_out;
      saftw::write_signal_csv(out, rec);
      say(st, "wrote " + out);
      return 0;
    }

    if (*adm) {
      const saftw::MotherWavelet psi = saftw::make_wavelet(st.cfg.wavelet, st.cfg.omega0);
      const saftw::NsawtGrids grids = grids_for(st);
      std::vector<VerifyRow> rows;
      try {
        const saftw::AdmissibilityReport rep =
            saftw::admissibility(psi, m, grids.adm_omega_grid, grids.adm_scale_grid);
        const double tol = st.cfg.tolerance("admissibility-spread", 5e-2);
        rows.push_back(saftw::detail::ge_row("admissibility-mean", rep.c_psi_mean, 1e-12));
        rows.push_back(
            saftw::detail::le_row("admissibility-spread", rep.relative_spread, tol));
        if (!adm_out.empty()) {
          std::string body = "omega,c\n";
          for (std::size_t i = 0; i < rep.omega_grid.size(); ++i)
            body += saftw::fmt17(rep.omega_grid[i]) + "," +
                    saftw::fmt17(rep.c_psi_per_omega[i]) + "\n";
          std::ofstream(adm_out) << body;
          say(st, "wrote " + adm_out);
        }
      } catch (const saftw::Error& e) {
        rows.push_back(saftw::detail::error_row("admissibility", e.what()));
      }
      print_rows(st, rows);
      return rows_exit(rows);
    }

    if (*my) {
      const saftw::MotherWavelet psi = saftw::make_wavelet(st.cfg.wavelet, st.cfg.omega0);
      const saftw::SampledSignal f = my_in.empty()
                                         ? saftw::gen_chirp(st.cfg.signal_grid(), 0.0, 4.0)
                                         : saftw::read_signal_csv(my_in);
      std::vector<VerifyRow> rows;
      try {
        const double r = saftw::moyal_residual(f, f, psi, m, grids_for(st));
        rows.push_back(
            saftw::detail::le_row("moyal", r, st.cfg.tolerance("moyal", 5e-2)));
      } catch (const saftw::Error& e) {
        rows.push_back(saftw::detail::error_row("moyal", e.what()));
      }
      print_rows(st, rows);
      return rows_exit(rows);
    }

    if (*rg) {
      const saftw::MotherWavelet psi = saftw::make_wavelet(st.cfg.wavelet, st.cfg.omega0);
      saftw::NsawtGrids grids = grids_for(st);
      std::vector<VerifyRow> rows;
      try {
        saftw::Scalogram field =
            rg_in.empty()
                ? saftw::nsawt_direct(saftw::gen_chirp(st.cfg.signal_grid(), 0.0, 4.0),
                                      psi, grids.t_grid, grids.scale_grid, m)
                : saftw::read_scalogram_csv(rg_in, m, psi.name);
        grids.t_grid = field.t_grid;
        grids.scale_grid = field.scale_grid;
        if (rg_noise) {
          saftw::detail::DetRng rng(96ULL);
          for (auto& c : field.coeffs) c = rng.complex_normal();
        }
        const double r = saftw::range_projection_residual(field, psi, m, grids);
        if (rg_noise)
          rows.push_back(saftw::detail::ge_row("range-noise", r,
                                               st.cfg.tolerance("range-noise", 0.5)));
        else
          rows.push_back(
              saftw::detail::le_row("range-genuine", r, st.cfg.tolerance("range", 8e-2)));
      } catch (const saftw::Error& e) {
        rows.push_back(saftw::detail::error_row("range", e.what()));
      }
      print_rows(st, rows);
      return rows_exit(rows);
    }

    if (*lc) {
      const saftw::MotherWavelet psi = saftw::make_wavelet(st.cfg.wavelet, st.cfg.omega0);
      std::vector<VerifyRow> rows;
      try {
        const saftw::DaughterWindowLaw law =
            saftw::daughter_window_law(psi, lc_t, lc_zeta, m);
        const double gap =
            std::max(std::abs(law.measured.center - law.predicted.center),
                     std::abs(law.measured.radius - law.predicted.radius));
        VerifyRow row = saftw::detail::le_row(
            "window-law", gap, st.cfg.tolerance("window-law", 1e-6));
        row.note = "center " + saftw::fmt17(law.measured.center) + " radius " +
                   saftw::fmt17(law.measured.radius);
        rows.push_back(std::move(row));
        const std::vector<double> q = saftw::q_factor(psi, m, {0.5, 1.0, 2.0});
        const double lo = std::min({q[0], q[1], q[2]});
        const double hi = std::max({q[0], q[1], q[2]});
        const double mean = (q[0] + q[1] + q[2]) / 3.0;
        rows.push_back(saftw::detail::le_row(
            "quality-factor-spread", (hi - lo) / mean,
            st.cfg.tolerance("quality-factor-spread", 1e-2)));
      } catch (const saftw::Error& e) {
        rows.push_back(saftw::detail::error_row("localize", e.what()));
      }
      print_rows(st, rows);
      return rows_exit(rows);
    }

    if (*un) {
      const std::vector<saftw::BatteryRow> battery = saftw::standard_battery(true);
      std::string body = "matrix,signal,check,lhs,rhs,ratio,tolerance,passed\n";
      std::vector<VerifyRow> rows;
      for (const auto& r : battery) {
        body += r.matrix_id + "," + r.signal_id + "," + r.report.name + "," +
                saftw::fmt17(r.report.lhs) + "," + saftw::fmt17(r.report.rhs) + "," +
                saftw::fmt17(r.report.ratio) + "," + saftw::fmt17(r.report.tolerance) +
                "," + (r.report.passed ? "1" : "0") + "\n";
        VerifyRow row = saftw::detail::ge_row(
            "battery/" + r.matrix_id + "/" + r.signal_id + "/" + r.report.name,
            r.report.ratio, 1.0 - r.report.tolerance);
        row.passed = r.report.passed;
        rows.push_back(std::move(row));
      }
      const std::string out = un_out.empty() ? in_out_dir(st, "battery.csv") : un_out;
      std::ofstream(out) << body;
      say(st, "wrote " + out);
      print_rows(st, rows);
      return rows_exit(rows);
    }

    if (*va) {
      const saftw::VerifyResult res = saftw::verify_all(st.cfg);
      const std::string out = va_out.empty() ? in_out_dir(st, "verify_report.csv") : va_out;
      std::ofstream(out) << res.csv;
      say(st, "wrote " + out);
      print_rows(st, res.rows);
      return res.exit_code;
    }
  } catch (const saftw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!st.quiet) std::cout << app.help() << "\n";
  return 0;
}
