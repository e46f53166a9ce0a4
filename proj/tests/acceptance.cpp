// Acceptance harness: runs the eleven verification criterion groups and
// prints one PASS/FAIL line per group plus the individual residual rows.
// Exit code is 0 only when every group passes.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "saftw/io.hpp"
#include "saftw/verify.hpp"

namespace {

struct Group {
  const char* name;
  std::function<std::vector<saftw::VerifyRow>()> run;
};

}  // namespace

int main() {
  using saftw::VerifyRow;
  const std::vector<Group> groups = {
      {"criterion-01 closed-form reduction", saftw::criterion1_fourier_reduction},
      {"criterion-02 fast path vs quadrature", saftw::criterion2_fast_vs_direct},
      {"criterion-03 inner-product preservation", saftw::criterion3_parseval},
      {"criterion-04 convolution factorization", saftw::criterion4_convolution},
      {"criterion-05 scalogram path agreement", saftw::criterion5_spectral_vs_direct},
      {"criterion-06 orthogonality relation", saftw::criterion6_moyal},
      {"criterion-07 synthesis inversion", saftw::criterion7_inversion},
      {"criterion-08 range characterization", saftw::criterion8_range},
      {"criterion-09 window localization", saftw::criterion9_localization},
      {"criterion-10 inequality battery", saftw::criterion10_battery},
      {"criterion-11 aggregate runner", saftw::criterion11_verify_all},
  };

  int failed_groups = 0;
  for (const Group& g : groups) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<VerifyRow> rows;
    std::string error;
    try {
      rows = g.run();
    } catch (const std::exception& e) {
      error = e.what();
    }

    bool ok = error.empty();
    for (const VerifyRow& r : rows) ok = ok && r.passed;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::printf("[%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", g.name, seconds);
    if (!error.empty()) std::printf("        error: %s\n", error.c_str());
    for (const VerifyRow& r : rows) {
      std::printf("        %-42s %s %s %s  [%s]%s%s\n", r.name.c_str(),
                  saftw::fmt17(r.value).c_str(), r.pass_when_le ? "<=" : ">=",
                  saftw::fmt17(r.threshold).c_str(), r.passed ? "ok" : "FAIL",
                  r.note.empty() ? "" : "  ", r.note.c_str());
    }
    std::fflush(stdout);
    if (!ok) ++failed_groups;
  }

  if (failed_groups == 0) {
    std::printf("all 11 criterion groups passed\n");
    return 0;
  }
  std::printf("%d criterion group(s) failed\n", failed_groups);
  return 1;
}
