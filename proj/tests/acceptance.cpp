// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "vmtaper/circular.hpp"
#include "vmtaper/metrics.hpp"
#include "vmtaper/special.hpp"
#include "vmtaper/spectra.hpp"
#include "vmtaper/verify.hpp"
#include "vmtaper/windows.hpp"

using namespace vmtaper;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// ------------------------------------------------------------------ 1

Outcome series_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::string where;
  for (double beta : {1.0, 3.0, 5.0}) {
    for (double n : {1.0, 2.0, 16.0}) {
      VerificationParams p;
      p.beta = beta;
      p.length = n;
      p.trunc = SeriesTruncation(1e-14, 1000);
      const auto grid = linear_grid(-20.0 * kPi / n, 20.0 * kPi / n, 201);
      const auto r = run_verification(Subject::vm_spectrum_series_vs_oracle, p, grid);
      if (r.max_rel_deviation >= worst) {
        worst = r.max_rel_deviation;
        where = "beta=" + num(beta) + " N=" + num(n);
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-8 && elapsed < 30.0,
          "max_rel=" + num(worst) + " (" + where + ") <= 1e-8; runtime " + num(elapsed) +
              " s < 30 s"};
}

// ------------------------------------------------------------------ 2

Outcome closed_form_discrepancy() {
  const double closed0 = vonmises_spectrum_closed(0.0, 2.0, 0.0).real();
  const double oracle0 = ctft_quadrature(WindowSpec(family::VonMises{0.0}, 2.0), 0.0).real();
  const bool forced = std::abs(closed0 - 4.0) < 1e-12 && std::abs(oracle0 - 2.0) < 1e-10;

  VerificationParams p;
  p.length = 2.0;
  std::vector<double> d;
  for (double beta : {1.0, 5.0, 10.0}) {
    p.beta = beta;
    const auto grid = default_grid(Subject::vm_spectrum_closed_vs_oracle, p);
    d.push_back(run_verification(Subject::vm_spectrum_closed_vs_oracle, p, grid).max_rel_deviation);
  }
  const bool decreasing = d[1] < d[0] && d[2] < d[1];
  return {forced && decreasing, "beta=0 w=0 closed=" + num(closed0) + " oracle=" + num(oracle0) +
                                    "; D(1)=" + num(d[0]) + " > D(5)=" + num(d[1]) +
                                    " > D(10)=" + num(d[2])};
}

// ------------------------------------------------------------------ 3

Outcome cardinal_exactness() {
  VerificationParams p;
  p.beta = 5.0;
  p.length = 2.0;
  p.sample_rate = kPi / 2.0;
  const auto grid = default_grid(Subject::cardinal_reconstruction_vs_oracle, p);
  const auto r = run_verification(Subject::cardinal_reconstruction_vs_oracle, p, grid);
  return {grid.size() == 101 && r.max_abs_deviation <= 1e-6 && r.max_rel_deviation <= 1e-6,
          std::to_string(grid.size()) + " off-sample points, max_abs=" + num(r.max_abs_deviation) +
              " max_rel=" + num(r.max_rel_deviation) + " <= 1e-6 (M=" +
              std::to_string(p.sample_count) + ")"};
}

// ------------------------------------------------------------------ 4

Outcome limit_laws() {
  const WindowSpec vm0(family::VonMises{0.0}, 2.0);
  const WindowSpec box(family::Rectangular{}, 2.0);
  bool exact = true;
  for (int i = -1500; i <= 1500; ++i) {
    const double t = i * 1e-3;
    exact = exact && evaluate(vm0, t) == evaluate(box, t);
  }

  const VonMisesParams flat(0.0, 1e-8);
  double uniform_gap = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = -kPi + i * (kPi / 1000.0);
    uniform_gap = std::max(uniform_gap, std::abs(vm_pdf(flat, x) - 1.0 / (2.0 * kPi)));
  }

  // Near the mode: within one standard deviation 1/sqrt(kappa) of mu.
  const double kappa = 400.0;
  const double mu = 0.0;
  const VonMisesParams sharp(mu, kappa);
  const double sd = 1.0 / std::sqrt(kappa);
  double gauss_gap = 0.0;
  double gauss_rel = 0.0;
  for (int i = -100; i <= 100; ++i) {
    const double x = mu + sd * i / 100.0;
    const double g = oracle::normal_pdf(x, mu, 1.0 / kappa);
    const double gap = std::abs(vm_pdf(sharp, x) - g);
    gauss_gap = std::max(gauss_gap, gap);
    gauss_rel = std::max(gauss_rel, gap / g);
  }
  return {exact && uniform_gap <= 1e-8 && gauss_gap <= 1e-3,
          std::string("beta=0 equals rect: ") + (exact ? "yes" : "no") +
              "; uniform gap=" + num(uniform_gap) + " <= 1e-8; Gaussian gap=" + num(gauss_gap) +
              " <= 1e-3 (relative " + num(gauss_rel) + ")"};
}

// ------------------------------------------------------------------ 5

Outcome special_functions() {
  double integral = 0.0;
  for (double z : {0.5, 1.0, 3.0, 5.0}) {
    integral = std::max(integral, rel(bessel_i(BesselOrder(0.0), z), oracle::bessel_i0_integral(z)));
  }
  double half = 0.0;
  for (double z : {1.0, 2.0, 5.0}) {
    half = std::max(half, rel(bessel_i(BesselOrder(0.5), z), oracle::bessel_i_half(z)));
  }
  // I_{nu-1}(z) - I_{nu+1}(z) = (2 nu / z) I_nu(z).
  double recurrence = 0.0;
  for (double nu : {1.0, 1.5, 2.5, 4.0, 7.3}) {
    for (double z : {0.5, 1.0, 3.0, 5.0, 10.0}) {
      const double lhs = bessel_i(BesselOrder(nu - 1.0), z) - bessel_i(BesselOrder(nu + 1.0), z);
      const double rhs = 2.0 * nu / z * bessel_i(BesselOrder(nu), z);
      recurrence = std::max(recurrence, rel(lhs, rhs));
    }
  }
  return {integral <= 1e-10 && half <= 1e-10 && recurrence <= 1e-9,
          "I0 vs integral " + num(integral) + " <= 1e-10; half order " + num(half) +
              " <= 1e-10; recurrence " + num(recurrence) + " <= 1e-9"};
}

// ------------------------------------------------------------------ 6

Outcome classical_metrics() {
  const double n = 2.0;
  const WindowSpec r(family::Rectangular{}, n);
  const WindowSpec h(family::GeneralizedCosine{kHannAlpha}, n);
  const double enbw_rect = enbw(r);
  const double cg_hann = coherent_gain(h);
  const double enbw_hann = enbw(h);
  const double psl = peak_sidelobe(r);
  const double dense = oracle::dense_sidelobe_db(
      [n](double w) { return n * oracle::sinc(w * n / 2.0); }, 40.0 * 2.0 * kPi / n, 2'000'000);
  const bool ok = std::abs(enbw_rect - 1.0) <= 1e-9 && std::abs(cg_hann - 0.5) <= 1e-9 &&
                  std::abs(enbw_hann - 1.5) <= 1e-6 && std::abs(psl - dense) <= 0.05;
  return {ok, "enbw(rect)-1=" + num(enbw_rect - 1.0) + "; cg(hann)-0.5=" + num(cg_hann - 0.5) +
                  "; enbw(hann)-1.5=" + num(enbw_hann - 1.5) + "; psl(rect)=" + num(psl) +
                  " dB vs dense scan " + num(dense) + " dB"};
}

// ------------------------------------------------------------------ 7

Outcome causal_phase() {
  const double n = 2.0;
  double mag_gap = 0.0;
  double phase_gap = 0.0;
  for (const Family& f : std::vector<Family>{family::Rectangular{}, family::VonMises{5.0}}) {
    const WindowSpec causal(f, n, Alignment::causal);
    const WindowSpec centered(f, n);
    std::vector<double> w(101);
    std::vector<double> wrapped(101);
    for (int k = 0; k <= 100; ++k) {
      w[k] = (kPi / n) * (0.2 * k - 9.9);
      // Direct quadrature of the shifted window over [0, N].
      const Complex wc = ctft_quadrature(causal, w[k], 1e-13);
      const Complex w0 = ctft_quadrature(centered, w[k], 1e-13);
      mag_gap = std::max(mag_gap, std::abs(std::abs(wc) - std::abs(w0)));
      wrapped[k] = std::arg(wc * std::conj(w0));
    }
    // Unwrap outward from the sample nearest w = 0.
    std::vector<double> phase(wrapped);
    const int mid = 50;
    for (int k = mid + 1; k <= 100; ++k) {
      phase[k] = phase[k - 1] + std::remainder(wrapped[k] - phase[k - 1], 2.0 * kPi);
    }
    for (int k = mid - 1; k >= 0; --k) {
      phase[k] = phase[k + 1] + std::remainder(wrapped[k] - phase[k + 1], 2.0 * kPi);
    }
    for (int k = 0; k <= 100; ++k) {
      phase_gap = std::max(phase_gap, std::abs(phase[k] + w[k] * n / 2.0));
    }
  }
  return {mag_gap <= 1e-12 && phase_gap <= 1e-9,
          "|mag| gap=" + num(mag_gap) + " <= 1e-12; phase gap=" + num(phase_gap) + " <= 1e-9"};
}

// ------------------------------------------------------------------ 8

Outcome taper_tradeoff() {
  std::vector<double> width;
  std::vector<double> side;
  for (double beta : {0.0, 1.0, 3.0, 5.0}) {
    const WindowSpec s(family::VonMises{beta}, 2.0);
    width.push_back(mainlobe_width(s, -3.0));
    side.push_back(peak_sidelobe(s));
  }
  bool ok = true;
  std::string detail = "width/psl:";
  for (std::size_t i = 0; i < width.size(); ++i) {
    if (i > 0) {
      ok = ok && width[i] >= width[i - 1] && side[i] <= side[i - 1];
    }
    detail += " " + num(width[i]) + "/" + num(side[i]);
  }
  return {ok, detail};
}

// ------------------------------------------------------------------ 9

Outcome cli_determinism() {
  const std::string cli_path = VMTAPER_CLI_PATH;
  const std::vector<std::string> invocations = {
      "window --family von-mises --beta 5 --samples 257",
      "window --family kaiser --beta 3 --align causal --format json",
      "spectrum --family von-mises --beta 5 --route oracle",
      "spectrum --family von-mises --beta 3 --route series --align causal",
      "spectrum --family hann --format json --points 64",
      "metrics",
      "verify --subject vm_spectrum_series_vs_oracle --beta 3",
      "verify --subject vm_cdf_paper_vs_numeric",
  };
  int mismatches = 0;
  for (const auto& args : invocations) {
    const auto a = cli::run(cli_path, args);
    const auto b = cli::run(cli_path, args);
    if (a.exit_code != 0 || a.exit_code != b.exit_code || a.out != b.out || a.out.empty()) {
      ++mismatches;
    }
  }

  namespace fs = std::filesystem;
  const fs::path root = cli::scratch_dir();
  const std::vector<std::string> files = {"fig1.csv", "fig4a.csv", "fig4b.csv", "fig5.csv",
                                          "figures.gp"};
  std::vector<std::string> first;
  for (const char* run : {"a", "b"}) {
    const fs::path dir = root / run;
    const auto r = cli::run(cli_path, "figures --out-dir '" + dir.string() + "'");
    if (r.exit_code != 0) {
      ++mismatches;
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
      const std::string content = cli::slurp(dir / files[i]);
      if (first.size() < files.size()) {
        first.push_back(content);
      } else if (content != first[i] || content.empty()) {
        ++mismatches;
      }
    }
  }

  const auto fig1 = cli::parse_csv(first.at(0));
  double worst_area = 0.0;
  for (std::size_t col = 1; col <= 3; ++col) {
    double area = 0.0;
    for (std::size_t i = 2; i < fig1.size(); ++i) {
      const double x0 = std::stod(fig1[i - 1][0]);
      const double x1 = std::stod(fig1[i][0]);
      area += 0.5 * (std::stod(fig1[i - 1][col]) + std::stod(fig1[i][col])) * (x1 - x0);
    }
    worst_area = std::max(worst_area, std::abs(area - 1.0));
  }
  return {mismatches == 0 && worst_area <= 1e-3,
          std::to_string(invocations.size() + 1) + " subcommand invocations run twice, " +
              std::to_string(mismatches) + " differences; fig1 trapezoid |area-1|=" +
              num(worst_area) + " <= 1e-3"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"series-oracle equivalence", series_oracle_equivalence},
      {"closed-form discrepancy", closed_form_discrepancy},
      {"cardinal reconstruction", cardinal_exactness},
      {"limit laws", limit_laws},
      {"special functions", special_functions},
      {"classical metrics", classical_metrics},
      {"causal phase", causal_phase},
      {"taper trade-off", taper_tradeoff},
      {"CLI determinism and figure data", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::printf("%s [%zu] %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed;
}
