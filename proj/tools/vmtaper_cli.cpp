// vmtaper command-line interface. Talks to the library only through the C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vmtaper/vmtaper.h"

namespace {

constexpr double kPi = std::numbers::pi;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown for anything the user must fix on the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when the library reports an error or a threshold fails.
struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(vmt_status status, const std::string& context) {
  if (status != VMT_OK) {
    throw RuntimeFailure(context + ": " + vmt_status_name(status) + ": " + vmt_last_error());
  }
}

std::string fmt(double v) {
  if (v == 0.0) {
    v = 0.0;  // no "-0" in output
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct WindowDeleter {
  void operator()(vmt_window* w) const { vmt_window_destroy(w); }
};
using WindowHandle = std::unique_ptr<vmt_window, WindowDeleter>;

struct ReportDeleter {
  void operator()(vmt_report* r) const { vmt_report_destroy(r); }
};
using ReportHandle = std::unique_ptr<vmt_report, ReportDeleter>;

// ---------------------------------------------------------------- windows

struct FamilyChoice {
  vmt_family family;
  double parameter;
  std::string label;  // CLI spelling
};

// Options shared by `window` and `spectrum`.
struct WindowFlags {
  std::string family;
  std::optional<double> alpha;
  std::optional<double> beta;
  double length = 2.0;
  std::string align = "centered";
};

std::string canonical_family(const std::string& name) {
  if (name == "rect" || name == "rectangular") return "rect";
  if (name == "hann" || name == "hanning") return "hann";
  if (name == "hamming") return "hamming";
  if (name == "general-cosine" || name == "generalized-cosine") return "general-cosine";
  if (name == "cosine-tip") return "cosine-tip";
  if (name == "kaiser") return "kaiser";
  if (name == "von-mises" || name == "vonmises" || name == "circular") return "von-mises";
  throw UsageError("--family: unknown window family '" + name + "'");
}

FamilyChoice resolve_family(const WindowFlags& f) {
  const std::string name = canonical_family(f.family);
  const bool takes_alpha = name == "general-cosine";
  const bool takes_beta = name == "kaiser" || name == "von-mises";
  if (f.alpha && !takes_alpha) {
    throw UsageError("--alpha is not accepted by --family " + name);
  }
  if (f.beta && !takes_beta) {
    throw UsageError("--beta is not accepted by --family " + name);
  }
  if (takes_alpha && !f.alpha) {
    throw UsageError("--alpha is required by --family " + name);
  }
  if (takes_beta && !f.beta) {
    throw UsageError("--beta is required by --family " + name);
  }
  if (f.alpha && !(*f.alpha >= 0.0 && *f.alpha <= 1.0)) {
    throw UsageError("--alpha must lie in [0, 1]");
  }
  if (f.beta && !(*f.beta >= 0.0 && std::isfinite(*f.beta))) {
    throw UsageError("--beta must be finite and nonnegative");
  }
  if (name == "rect") return {VMT_FAMILY_RECTANGULAR, 0.0, name};
  if (name == "hann") return {VMT_FAMILY_GENERAL_COSINE, 0.5, name};
  if (name == "hamming") return {VMT_FAMILY_GENERAL_COSINE, 0.54, name};
  if (name == "general-cosine") return {VMT_FAMILY_GENERAL_COSINE, *f.alpha, name};
  if (name == "cosine-tip") return {VMT_FAMILY_COSINE_TIP, 0.0, name};
  if (name == "kaiser") return {VMT_FAMILY_KAISER, *f.beta, name};
  return {VMT_FAMILY_VON_MISES, *f.beta, name};
}

vmt_alignment resolve_alignment(const std::string& align) {
  if (align == "centered") return VMT_CENTERED;
  if (align == "causal") return VMT_CAUSAL;
  throw UsageError("--align must be 'centered' or 'causal'");
}

WindowHandle make_window(vmt_family family, double parameter, double length, vmt_alignment align) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw UsageError("--len must be finite and positive");
  }
  vmt_window* raw = nullptr;
  check(vmt_window_create(family, parameter, length, align, &raw), "window");
  return WindowHandle(raw);
}

void add_window_flags(CLI::App* cmd, WindowFlags& f) {
  cmd->add_option("--family", f.family,
                  "rect | hann | hamming | general-cosine | cosine-tip | kaiser | von-mises")
      ->required();
  cmd->add_option("--alpha", f.alpha, "general-cosine shape alpha in [0, 1]");
  cmd->add_option("--beta", f.beta, "kaiser / von-mises shape beta >= 0");
  cmd->add_option("--len", f.length, "support length N in seconds")->capture_default_str();
  cmd->add_option("--align", f.align, "centered | causal")->capture_default_str();
}

// ---------------------------------------------------------------- output

struct OutputFlags {
  std::string format = "csv";
  std::string out;
};

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--format", o.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output file (default: standard output)");
}

void emit(const OutputFlags& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    throw RuntimeFailure("cannot open '" + o.out + "' for writing");
  }
  file << text;
  if (!file) {
    throw RuntimeFailure("failed writing '" + o.out + "'");
  }
}

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- window

struct WindowCommand {
  WindowFlags win;
  OutputFlags out;
  std::size_t samples = 101;
};

int run_window(const WindowCommand& c) {
  const FamilyChoice fam = resolve_family(c.win);
  if (c.samples < 2) {
    throw UsageError("--samples must be at least 2");
  }
  const WindowHandle w = make_window(fam.family, fam.parameter, c.win.length,
                                     resolve_alignment(c.win.align));
  std::vector<double> t(c.samples), v(c.samples);
  check(vmt_window_sample(w.get(), c.samples, t.data(), v.data()), "window");
  if (c.out.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
      j.push_back({t[i], v[i]});
    }
    emit(c.out, dump_json(j));
    return 0;
  }
  std::string text = "t,w\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    text += fmt(t[i]) + "," + fmt(v[i]) + "\n";
  }
  emit(c.out, text);
  return 0;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumCommand {
  WindowFlags win;
  OutputFlags out;
  std::string route = "oracle";
  std::vector<double> w;
  std::optional<double> w_min;
  std::optional<double> w_max;
  std::size_t points = 1024;
  double abs_tol = 1e-11;
  double series_tol = 1e-14;
  unsigned threads = 0;
};

vmt_route resolve_route(const std::string& route, const FamilyChoice& fam) {
  vmt_route r = VMT_ROUTE_ORACLE;
  if (route == "series") {
    r = VMT_ROUTE_SERIES;
  } else if (route == "closed") {
    r = VMT_ROUTE_CLOSED;
  } else if (route != "oracle") {
    throw UsageError("--route must be oracle, series or closed");
  }
  if (r != VMT_ROUTE_ORACLE && fam.family != VMT_FAMILY_VON_MISES) {
    throw UsageError("--route " + route + " is only available for --family von-mises");
  }
  return r;
}

int run_spectrum(const SpectrumCommand& c) {
  const FamilyChoice fam = resolve_family(c.win);
  const vmt_route route = resolve_route(c.route, fam);
  const WindowHandle win = make_window(fam.family, fam.parameter, c.win.length,
                                       resolve_alignment(c.win.align));
  std::vector<double> grid = c.w;
  if (grid.empty()) {
    if (c.points < 2) {
      throw UsageError("--points must be at least 2");
    }
    const double lo = c.w_min.value_or(-40.0 * kPi / c.win.length);
    const double hi = c.w_max.value_or(40.0 * kPi / c.win.length);
    if (!(hi > lo)) {
      throw UsageError("--w-max must exceed --w-min");
    }
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double last = static_cast<double>(c.points - 1);
    for (std::size_t i = 0; i < c.points; ++i) {
      grid.push_back(mid + half * ((2.0 * static_cast<double>(i) - last) / last));
    }
    grid.front() = lo;
    grid.back() = hi;
  } else if (c.w_min || c.w_max) {
    throw UsageError("--w cannot be combined with --w-min/--w-max");
  }
  std::sort(grid.begin(), grid.end());

  vmt_spectrum_options opts;
  vmt_spectrum_options_default(&opts);
  opts.abs_tol = c.abs_tol;
  opts.series_tol = c.series_tol;
  opts.threads = c.threads;
  std::vector<double> re(grid.size()), im(grid.size());
  check(vmt_spectrum_grid(win.get(), route, grid.data(), grid.size(), &opts, re.data(), im.data()),
        "spectrum");
  double re0 = 0.0, im0 = 0.0;
  check(vmt_spectrum(win.get(), route, 0.0, &opts, &re0, &im0), "spectrum");
  const double ref = std::hypot(re0, im0);
  const bool db_defined = ref > 1e-12 * c.win.length;
  if (!db_defined) {
    std::cerr << "warning: |W(0)| vanishes for --family " << fam.label
              << "; mag_db left empty\n";
  }
  auto mag_db = [&](std::size_t i) -> std::optional<double> {
    if (!db_defined) return std::nullopt;
    return 20.0 * std::log10(std::hypot(re[i], im[i]) / ref);
  };

  if (c.out.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      nlohmann::ordered_json row = {{"w", grid[i]}, {"re", re[i]}, {"im", im[i]}};
      const auto db = mag_db(i);
      if (db && std::isfinite(*db)) {
        row["mag_db"] = *db;
      } else {
        row["mag_db"] = nullptr;
      }
      j.push_back(row);
    }
    emit(c.out, dump_json(j));
    return 0;
  }
  std::string text = "w,re,im,mag_db\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto db = mag_db(i);
    text += fmt(grid[i]) + "," + fmt(re[i]) + "," + fmt(im[i]) + ",";
    if (db) {
      text += std::isfinite(*db) ? fmt(*db) : std::string("-inf");
    }
    text += "\n";
  }
  emit(c.out, text);
  return 0;
}

// ---------------------------------------------------------------- metrics

struct MetricsCommand {
  std::vector<std::string> windows;
  double length = 2.0;
  double band_bins = 40.0;
  int resolution = 64;
  OutputFlags out;
};

// "family[:param]", e.g. "von-mises:5" or "general-cosine:0.3".
FamilyChoice parse_window_spec(const std::string& text) {
  WindowFlags f;
  const auto colon = text.find(':');
  f.family = text.substr(0, colon);
  const std::string name = canonical_family(f.family);
  if (colon != std::string::npos) {
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--window: bad parameter in '" + text + "'");
    }
    (name == "general-cosine" ? f.alpha : f.beta) = value;
  }
  try {
    return resolve_family(f);
  } catch (const UsageError& e) {
    throw UsageError("--window '" + text + "': " + e.what());
  }
}

int run_metrics(const MetricsCommand& c) {
  std::vector<std::string> specs = c.windows;
  if (specs.empty()) {
    specs = {"rect",     "hann",        "hamming",     "cosine-tip",
             "kaiser:5", "von-mises:1", "von-mises:3", "von-mises:5"};
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::string text = "family,param,coherent_gain,enbw_bins,mainlobe_3db_bins,peak_sidelobe_db\n";
  for (const auto& s : specs) {
    const FamilyChoice fam = parse_window_spec(s);
    const WindowHandle win = make_window(fam.family, fam.parameter, c.length, VMT_CENTERED);
    vmt_metrics m{};
    check(vmt_window_metrics(win.get(), c.band_bins, c.resolution, &m), "metrics " + s);
    const bool has_param = fam.family != VMT_FAMILY_RECTANGULAR && fam.family != VMT_FAMILY_COSINE_TIP;
    auto cell = [&](unsigned bit, double v, const char* what) -> std::optional<double> {
      if (m.valid & bit) return v;
      std::cerr << "warning: " << what << " undefined for " << s << "\n";
      return std::nullopt;
    };
    const auto enbw = cell(VMT_METRIC_ENBW, m.enbw_bins, "enbw_bins");
    const auto width = cell(VMT_METRIC_MAINLOBE, m.mainlobe_3db_bins, "mainlobe_3db_bins");
    const auto psl = cell(VMT_METRIC_SIDELOBE, m.peak_sidelobe_db, "peak_sidelobe_db");
    auto csv = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
    text += fam.label + "," + (has_param ? fmt(fam.parameter) : std::string()) + "," +
            fmt(m.coherent_gain) + "," + csv(enbw) + "," + csv(width) + "," + csv(psl) + "\n";
    auto js = [](const std::optional<double>& v) {
      return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    rows.push_back({{"family", fam.label},
                    {"param", has_param ? nlohmann::ordered_json(fam.parameter)
                                        : nlohmann::ordered_json(nullptr)},
                    {"coherent_gain", m.coherent_gain},
                    {"enbw_bins", js(enbw)},
                    {"mainlobe_3db_bins", js(width)},
                    {"peak_sidelobe_db", js(psl)},
                    {"first_null_bins", (m.valid & VMT_METRIC_FIRST_NULL)
                                            ? nlohmann::ordered_json(m.first_null_bins)
                                            : nlohmann::ordered_json(nullptr)}});
  }
  emit(c.out, c.out.format == "json" ? dump_json(rows) : text);
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyCommand {
  std::string subject;
  std::optional<double> beta;
  std::optional<double> length;
  std::optional<double> mu;
  std::optional<double> kappa;
  std::optional<double> w_s;
  std::optional<std::size_t> samples;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::optional<std::size_t> points;
  std::optional<double> abs_tol;
  std::optional<double> series_tol;
  unsigned threads = 0;
  std::string out;
};

int run_verify(const VerifyCommand& c) {
  vmt_subject subject{};
  if (vmt_subject_from_name(c.subject.c_str(), &subject) != VMT_OK) {
    throw UsageError(std::string("--subject: ") + vmt_last_error());
  }
  vmt_verify_params p;
  vmt_verify_params_default(&p);
  if (c.beta) p.beta = *c.beta;
  if (c.length) p.length = *c.length;
  if (c.mu) p.mu = *c.mu;
  if (c.kappa) p.kappa = *c.kappa;
  if (c.w_s) p.sample_rate = *c.w_s;
  if (c.samples) p.sample_count = *c.samples;
  if (c.abs_tol) p.abs_tol = *c.abs_tol;
  if (c.series_tol) p.series_tol = *c.series_tol;
  p.threads = c.threads;

  std::vector<double> grid;
  if (c.grid_min || c.grid_max || c.points) {
    if (!c.grid_min || !c.grid_max) {
      throw UsageError("--grid-min and --grid-max must be given together");
    }
    const std::size_t n = c.points.value_or(201);
    if (n < 1 || !(*c.grid_max >= *c.grid_min)) {
      throw UsageError("--points must be positive and --grid-max >= --grid-min");
    }
    for (std::size_t i = 0; i < n; ++i) {
      grid.push_back(n == 1 ? *c.grid_min
                            : *c.grid_min + (*c.grid_max - *c.grid_min) *
                                                (static_cast<double>(i) / static_cast<double>(n - 1)));
    }
  }
  vmt_report* raw = nullptr;
  const vmt_status st = vmt_verify_run(subject, &p, grid.empty() ? nullptr : grid.data(),
                                       grid.size(), &raw);
  if (st == VMT_ERR_DOMAIN) {
    throw UsageError(vmt_last_error());
  }
  check(st, "verify");
  const ReportHandle report(raw);
  OutputFlags o;
  o.out = c.out;
  emit(o, std::string(vmt_report_json(report.get())) + "\n");
  return vmt_report_outcome(report.get()) == 0 ? kExitFailure : 0;
}

// ---------------------------------------------------------------- figures

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns) {
  std::string text;
  for (std::size_t i = 0; i < header.size(); ++i) {
    text += (i ? "," : "") + header[i];
  }
  text += "\n";
  for (std::size_t r = 0; r < columns.front().size(); ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      text += (k ? "," : "") + fmt(columns[k][r]);
    }
    text += "\n";
  }
  return text;
}

std::vector<double> uniform(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
  }
  v.back() = hi;
  return v;
}

std::vector<double> window_column(vmt_family family, double param, double length,
                                  const std::vector<double>& t) {
  const WindowHandle w = make_window(family, param, length, VMT_CENTERED);
  std::vector<double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    check(vmt_window_evaluate(w.get(), t[i], &out[i]), "figures");
  }
  return out;
}

constexpr const char* kPlotScript = R"(# gnuplot script for the CSV files in this directory
set datafile separator ','
set key autotitle columnhead
set terminal pngcairo size 900,420

set output 'fig1.png'
set title 'von Mises density, mu = 0'
set xlabel 'x (rad)'
plot for [c=2:4] 'fig1.csv' using 1:c with lines

set output 'fig4a.png'
set title 'Window shapes on [-1, 1]'
set xlabel 't'
plot for [c=2:5] 'fig4a.csv' using 1:c with lines

set output 'fig4b.png'
set title 'Kaiser vs von Mises, beta = 5'
plot for [c=2:3] 'fig4b.csv' using 1:c with lines

set output 'fig5.png'
set title 'cos(pi t / N) and its gated part, N = 2'
plot 'fig5.csv' using 1:2 with lines, '' using 1:3 with lines
)";

int run_figures(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw RuntimeFailure("cannot create '" + dir + "': " + ec.message());
  }
  auto write = [&](const std::string& name, const std::string& text) {
    OutputFlags o;
    o.out = (fs::path(dir) / name).string();
    emit(o, text);
  };

  // Densities for beta (kappa) = 1, 3, 5 on [-pi, pi].
  const auto x = uniform(-kPi, kPi, 1001);
  std::vector<std::vector<double>> fig1{x};
  for (const double kappa : {1.0, 3.0, 5.0}) {
    std::vector<double> col(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      check(vmt_vm_pdf_periodic(0.0, kappa, x[i], &col[i]), "figures");
    }
    fig1.push_back(std::move(col));
  }
  write("fig1.csv", csv_table({"x", "beta1", "beta3", "beta5"}, fig1));

  // Support [-1, 1], i.e. N = 2.
  const auto t = uniform(-1.0, 1.0, 401);
  write("fig4a.csv", csv_table({"t", "hann", "hamming", "vonmises_beta1", "vonmises_beta5"},
                               {t, window_column(VMT_FAMILY_GENERAL_COSINE, 0.5, 2.0, t),
                                window_column(VMT_FAMILY_GENERAL_COSINE, 0.54, 2.0, t),
                                window_column(VMT_FAMILY_VON_MISES, 1.0, 2.0, t),
                                window_column(VMT_FAMILY_VON_MISES, 5.0, 2.0, t)}));
  write("fig4b.csv", csv_table({"t", "kaiser_beta5", "vonmises_beta5"},
                               {t, window_column(VMT_FAMILY_KAISER, 5.0, 2.0, t),
                                window_column(VMT_FAMILY_VON_MISES, 5.0, 2.0, t)}));

  // cos(pi t/N) over [-N, N] alongside the part kept by rect(t/N).
  const double n = 2.0;
  const auto t5 = uniform(-n, n, 801);
  std::vector<double> cosine(t5.size()), gated(t5.size());
  const WindowHandle gate = make_window(VMT_FAMILY_RECTANGULAR, 0.0, n, VMT_CENTERED);
  for (std::size_t i = 0; i < t5.size(); ++i) {
    cosine[i] = std::cos(kPi * t5[i] / n);
    double g = 0.0;
    check(vmt_window_evaluate(gate.get(), t5[i], &g), "figures");
    gated[i] = cosine[i] * g;
  }
  write("fig5.csv", csv_table({"t", "cosine", "gated"}, {t5, cosine, gated}));
  write("figures.gp", kPlotScript);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vmtaper: continuous von Mises and classical windows, spectra and metrics"};
  app.require_subcommand(1);

  WindowCommand window_cmd;
  auto* window = app.add_subcommand("window", "sample a window over its support (CSV t,w)");
  add_window_flags(window, window_cmd.win);
  window->add_option("--samples", window_cmd.samples, "grid points, endpoints included")
      ->capture_default_str();
  add_output_flags(window, window_cmd.out);

  SpectrumCommand spectrum_cmd;
  auto* spectrum = app.add_subcommand(
      "spectrum", "evaluate W(w) (CSV w,re,im,mag_db); default grid 1024 points on [-40pi/N, 40pi/N]");
  add_window_flags(spectrum, spectrum_cmd.win);
  spectrum->add_option("--route", spectrum_cmd.route, "oracle | series | closed")
      ->capture_default_str();
  spectrum->add_option("--w", spectrum_cmd.w, "explicit frequencies (rad/s), repeatable");
  spectrum->add_option("--w-min", spectrum_cmd.w_min, "grid start (default -40 pi/N)");
  spectrum->add_option("--w-max", spectrum_cmd.w_max, "grid end (default 40 pi/N)");
  spectrum->add_option("--points", spectrum_cmd.points, "grid size")->capture_default_str();
  spectrum->add_option("--abs-tol", spectrum_cmd.abs_tol, "quadrature absolute tolerance")
      ->capture_default_str();
  spectrum->add_option("--tol", spectrum_cmd.series_tol, "series Bessel-ratio tolerance")
      ->capture_default_str();
  spectrum->add_option("--threads", spectrum_cmd.threads, "worker threads, 0 = all cores")
      ->capture_default_str();
  add_output_flags(spectrum, spectrum_cmd.out);

  MetricsCommand metrics_cmd;
  auto* metrics = app.add_subcommand("metrics", "figures of merit table");
  metrics->add_option("--window", metrics_cmd.windows,
                      "family[:param], repeatable (default: rect hann hamming cosine-tip "
                      "kaiser:5 von-mises:1 von-mises:3 von-mises:5)");
  metrics->add_option("--len", metrics_cmd.length, "support length N")->capture_default_str();
  metrics->add_option("--band-bins", metrics_cmd.band_bins, "sidelobe search band in bins")
      ->capture_default_str();
  metrics->add_option("--resolution", metrics_cmd.resolution, "scan samples per bin")
      ->capture_default_str();
  add_output_flags(metrics, metrics_cmd.out);

  VerifyCommand verify_cmd;
  auto* verify = app.add_subcommand(
      "verify", "cross-route verification report (JSON); exit 0 pass/report-only, 1 fail, 2 usage");
  verify->add_option("--subject", verify_cmd.subject,
                     "vm_spectrum_closed_vs_oracle | vm_spectrum_series_vs_oracle | "
                     "kaiser_closed_vs_oracle | cardinal_reconstruction_vs_oracle | "
                     "vm_cdf_paper_vs_numeric")
      ->required();
  verify->add_option("--beta", verify_cmd.beta, "window beta (default 5)");
  verify->add_option("--len", verify_cmd.length, "support length N (default 2)");
  verify->add_option("--mu", verify_cmd.mu, "CDF location (default 0)");
  verify->add_option("--kappa", verify_cmd.kappa, "CDF concentration (default 2)");
  verify->add_option("--w-s", verify_cmd.w_s, "cardinal sampling rate (default pi/N)");
  verify->add_option("--samples", verify_cmd.samples, "cardinal samples per sign (default 4096)");
  verify->add_option("--grid-min", verify_cmd.grid_min, "override grid start");
  verify->add_option("--grid-max", verify_cmd.grid_max, "override grid end");
  verify->add_option("--points", verify_cmd.points, "override grid size (default 201)");
  verify->add_option("--abs-tol", verify_cmd.abs_tol, "quadrature absolute tolerance (default 1e-11)");
  verify->add_option("--tol", verify_cmd.series_tol, "series tolerance (default 1e-14)");
  verify->add_option("--threads", verify_cmd.threads, "worker threads, 0 = all cores")
      ->capture_default_str();
  verify->add_option("--out", verify_cmd.out, "output file (default: standard output)");

  std::string figures_dir;
  auto* figures = app.add_subcommand("figures", "write CSV data and a gnuplot script for the figures");
  figures->add_option("--out-dir", figures_dir, "destination directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*window) return run_window(window_cmd);
    if (*spectrum) return run_spectrum(spectrum_cmd);
    if (*metrics) return run_metrics(metrics_cmd);
    if (*verify) return run_verify(verify_cmd);
    if (*figures) return run_figures(figures_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
