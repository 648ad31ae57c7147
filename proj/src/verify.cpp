#include "vmtaper/verify.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "json.hpp"

#include "vmtaper/circular.hpp"
#include "vmtaper/errors.hpp"
#include "vmtaper/windows.hpp"

namespace vmtaper {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kSeriesThreshold = 1e-8;
constexpr double kCardinalThreshold = 1e-6;

constexpr std::array<std::pair<Subject, std::string_view>, 5> kSubjectNames = {{
    {Subject::vm_spectrum_closed_vs_oracle, "vm_spectrum_closed_vs_oracle"},
    {Subject::vm_spectrum_series_vs_oracle, "vm_spectrum_series_vs_oracle"},
    {Subject::kaiser_closed_vs_oracle, "kaiser_closed_vs_oracle"},
    {Subject::cardinal_reconstruction_vs_oracle, "cardinal_reconstruction_vs_oracle"},
    {Subject::vm_cdf_paper_vs_numeric, "vm_cdf_paper_vs_numeric"},
}};

[[noreturn]] void rethrow_with_context(Subject subject) {
  const std::string prefix = std::string(subject_name(subject)) + ": ";
  try {
    throw;
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const RangeError& e) {
    throw RangeError(prefix + e.what());
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(prefix + e.what());
  } catch (const AccuracyError& e) {
    throw AccuracyError(prefix + e.what());
  } catch (const UndefinedMetricError& e) {
    throw UndefinedMetricError(prefix + e.what());
  }
}

double sample_rate(const VerificationParams& p) {
  return p.sample_rate > 0.0 ? p.sample_rate : kPi / p.length;
}

RouteOptions route_options(const VerificationParams& p) { return {p.abs_tol, p.trunc}; }

std::vector<Complex> oracle_on(const WindowSpec& spec, std::span<const double> grid,
                               const VerificationParams& p) {
  const auto points = spectrum_on_grid(Route::oracle, spec, grid, route_options(p), p.threads);
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    out.push_back(pt.value);
  }
  return out;
}

void fill_deviations(VerificationReport& r, std::span<const double> grid,
                     std::span<const Complex> tested, std::span<const Complex> reference) {
  double sum_sq = 0.0;
  std::size_t worst = 0;
  double worst_dev = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double dev = std::abs(tested[i] - reference[i]);
    sum_sq += dev * dev;
    if (dev > worst_dev) {
      worst_dev = dev;
      worst = i;
    }
  }
  r.max_abs_deviation = worst_dev;
  r.max_rel_deviation = worst_dev / r.reference_scale;
  r.rms_deviation = std::sqrt(sum_sq / static_cast<double>(grid.size()));
  r.worst_point = {grid[worst], tested[worst], reference[worst]};
  if (r.pass_threshold) {
    r.passed = r.max_rel_deviation <= *r.pass_threshold;
  }
}

void describe_grid(VerificationReport& r, std::span<const double> grid) {
  r.parameters.emplace_back("grid_points", static_cast<double>(grid.size()));
  r.parameters.emplace_back("grid_min", grid.front());
  r.parameters.emplace_back("grid_max", grid.back());
}

VerificationReport spectrum_subject(Subject subject, const VerificationParams& p,
                                    std::span<const double> grid) {
  VerificationReport r;
  r.subject = subject;
  const bool kaiser = subject == Subject::kaiser_closed_vs_oracle;
  const WindowSpec spec = kaiser ? WindowSpec(family::Kaiser{p.beta}, p.length)
                                 : WindowSpec(family::VonMises{p.beta}, p.length);
  r.parameters.emplace_back("family", spec.family_name());
  r.parameters.emplace_back("beta", p.beta);
  r.parameters.emplace_back("N", p.length);
  const Route route = subject == Subject::vm_spectrum_series_vs_oracle ? Route::series : Route::closed;
  if (route == Route::series) {
    r.parameters.emplace_back("series_tol", p.trunc.tol());
    r.pass_threshold = kSeriesThreshold;
  }
  r.parameters.emplace_back("quadrature_abs_tol", p.abs_tol);
  describe_grid(r, grid);

  const auto reference = oracle_on(spec, grid, p);
  std::vector<Complex> tested;
  tested.reserve(grid.size());
  for (const auto& pt : spectrum_on_grid(route, spec, grid, route_options(p), p.threads)) {
    tested.push_back(pt.value);
  }
  r.reference_scale = std::abs(ctft_quadrature(spec, 0.0, p.abs_tol));
  fill_deviations(r, grid, tested, reference);
  return r;
}

VerificationReport cardinal_subject(const VerificationParams& p, std::span<const double> grid) {
  VerificationReport r;
  r.subject = Subject::cardinal_reconstruction_vs_oracle;
  if (p.sample_count < 1) {
    throw DomainError("sample_count must be at least 1");
  }
  const WindowSpec spec(family::VonMises{p.beta}, p.length);
  const double ws = sample_rate(p);
  const double tm = 0.5 * p.length;
  r.parameters.emplace_back("family", spec.family_name());
  r.parameters.emplace_back("beta", p.beta);
  r.parameters.emplace_back("N", p.length);
  r.parameters.emplace_back("w_s", ws);
  r.parameters.emplace_back("t_m", tm);
  r.parameters.emplace_back("sample_count", static_cast<double>(p.sample_count));
  r.parameters.emplace_back("quadrature_abs_tol", p.abs_tol);
  describe_grid(r, grid);
  r.pass_threshold = kCardinalThreshold;

  // Oracle samples at n w_s for 0 <= n <= M; the window is real, so
  // F(-w) = conj(F(w)) supplies the negative indices.
  std::vector<double> sample_grid(p.sample_count + 1);
  for (std::size_t n = 0; n < sample_grid.size(); ++n) {
    sample_grid[n] = static_cast<double>(n) * ws;
  }
  const auto positive = oracle_on(spec, sample_grid, p);
  std::vector<CardinalSample> samples;
  samples.reserve(2 * p.sample_count + 1);
  // Smallest magnitudes first.
  for (std::size_t n = p.sample_count; n >= 1; --n) {
    samples.push_back({static_cast<long>(n), positive[n]});
    samples.push_back({-static_cast<long>(n), std::conj(positive[n])});
  }
  samples.push_back({0, positive[0]});

  std::vector<Complex> tested;
  tested.reserve(grid.size());
  for (const double w : grid) {
    tested.push_back(cardinal_reconstruct(samples, ws, tm, w));
  }
  const auto reference = oracle_on(spec, grid, p);
  r.reference_scale = std::abs(positive[0]);
  fill_deviations(r, grid, tested, reference);
  return r;
}

VerificationReport cdf_subject(const VerificationParams& p, std::span<const double> grid) {
  VerificationReport r;
  r.subject = Subject::vm_cdf_paper_vs_numeric;
  const VonMisesParams vm(p.mu, p.kappa);
  r.parameters.emplace_back("mu", vm.mu());
  r.parameters.emplace_back("kappa", vm.kappa());
  r.parameters.emplace_back("series_tol", p.trunc.tol());
  describe_grid(r, grid);
  std::vector<Complex> tested;
  std::vector<Complex> reference;
  for (const double x : grid) {
    tested.emplace_back(vm_cdf_fourier_series(vm, x, p.trunc));
    reference.emplace_back(vm_cdf_numeric(vm, x));
  }
  r.reference_scale = 1.0;
  fill_deviations(r, grid, tested, reference);
  return r;
}

nlohmann::ordered_json complex_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

}  // namespace

std::string_view subject_name(Subject s) {
  for (const auto& [subject, name] : kSubjectNames) {
    if (subject == s) {
      return name;
    }
  }
  return "unknown";
}

std::optional<Subject> subject_from_name(std::string_view name) {
  for (const auto& [subject, n] : kSubjectNames) {
    if (n == name) {
      return subject;
    }
  }
  return std::nullopt;
}

std::vector<double> default_grid(Subject subject, const VerificationParams& params) {
  switch (subject) {
    case Subject::cardinal_reconstruction_vs_oracle: {
      const double ws = sample_rate(params);
      std::vector<double> grid;
      for (int n = -50; n <= 50; ++n) {
        grid.push_back((n + 0.5) * ws);
      }
      return grid;
    }
    case Subject::vm_cdf_paper_vs_numeric:
      return linear_grid(-kPi, kPi, 101);
    default:
      return linear_grid(-20.0 * kPi / params.length, 20.0 * kPi / params.length, 201);
  }
}

std::string_view default_grid_description(Subject subject) {
  switch (subject) {
    case Subject::cardinal_reconstruction_vs_oracle:
      return "101 midpoints (n + 1/2) w_s, |n| <= 50";
    case Subject::vm_cdf_paper_vs_numeric:
      return "101 points on [-pi, pi]";
    default:
      return "201 points on [-20 pi/N, 20 pi/N]";
  }
}

VerificationReport run_verification(Subject subject, const VerificationParams& params,
                                    std::span<const double> grid) {
  if (grid.empty()) {
    throw DomainError(std::string(subject_name(subject)) + ": grid must not be empty");
  }
  try {
    switch (subject) {
      case Subject::vm_spectrum_closed_vs_oracle:
      case Subject::vm_spectrum_series_vs_oracle:
      case Subject::kaiser_closed_vs_oracle:
        return spectrum_subject(subject, params, grid);
      case Subject::cardinal_reconstruction_vs_oracle:
        return cardinal_subject(params, grid);
      case Subject::vm_cdf_paper_vs_numeric:
        return cdf_subject(params, grid);
    }
  } catch (const Error&) {
    rethrow_with_context(subject);
  }
  throw DomainError("run_verification: unknown subject");
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = std::string(subject_name(subject));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) {
    std::visit([&params, &key](const auto& v) { params[key] = v; }, value);
  }
  j["parameters"] = params;
  j["max_abs_deviation"] = max_abs_deviation;
  j["max_rel_deviation"] = max_rel_deviation;
  j["rms_deviation"] = rms_deviation;
  j["reference_scale"] = reference_scale;
  j["worst_point"] = {{"abscissa", worst_point.abscissa},
                      {"value", complex_json(worst_point.value)},
                      {"reference", complex_json(worst_point.reference)}};
  if (pass_threshold) {
    j["pass_threshold"] = *pass_threshold;
  } else {
    j["pass_threshold"] = "report-only";
  }
  if (passed) {
    j["passed"] = *passed;
  } else {
    j["passed"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace vmtaper
