#include "vmtaper/metrics.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "vmtaper/errors.hpp"
#include "vmtaper/quadrature.hpp"
#include "vmtaper/spectra.hpp"

namespace vmtaper {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const MetricsGrid& grid) {
  if (!(grid.band_bins > 0.0) || !std::isfinite(grid.band_bins)) {
    throw DomainError("metrics: band_bins must be positive");
  }
  if (grid.samples_per_bin < 2) {
    throw DomainError("metrics: samples_per_bin must be at least 2");
  }
}

// |W| at a frequency given in bins, on the oracle route.
class OracleMagnitude {
 public:
  explicit OracleMagnitude(const WindowSpec& spec)
      : spec_(spec.centered()), bin_(2.0 * kPi / spec.length()), tol_(1e-12 * spec.length()) {}

  double operator()(double bins) const { return std::abs(ctft_quadrature(spec_, bins * bin_, tol_)); }

 private:
  WindowSpec spec_;
  double bin_;
  double tol_;
};

double reference_magnitude(const OracleMagnitude& mag, const WindowSpec& spec) {
  const double m0 = mag(0.0);
  if (!(m0 > 1e-12 * spec.length())) {
    throw UndefinedMetricError("metrics: |W(0)| vanishes for the " + spec.family_name() +
                               " window");
  }
  return m0;
}

struct Scan {
  double step;
  std::vector<double> values;
};

Scan scan(const OracleMagnitude& mag, const MetricsGrid& grid) {
  const double step = 1.0 / grid.samples_per_bin;
  const auto count = static_cast<std::size_t>(std::floor(grid.band_bins * grid.samples_per_bin)) + 1;
  Scan s{step, std::vector<double>(count)};
  for (std::size_t k = 0; k < count; ++k) {
    s.values[k] = mag(step * static_cast<double>(k));
  }
  return s;
}

std::size_t first_minimum_index(const Scan& s) {
  for (std::size_t k = 1; k + 1 < s.values.size(); ++k) {
    if (s.values[k] < s.values[k - 1] && s.values[k] <= s.values[k + 1]) {
      return k;
    }
  }
  throw UndefinedMetricError("metrics: no spectral null found within the search band");
}

// Golden-section minimisation of |W| on a bracket known to hold a minimum.
double refine_minimum(const OracleMagnitude& mag, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = mag(c);
  double fd = mag(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = mag(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = mag(d);
    }
  }
  return 0.5 * (a + b);
}

double first_null_from(const OracleMagnitude& mag, const Scan& s) {
  const std::size_t k = first_minimum_index(s);
  return refine_minimum(mag, s.step * static_cast<double>(k - 1), s.step * static_cast<double>(k + 1));
}

double peak_sidelobe_from(const OracleMagnitude& mag, const Scan& s, double m0) {
  const std::size_t null = first_minimum_index(s);
  std::size_t best = null + 1;
  for (std::size_t k = null + 1; k < s.values.size(); ++k) {
    if (s.values[k] > s.values[best]) {
      best = k;
    }
  }
  double peak = s.values[best];
  if (best + 1 < s.values.size()) {
    const double l = s.values[best - 1];
    const double c = s.values[best];
    const double r = s.values[best + 1];
    const double denom = l - 2.0 * c + r;
    if (denom < 0.0) {
      const double offset = 0.5 * (l - r) / denom;
      peak = std::max(peak, mag(s.step * (static_cast<double>(best) + offset)));
    }
  }
  return 20.0 * std::log10(peak / m0);
}

}  // namespace

double coherent_gain(const WindowSpec& spec) {
  return ctft_quadrature(spec.centered(), 0.0, 1e-12 * spec.length()).real() / spec.length();
}

double enbw(const WindowSpec& spec) {
  const WindowSpec c = spec.centered();
  quadrature::Options opts;
  opts.abs_tol = 1e-13 * spec.length();
  opts.max_panel_width = spec.length() / 8.0;
  const double area = quadrature::integrate<double>([&c](double t) { return evaluate(c, t); },
                                                    c.support_begin(), c.support_end(), opts);
  if (std::abs(area) <= 1e-12 * spec.length()) {
    throw UndefinedMetricError("enbw: window integrates to zero for the " + spec.family_name() +
                               " window");
  }
  const double energy = quadrature::integrate<double>(
      [&c](double t) {
        const double v = evaluate(c, t);
        return v * v;
      },
      c.support_begin(), c.support_end(), opts);
  return spec.length() * energy / (area * area);
}

double first_null(const WindowSpec& spec, const MetricsGrid& grid) {
  validate(grid);
  const OracleMagnitude mag(spec);
  return first_null_from(mag, scan(mag, grid));
}

double peak_sidelobe(const WindowSpec& spec, const MetricsGrid& grid) {
  validate(grid);
  const OracleMagnitude mag(spec);
  const double m0 = reference_magnitude(mag, spec);
  return peak_sidelobe_from(mag, scan(mag, grid), m0);
}

double mainlobe_width(const WindowSpec& spec, double level_db, const MetricsGrid& grid) {
  validate(grid);
  if (!(level_db < 0.0) || !std::isfinite(level_db)) {
    throw DomainError("mainlobe_width: level_db must be negative");
  }
  const OracleMagnitude mag(spec);
  const double m0 = reference_magnitude(mag, spec);
  const double level = m0 * std::pow(10.0, level_db / 20.0);
  const double step = 1.0 / grid.samples_per_bin;
  const auto count = static_cast<std::size_t>(std::floor(grid.band_bins * grid.samples_per_bin));
  for (std::size_t k = 1; k <= count; ++k) {
    const double hi = step * static_cast<double>(k);
    if (mag(hi) < level) {
      double lo = hi - step;
      double up = hi;
      for (int it = 0; it < 200 && up - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + up);
        (mag(mid) < level ? up : lo) = mid;
      }
      return lo + up;  // full width = 2 * crossing
    }
  }
  throw UndefinedMetricError("mainlobe_width: level not reached within the search band");
}

WindowMetrics compute_metrics(const WindowSpec& spec, const MetricsGrid& grid) {
  validate(grid);
  WindowMetrics m;
  m.metrics_grid = grid;
  m.coherent_gain = coherent_gain(spec);
  try {
    m.enbw_bins = enbw(spec);
  } catch (const UndefinedMetricError&) {
  }
  try {
    m.mainlobe_width_3db_bins = mainlobe_width(spec, -3.0, grid);
  } catch (const UndefinedMetricError&) {
  }
  const OracleMagnitude mag(spec);
  const Scan s = scan(mag, grid);
  try {
    m.first_null_bins = first_null_from(mag, s);
  } catch (const UndefinedMetricError&) {
  }
  try {
    m.peak_sidelobe_db = peak_sidelobe_from(mag, s, reference_magnitude(mag, spec));
  } catch (const UndefinedMetricError&) {
  }
  return m;
}

}  // namespace vmtaper
