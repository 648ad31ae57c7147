#ifndef VMTAPER_VERIFY_HPP
#define VMTAPER_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vmtaper/series.hpp"
#include "vmtaper/spectra.hpp"

namespace vmtaper {

// Cross-route comparisons. Subjects with a threshold pass or fail; the
// others measure a closed form or series against the quadrature ground
// truth and only document the deviation.
enum class Subject {
  vm_spectrum_closed_vs_oracle,
  vm_spectrum_series_vs_oracle,
  kaiser_closed_vs_oracle,
  cardinal_reconstruction_vs_oracle,
  vm_cdf_paper_vs_numeric,
};

std::string_view subject_name(Subject s);
std::optional<Subject> subject_from_name(std::string_view name);

struct VerificationParams {
  double beta = 5.0;      // window shape (spectrum subjects)
  double length = 2.0;    // N
  double mu = 0.0;        // CDF subject
  double kappa = 2.0;     // CDF subject
  double sample_rate = 0.0;           // cardinal w_s; 0 selects pi / N
  std::size_t sample_count = 4096;    // cardinal samples used for each sign of n
  double abs_tol = kDefaultQuadratureTolerance;
  SeriesTruncation trunc{};
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct WorstPoint {
  double abscissa = 0.0;  // w in rad/s or x in radians
  Complex value{};        // route under test
  Complex reference{};    // ground truth
};

using ParameterValue = std::variant<double, std::string>;

struct VerificationReport {
  Subject subject{};
  std::vector<std::pair<std::string, ParameterValue>> parameters;
  double max_abs_deviation = 0.0;
  double max_rel_deviation = 0.0;
  double rms_deviation = 0.0;
  // Divisor of the relative deviation: |oracle(w=0)| for spectra, 1 for the CDF.
  double reference_scale = 1.0;
  WorstPoint worst_point;
  std::optional<double> pass_threshold;  // empty = report-only
  std::optional<bool> passed;

  std::string to_json() const;
};

// Grid a subject uses when the caller has none: 201 points on
// [-20 pi/N, 20 pi/N] for spectra, the 101 midpoints (n + 1/2) w_s for
// |n| <= 50 for cardinal reconstruction, 101 points on [-pi, pi] for the CDF.
std::vector<double> default_grid(Subject subject, const VerificationParams& params);

std::string_view default_grid_description(Subject subject);

VerificationReport run_verification(Subject subject, const VerificationParams& params,
                                    std::span<const double> grid);

}  // namespace vmtaper

#endif  // VMTAPER_VERIFY_HPP
