#ifndef VMTAPER_METRICS_HPP
#define VMTAPER_METRICS_HPP

#include <optional>

#include "vmtaper/windows.hpp"

namespace vmtaper {

// Search band and resolution for the frequency scans. Frequencies are in
// bins of 2 pi / N rad/s.
struct MetricsGrid {
  double band_bins = 40.0;
  int samples_per_bin = 64;
};

struct WindowMetrics {
  double coherent_gain = 0.0;
  std::optional<double> enbw_bins;
  std::optional<double> mainlobe_width_3db_bins;
  std::optional<double> first_null_bins;
  std::optional<double> peak_sidelobe_db;
  MetricsGrid metrics_grid;
};

// All metrics use the quadrature route on the centered window.

// W(0) / N.
double coherent_gain(const WindowSpec& spec);

// N * int w^2 / (int w)^2. UndefinedMetricError when int w vanishes.
double enbw(const WindowSpec& spec);

// Location of the first local minimum of |W| above w = 0, in bins.
double first_null(const WindowSpec& spec, const MetricsGrid& grid = {});

// 20 log10(max |W| beyond the first null / |W(0)|), with parabolic peak
// refinement.
double peak_sidelobe(const WindowSpec& spec, const MetricsGrid& grid = {});

// Full width in bins at which |W| first falls level_db (< 0) below |W(0)|.
double mainlobe_width(const WindowSpec& spec, double level_db, const MetricsGrid& grid = {});

// Every metric; undefined ones are left empty instead of throwing.
WindowMetrics compute_metrics(const WindowSpec& spec, const MetricsGrid& grid = {});

}  // namespace vmtaper

#endif  // VMTAPER_METRICS_HPP
