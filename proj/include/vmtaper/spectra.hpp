#ifndef VMTAPER_SPECTRA_HPP
#define VMTAPER_SPECTRA_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "vmtaper/series.hpp"
#include "vmtaper/windows.hpp"

namespace vmtaper {

using Complex = std::complex<double>;

struct SpectrumPoint {
  double w;  // rad/s
  Complex value;
};

inline constexpr double kDefaultQuadratureTolerance = 1e-11;

// W(w) = integral of window(t) e^{-jwt} over the exact support, by adaptive
// Gauss-Kronrod with panels no wider than min(N/8, pi/|w|).
Complex ctft_quadrature(const WindowSpec& spec, double w,
                        double abs_tol = kDefaultQuadratureTolerance);

// N Sa(wN/2).
Complex rect_spectrum(double length, double w);

// (N/2) Sa(Nw/2 - pi) + (N/2) Sa(Nw/2 + pi).
Complex cosine_tip_spectrum(double length, double w);

// alpha rect + (1 - alpha) cosine tip, by linearity.
Complex general_cosine_spectrum(double alpha, double length, double w);

// (N / I0(beta)) Sa(sqrt((Nw/2)^2 - beta^2)); inside the main lobe the
// argument is imaginary and Sa(jy) = sinh(y)/y.
Complex kaiser_spectrum(double beta, double length, double w);

// N e^{-beta} sum_n I_|n|(beta) Sa(Nw/2 - n pi/2) over |n| <= M, where M is
// the first index with I_M(beta)/I0(beta) < trunc.tol().
Complex vonmises_spectrum_series(double beta, double length, double w,
                                 const SeriesTruncation& trunc = {});

// Number of series indices M the truncation rule selects for beta.
int vonmises_series_terms(double beta, const SeriesTruncation& trunc = {});

// The closed form 2N I_{|Nw/pi|}(beta) e^{-beta}. Not exact; the gap
// to the oracle is measured by the verification engine.
Complex vonmises_spectrum_closed(double beta, double length, double w);

enum class Route { oracle, series, closed };

struct RouteOptions {
  double abs_tol = kDefaultQuadratureTolerance;
  SeriesTruncation trunc{};
};

// Spectrum of the centered version of spec along the given route. The
// closed route exists for every family; the series route only for von Mises.
Complex centered_spectrum(Route route, const WindowSpec& spec, double w,
                          const RouteOptions& opts = {});

// Centered spectrum times the time-shift factor e^{-jwN/2}; the centered
// spectrum itself for centered specs.
Complex causal_spectrum(Route route, const WindowSpec& spec, double w,
                        const RouteOptions& opts = {});

// Evaluates causal_spectrum at every grid frequency. Points are computed
// independently, optionally on several threads; the result order follows
// the grid. threads == 0 picks the hardware concurrency.
std::vector<SpectrumPoint> spectrum_on_grid(Route route, const WindowSpec& spec,
                                            std::span<const double> grid,
                                            const RouteOptions& opts = {},
                                            unsigned threads = 1);

struct CardinalSample {
  long index;
  Complex value;  // F(index * w_s)
};

// (w_s t_m / pi) sum_n F(n w_s) Sa(w t_m - n t_m w_s). Requires
// w_s <= pi / t_m; the caller supplies as many samples as its accuracy needs.
Complex cardinal_reconstruct(std::span<const CardinalSample> samples, double w_s, double t_m,
                             double w);

// Uniform grid of count >= 2 points on [lo, hi], endpoints included.
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

}  // namespace vmtaper

#endif  // VMTAPER_SPECTRA_HPP
