#include "vmtaper/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>

#include "vmtaper/errors.hpp"
#include "vmtaper/quadrature.hpp"
#include "vmtaper/special.hpp"

namespace vmtaper {

namespace {

constexpr double kPi = std::numbers::pi;

void require_length(double length, const char* what) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError(std::string(what) + ": N must be finite and positive");
  }
}

void require_beta(double beta, const char* what) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw DomainError(std::string(what) + ": beta must be finite and nonnegative");
  }
}

double scaled_bessel(double order, double z) { return bessel_i_scaled(BesselOrder(order), z); }

}  // namespace

Complex ctft_quadrature(const WindowSpec& spec, double w, double abs_tol) {
  if (!(abs_tol > 0.0)) {
    throw DomainError("ctft_quadrature: abs_tol must be positive");
  }
  if (!std::isfinite(w)) {
    throw DomainError("ctft_quadrature: w must be finite");
  }
  quadrature::Options opts;
  opts.abs_tol = abs_tol;
  opts.max_panel_width = spec.length() / 8.0;
  if (w != 0.0) {
    opts.max_panel_width = std::min(opts.max_panel_width, kPi / std::abs(w));
  }
  auto integrand = [&spec, w](double t) {
    const double v = evaluate(spec, t);
    return Complex(v * std::cos(w * t), -v * std::sin(w * t));
  };
  return quadrature::integrate<Complex>(integrand, spec.support_begin(), spec.support_end(), opts);
}

Complex rect_spectrum(double length, double w) {
  require_length(length, "rect_spectrum");
  return {length * sa(0.5 * w * length), 0.0};
}

Complex cosine_tip_spectrum(double length, double w) {
  require_length(length, "cosine_tip_spectrum");
  const double x = 0.5 * length * w;
  return {0.5 * length * (sa(x - kPi) + sa(x + kPi)), 0.0};
}

Complex general_cosine_spectrum(double alpha, double length, double w) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("general_cosine_spectrum: alpha must lie in [0, 1]");
  }
  return alpha * rect_spectrum(length, w) + (1.0 - alpha) * cosine_tip_spectrum(length, w);
}

Complex kaiser_spectrum(double beta, double length, double w) {
  require_beta(beta, "kaiser_spectrum");
  require_length(length, "kaiser_spectrum");
  const double x = 0.5 * length * w;
  const double d = x * x - beta * beta;
  const double i0 = scaled_bessel(0.0, beta);  // e^{-beta} I0(beta)
  if (d >= 0.0) {
    return {length * sa(std::sqrt(d)) * std::exp(-beta) / i0, 0.0};
  }
  const double y = std::sqrt(-d);
  double ratio = 0.0;  // sinh(y) / (y I0(beta))
  if (y < 1e-4) {
    ratio = (1.0 + y * y / 6.0) * std::exp(-beta) / i0;
  } else {
    ratio = (std::exp(y - beta) - std::exp(-y - beta)) / (2.0 * y * i0);
  }
  return {length * ratio, 0.0};
}

int vonmises_series_terms(double beta, const SeriesTruncation& trunc) {
  require_beta(beta, "vonmises_series_terms");
  const double i0 = scaled_bessel(0.0, beta);
  for (int m = 1; m <= trunc.max_terms(); ++m) {
    if (scaled_bessel(m, beta) / i0 < trunc.tol()) {
      return m;
    }
  }
  throw ConvergenceError("vonmises_spectrum_series: I_M/I_0 < " + std::to_string(trunc.tol()) +
                         " not reached within " + std::to_string(trunc.max_terms()) + " terms");
}

Complex vonmises_spectrum_series(double beta, double length, double w,
                                 const SeriesTruncation& trunc) {
  require_length(length, "vonmises_spectrum_series");
  if (!std::isfinite(w)) {
    throw DomainError("vonmises_spectrum_series: w must be finite");
  }
  const int m = vonmises_series_terms(beta, trunc);
  const double x = 0.5 * length * w;
  // Terms are accumulated from the smallest Bessel weight upward.
  double sum = 0.0;
  for (int n = m; n >= 1; --n) {
    const double shift = 0.5 * kPi * n;
    sum += scaled_bessel(n, beta) * (sa(x - shift) + sa(x + shift));
  }
  sum += scaled_bessel(0.0, beta) * sa(x);
  return {length * sum, 0.0};
}

Complex vonmises_spectrum_closed(double beta, double length, double w) {
  require_beta(beta, "vonmises_spectrum_closed");
  require_length(length, "vonmises_spectrum_closed");
  if (!std::isfinite(w)) {
    throw DomainError("vonmises_spectrum_closed: w must be finite");
  }
  const double order = std::abs(length * w / kPi);
  return {2.0 * length * scaled_bessel(order, beta), 0.0};
}

Complex centered_spectrum(Route route, const WindowSpec& spec, double w, const RouteOptions& opts) {
  const double n = spec.length();
  switch (route) {
    case Route::oracle:
      return ctft_quadrature(spec.centered(), w, opts.abs_tol);
    case Route::series:
      if (const auto* v = std::get_if<family::VonMises>(&spec.family())) {
        return vonmises_spectrum_series(v->beta, n, w, opts.trunc);
      }
      throw DomainError("series route is only defined for the von Mises window");
    case Route::closed:
      break;
  }
  return std::visit(
      [n, w](const auto& f) -> Complex {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Rectangular>) {
          return rect_spectrum(n, w);
        } else if constexpr (std::is_same_v<T, family::GeneralizedCosine>) {
          return general_cosine_spectrum(f.alpha, n, w);
        } else if constexpr (std::is_same_v<T, family::CosineTip>) {
          return cosine_tip_spectrum(n, w);
        } else if constexpr (std::is_same_v<T, family::Kaiser>) {
          return kaiser_spectrum(f.beta, n, w);
        } else {
          return vonmises_spectrum_closed(f.beta, n, w);
        }
      },
      spec.family());
}

Complex causal_spectrum(Route route, const WindowSpec& spec, double w, const RouteOptions& opts) {
  const Complex centered = centered_spectrum(route, spec, w, opts);
  if (spec.alignment() == Alignment::centered) {
    return centered;
  }
  return centered * std::polar(1.0, -w * spec.delay());
}

std::vector<SpectrumPoint> spectrum_on_grid(Route route, const WindowSpec& spec,
                                            std::span<const double> grid,
                                            const RouteOptions& opts, unsigned threads) {
  std::vector<SpectrumPoint> out(grid.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = {grid[i], causal_spectrum(route, spec, grid[i], opts)};
    }
  };
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, grid.size())));
  if (threads <= 1) {
    work(0, grid.size());
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (grid.size() + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
      const std::size_t begin = std::min(grid.size(), k * chunk);
      const std::size_t end = std::min(grid.size(), begin + chunk);
      pool.emplace_back([&, k, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

Complex cardinal_reconstruct(std::span<const CardinalSample> samples, double w_s, double t_m,
                             double w) {
  if (!(w_s > 0.0) || !(t_m > 0.0) || !std::isfinite(w_s) || !std::isfinite(t_m)) {
    throw DomainError("cardinal_reconstruct: w_s and t_m must be finite and positive");
  }
  // Critical rate w_s = pi/t_m is allowed up to rounding.
  if (w_s * t_m > kPi * (1.0 + 1e-12)) {
    throw DomainError("cardinal_reconstruct: sampling rate w_s exceeds pi / t_m");
  }
  if (!std::isfinite(w)) {
    throw DomainError("cardinal_reconstruct: w must be finite");
  }
  Complex sum{};
  for (const auto& s : samples) {
    sum += s.value * sa(w * t_m - static_cast<double>(s.index) * t_m * w_s);
  }
  return (w_s * t_m / kPi) * sum;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  if (count < 2) {
    throw DomainError("linear_grid: count must be at least 2");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw DomainError("linear_grid: require finite lo < hi");
  }
  // Offsets from the midpoint keep symmetric grids exactly symmetric, with
  // an exact zero in the middle of an odd-sized grid over [-a, a].
  std::vector<double> grid(count);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = mid + half * ((2.0 * static_cast<double>(i) - last) / last);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace vmtaper
