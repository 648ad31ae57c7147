#ifndef VMTAPER_QUADRATURE_HPP
#define VMTAPER_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "vmtaper/errors.hpp"

namespace vmtaper::quadrature {

struct Options {
  double abs_tol = 1e-11;
  // Upper bound on the width of the initial panels. Oscillatory integrands
  // pass pi/|w| here so every panel holds at most half a period.
  double max_panel_width = std::numeric_limits<double>::infinity();
  std::size_t max_intervals = 1'000'000;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss-Legendre rule (QUADPACK
// constants). Nodes are listed from the outside in; index 7 is the centre.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <typename T>
struct PanelEstimate {
  T value;
  double error;
};

template <typename T, typename F>
PanelEstimate<T> gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(centre);
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const T pair = f(centre - dx) + f(centre + dx);
    kronrod += pair * kKronrodWeights[i];
    if (i % 2 == 1) {
      gauss += pair * kGaussWeights[i / 2];
    }
  }
  return {kronrod * half, magnitude(T((kronrod - gauss) * half))};
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. The interval is cut
// into equal panels no wider than opts.max_panel_width; each panel receives a
// share of opts.abs_tol proportional to its width and is bisected until its
// Kronrod-Gauss difference meets that share. Throws AccuracyError once more
// than opts.max_intervals panels have been processed.
template <typename T, typename F>
T integrate(F&& f, double a, double b, const Options& opts = {}) {
  if (!(opts.abs_tol > 0.0)) {
    throw DomainError("integrate: abs_tol must be positive");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: limits must be finite");
  }
  if (a == b) {
    return T{};
  }
  const double length = b - a;
  std::size_t panels = 1;
  if (std::isfinite(opts.max_panel_width) && opts.max_panel_width > 0.0) {
    panels = static_cast<std::size_t>(std::ceil(std::abs(length) / opts.max_panel_width));
    if (panels == 0) {
      panels = 1;
    }
  }
  if (panels > opts.max_intervals) {
    throw AccuracyError("integrate: panel count " + std::to_string(panels) +
                        " exceeds subdivision budget");
  }

  struct Pending {
    double lo;
    double hi;
    double tol;
  };
  std::vector<Pending> stack;
  std::size_t processed = 0;
  T total{};
  const double step = length / static_cast<double>(panels);
  const double panel_tol = opts.abs_tol / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + step * static_cast<double>(p);
    const double hi = (p + 1 == panels) ? b : a + step * static_cast<double>(p + 1);
    stack.push_back({lo, hi, panel_tol});
    while (!stack.empty()) {
      const Pending cur = stack.back();
      stack.pop_back();
      if (++processed > opts.max_intervals) {
        throw AccuracyError("integrate: subdivision budget of " +
                            std::to_string(opts.max_intervals) + " intervals exhausted");
      }
      const auto est = detail::gauss_kronrod_15<T>(f, cur.lo, cur.hi);
      const double mid = 0.5 * (cur.lo + cur.hi);
      const bool unsplittable = !(mid > std::min(cur.lo, cur.hi) && mid < std::max(cur.lo, cur.hi));
      if (est.error <= cur.tol || unsplittable) {
        total += est.value;
        continue;
      }
      stack.push_back({mid, cur.hi, 0.5 * cur.tol});
      stack.push_back({cur.lo, mid, 0.5 * cur.tol});
    }
  }
  return total;
}

}  // namespace vmtaper::quadrature

#endif  // VMTAPER_QUADRATURE_HPP
