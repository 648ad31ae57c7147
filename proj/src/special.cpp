#include "vmtaper/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "vmtaper/errors.hpp"

namespace vmtaper {

namespace {

// Above this argument e^z is not representable.
const double kMaxExpArgument = std::log(std::numeric_limits<double>::max());

// Series path is used up to here; beyond it the scaled variant switches to
// the asymptotic expansion (the series would exceed its term cap).
constexpr double kSeriesLimit = 700.0;

constexpr double kRescaleThreshold = 1e250;
const double kLogRescale = std::log(kRescaleThreshold);

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite");
  }
}

// Ascending series for I_nu(z), multiplied by exp(-shift). Terms are formed
// by the ratio recurrence t_{k+1} = t_k (z/2)^2 / ((k+1)(k+1+nu)) relative to
// t_0 = (z/2)^nu / Gamma(nu+1); the leading factor is carried as a logarithm
// and the partial sum is rescaled when it grows large, so neither under- nor
// overflow occurs inside the loop.
double ascending_series(double nu, double z, double shift) {
  const double half = 0.5 * z;
  const double q = half * half;
  double log_scale = nu * std::log(half) - log_gamma(nu + 1.0) - shift;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kBesselSeriesMaxTerms; ++k) {
    const double ratio = q / ((k + 1.0) * (k + 1.0 + nu));
    term *= ratio;
    sum += term;
    if (sum > kRescaleThreshold) {
      term /= kRescaleThreshold;
      sum /= kRescaleThreshold;
      log_scale += kLogRescale;
    }
    // Ratios decrease monotonically, so the tail is bounded by a geometric
    // series with the current ratio.
    if (ratio < 1.0 && term * ratio <= kBesselSeriesTolerance * sum * (1.0 - ratio)) {
      if (log_scale > -700.0) {
        return sum * std::exp(log_scale);
      }
      return std::exp(std::log(sum) + log_scale);
    }
  }
  throw ConvergenceError("bessel_i: series did not converge within " +
                         std::to_string(kBesselSeriesMaxTerms) + " terms");
}

// Hankel expansion of e^{-z} I_nu(z) for large z.
double asymptotic_scaled(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < kBesselSeriesMaxTerms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * 8.0 * z);
    const double magnitude = std::abs(term);
    if (magnitude <= 1e-16 * std::abs(sum)) {
      return sum / std::sqrt(2.0 * std::numbers::pi * z);
    }
    if (magnitude > previous) {
      break;
    }
    sum += term;
    previous = magnitude;
  }
  throw ConvergenceError("bessel_i_scaled: asymptotic expansion diverges for nu=" +
                         std::to_string(nu) + ", z=" + std::to_string(z));
}

void check_argument(double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("bessel_i: z must be finite and nonnegative");
  }
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError("BesselOrder: nu must be finite and nonnegative");
  }
}

double sa(double x) {
  require_finite(x, "sa");
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double rect(double x) {
  require_finite(x, "rect");
  return std::abs(x) <= 0.5 ? 1.0 : 0.0;
}

double bessel_i(BesselOrder order, double z) {
  check_argument(z);
  const double nu = order.value();
  if (z == 0.0) {
    return nu == 0.0 ? 1.0 : 0.0;
  }
  if (z > kMaxExpArgument) {
    throw RangeError("bessel_i: e^z overflows for z=" + std::to_string(z) +
                     "; use bessel_i_scaled");
  }
  const double value = ascending_series(nu, z, 0.0);
  if (!std::isfinite(value)) {
    throw RangeError("bessel_i: result overflows");
  }
  return value;
}

double bessel_i_scaled(BesselOrder order, double z) {
  check_argument(z);
  const double nu = order.value();
  if (z == 0.0) {
    return nu == 0.0 ? 1.0 : 0.0;
  }
  if (z <= kSeriesLimit) {
    return ascending_series(nu, z, z);
  }
  return asymptotic_scaled(nu, z);
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: x must be finite and positive");
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

}  // namespace vmtaper
