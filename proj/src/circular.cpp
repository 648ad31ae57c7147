#include "vmtaper/circular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vmtaper/errors.hpp"
#include "vmtaper/quadrature.hpp"
#include "vmtaper/special.hpp"

namespace vmtaper {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_principal(double x, const char* what) {
  if (!std::isfinite(x) || x < -kPi || x > kPi) {
    throw DomainError(std::string(what) + ": x must lie in [-pi, pi]");
  }
}

// e^{-k} I0(k) and I_n(k)/I0(k) work for any kappa without overflow.
double scaled_i0(double kappa) { return bessel_i_scaled(BesselOrder(0.0), kappa); }

double bessel_ratio(int n, double kappa, double i0_scaled) {
  return bessel_i_scaled(BesselOrder(static_cast<double>(n)), kappa) / i0_scaled;
}

}  // namespace

double reduce_angle(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("reduce_angle: angle must be finite");
  }
  double r = std::remainder(x, kTwoPi);
  if (r >= kPi) {
    r -= kTwoPi;
  }
  return r;
}

VonMisesParams::VonMisesParams(double mu, double kappa)
    : mu_(reduce_angle(mu)), kappa_(kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw DomainError("VonMisesParams: kappa must be finite and nonnegative");
  }
}

ScaledCircularParams::ScaledCircularParams(double beta, double length, CircularVariant variant)
    : beta_(beta), length_(length), variant_(variant) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw DomainError("ScaledCircularParams: beta must be finite and nonnegative");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("ScaledCircularParams: N must be finite and positive");
  }
}

double ScaledCircularParams::angular_factor() const noexcept {
  return (variant_ == CircularVariant::full_cycle ? kTwoPi : kPi) / length_;
}

double vm_pdf(const VonMisesParams& p, double x) {
  require_principal(x, "vm_pdf");
  if (p.kappa() == 0.0) {
    return 1.0 / kTwoPi;
  }
  const double k = p.kappa();
  return std::exp(k * (std::cos(x - p.mu()) - 1.0)) / (kTwoPi * scaled_i0(k));
}

double vm_pdf_periodic(const VonMisesParams& p, double x) {
  return vm_pdf(p, reduce_angle(x));
}

double vm_circular_variance(const VonMisesParams& p) {
  if (p.kappa() == 0.0) {
    return 1.0;
  }
  return 1.0 - bessel_ratio(1, p.kappa(), scaled_i0(p.kappa()));
}

double vm_cdf_numeric(const VonMisesParams& p, double x) {
  require_principal(x, "vm_cdf_numeric");
  if (p.kappa() == 0.0) {
    return (x + kPi) / kTwoPi;
  }
  const double k = p.kappa();
  const double norm = kTwoPi * scaled_i0(k);
  quadrature::Options opts;
  opts.abs_tol = 1e-13;
  // Panels narrower than the density's width so the peak is always sampled.
  opts.max_panel_width = std::min(0.25, 1.0 / std::sqrt(k));
  const double mu = p.mu();
  const double value = quadrature::integrate<double>(
      [k, mu, norm](double t) { return std::exp(k * (std::cos(t - mu) - 1.0)) / norm; }, -kPi, x,
      opts);
  return std::clamp(value, 0.0, 1.0);
}

double vm_cdf_fourier_series(const VonMisesParams& p, double x, const SeriesTruncation& trunc) {
  require_principal(x, "vm_cdf_fourier_series");
  const double k = p.kappa();
  double sum = x;  // n = 0: I0/I0 * (x - 0) * Sa(0)
  if (k > 0.0) {
    const double i0 = scaled_i0(k);
    for (int n = 1;; ++n) {
      if (n > trunc.max_terms()) {
        throw ConvergenceError("vm_cdf_fourier_series: tolerance not reached within " +
                               std::to_string(trunc.max_terms()) + " terms");
      }
      const double ratio = bessel_ratio(n, k, i0);
      // Terms for +n and -n coincide.
      sum += 2.0 * ratio * (x - n) * sa(n * (x - p.mu()));
      if (ratio * std::max(1.0, std::abs(x) + n) < trunc.tol()) {
        break;
      }
    }
  }
  return sum / kTwoPi;
}

double scaled_pdf(const ScaledCircularParams& p, double x) {
  if (!std::isfinite(x) || x < 0.0 || x > p.length()) {
    throw DomainError("scaled_pdf: x must lie in [0, N]");
  }
  const double n = p.length();
  if (p.beta() == 0.0) {
    return 1.0 / n;
  }
  const double b = p.beta();
  return std::exp(b * (std::cos(p.angular_factor() * x) - 1.0)) / (n * scaled_i0(b));
}

}  // namespace vmtaper
