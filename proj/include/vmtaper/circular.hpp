#ifndef VMTAPER_CIRCULAR_HPP
#define VMTAPER_CIRCULAR_HPP

#include "vmtaper/series.hpp"

namespace vmtaper {

// Reduces an angle into [-pi, pi). Uses the round-half-to-even remainder, and
// pi itself maps to -pi.
double reduce_angle(double x);

// Location mu (stored reduced to [-pi, pi)) and concentration kappa >= 0.
class VonMisesParams {
 public:
  VonMisesParams(double mu, double kappa);
  double mu() const noexcept { return mu_; }
  double kappa() const noexcept { return kappa_; }

 private:
  double mu_;
  double kappa_;
};

enum class CircularVariant { full_cycle, half_cycle };

// Density exp(beta cos(a x)) / (N I0(beta)) on [0, N], with a = 2 pi / N for
// the full cycle and pi / N for the half cycle.
class ScaledCircularParams {
 public:
  ScaledCircularParams(double beta, double length, CircularVariant variant);
  double beta() const noexcept { return beta_; }
  double length() const noexcept { return length_; }
  CircularVariant variant() const noexcept { return variant_; }
  double angular_factor() const noexcept;

 private:
  double beta_;
  double length_;
  CircularVariant variant_;
};

// Von Mises density on [-pi, pi]; arguments outside are a DomainError.
double vm_pdf(const VonMisesParams& p, double x);

// Periodic extension: vm_pdf at x reduced into [-pi, pi).
double vm_pdf_periodic(const VonMisesParams& p, double x);

// 1 - I1(kappa)/I0(kappa).
double vm_circular_variance(const VonMisesParams& p);

// CDF by adaptive quadrature of the density from -pi to x.
double vm_cdf_numeric(const VonMisesParams& p, double x);

// The Bessel-weighted CDF series
//     (1/2pi) sum_n I_|n|(k)/I0(k) (x - |n|) Sa(n (x - mu)),
// evaluated literally. No claim of correctness; see the verification engine.
double vm_cdf_fourier_series(const VonMisesParams& p, double x, const SeriesTruncation& trunc);

double scaled_pdf(const ScaledCircularParams& p, double x);

}  // namespace vmtaper

#endif  // VMTAPER_CIRCULAR_HPP
