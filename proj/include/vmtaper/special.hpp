#ifndef VMTAPER_SPECIAL_HPP
#define VMTAPER_SPECIAL_HPP

namespace vmtaper {

// Order of a modified Bessel function of the first kind. Real and
// nonnegative; construction rejects anything else.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double value() const noexcept { return nu_; }

 private:
  double nu_;
};

// Relative truncation tolerance and term cap of the ascending Bessel series.
inline constexpr double kBesselSeriesTolerance = 1e-13;
inline constexpr int kBesselSeriesMaxTerms = 500;

// sin(x)/x with Sa(0) = 1. Throws DomainError for non-finite x.
double sa(double x);

// Gate function: 1 for |x| <= 1/2 (closed boundary), else 0.
double rect(double x);

// I_nu(z) for real nu >= 0 and z >= 0 by the ascending series
//     sum_k (z/2)^(2k+nu) / (k! Gamma(k+nu+1)).
// Throws RangeError once e^z overflows and ConvergenceError if the series
// needs more than kBesselSeriesMaxTerms terms.
double bessel_i(BesselOrder order, double z);

// Exponentially scaled e^{-z} I_nu(z). Uses the same series for z <= 700 and
// the Hankel asymptotic expansion beyond it, so it stays finite for large z.
double bessel_i_scaled(BesselOrder order, double z);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace vmtaper

#endif  // VMTAPER_SPECIAL_HPP
