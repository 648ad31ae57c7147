#ifndef VMTAPER_SERIES_HPP
#define VMTAPER_SERIES_HPP

namespace vmtaper {

// Controls evaluation of the Bessel-weighted series: summation stops at the
// first index whose Bessel ratio I_n/I_0 drops below tol, and a
// ConvergenceError is raised if that takes more than max_terms indices.
class SeriesTruncation {
 public:
  SeriesTruncation() = default;
  SeriesTruncation(double tol, int max_terms);
  double tol() const noexcept { return tol_; }
  int max_terms() const noexcept { return max_terms_; }

 private:
  double tol_ = 1e-14;
  int max_terms_ = 1000;
};

}  // namespace vmtaper

#endif  // VMTAPER_SERIES_HPP
