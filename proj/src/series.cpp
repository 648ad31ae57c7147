#include "vmtaper/series.hpp"

#include <cmath>

#include "vmtaper/errors.hpp"

namespace vmtaper {

SeriesTruncation::SeriesTruncation(double tol, int max_terms) : tol_(tol), max_terms_(max_terms) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("SeriesTruncation: tol must be positive");
  }
  if (max_terms < 1) {
    throw DomainError("SeriesTruncation: max_terms must be at least 1");
  }
}

}  // namespace vmtaper
