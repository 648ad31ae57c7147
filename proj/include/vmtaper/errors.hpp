#ifndef VMTAPER_ERRORS_HPP
#define VMTAPER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vmtaper {

// Base for every error raised by the library. The C API maps each subclass
// onto a distinct vmt_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Result not representable in double precision.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Series did not reach its tolerance within the term cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// Figure of merit is not defined for the given window (e.g. zero DC gain).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace vmtaper

#endif  // VMTAPER_ERRORS_HPP
