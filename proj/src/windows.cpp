#include "vmtaper/windows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vmtaper/errors.hpp"
#include "vmtaper/special.hpp"

namespace vmtaper {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kPi = std::numbers::pi;

void validate(const Family& f) {
  std::visit(Overloaded{
                 [](const family::GeneralizedCosine& g) {
                   if (!(g.alpha >= 0.0 && g.alpha <= 1.0)) {
                     throw DomainError("generalized cosine: alpha must lie in [0, 1]");
                   }
                 },
                 [](const family::Kaiser& k) {
                   if (!(k.beta >= 0.0) || !std::isfinite(k.beta)) {
                     throw DomainError("kaiser: beta must be finite and nonnegative");
                   }
                 },
                 [](const family::VonMises& v) {
                   if (!(v.beta >= 0.0) || !std::isfinite(v.beta)) {
                     throw DomainError("von mises: beta must be finite and nonnegative");
                   }
                 },
                 [](const auto&) {},
             },
             f);
}

// Shape of the centered window at u with |u| <= N/2.
double centered_shape(const Family& f, double length, double u) {
  return std::visit(
      Overloaded{
          [](const family::Rectangular&) { return 1.0; },
          [=](const family::GeneralizedCosine& g) {
            return g.alpha + (1.0 - g.alpha) * std::cos(2.0 * kPi * u / length);
          },
          [=](const family::CosineTip&) { return std::cos(2.0 * kPi * u / length); },
          [=](const family::Kaiser& k) {
            if (k.beta == 0.0) {
              return 1.0;
            }
            const double x = u / (0.5 * length);
            const double arg = k.beta * std::sqrt(std::max(0.0, 1.0 - x * x));
            // Ratio of scaled functions keeps large beta finite.
            return bessel_i_scaled(BesselOrder(0.0), arg) /
                   bessel_i_scaled(BesselOrder(0.0), k.beta) * std::exp(arg - k.beta);
          },
          [=](const family::VonMises& v) {
            return std::exp(v.beta * (std::cos(kPi * u / length) - 1.0));
          },
      },
      f);
}

}  // namespace

WindowSpec::WindowSpec(Family family, double length, Alignment alignment)
    : family_(family), length_(length), alignment_(alignment) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("window: N must be finite and positive");
  }
  validate(family_);
}

double WindowSpec::delay() const noexcept {
  return alignment_ == Alignment::causal ? 0.5 * length_ : 0.0;
}

double WindowSpec::support_begin() const noexcept { return delay() - 0.5 * length_; }
double WindowSpec::support_end() const noexcept { return delay() + 0.5 * length_; }

WindowSpec WindowSpec::centered() const { return WindowSpec(family_, length_, Alignment::centered); }

bool WindowSpec::is_von_mises() const noexcept {
  return std::holds_alternative<family::VonMises>(family_);
}

double WindowSpec::parameter() const noexcept {
  return std::visit(Overloaded{
                        [](const family::GeneralizedCosine& g) { return g.alpha; },
                        [](const family::Kaiser& k) { return k.beta; },
                        [](const family::VonMises& v) { return v.beta; },
                        [](const auto&) { return 0.0; },
                    },
                    family_);
}

std::string WindowSpec::family_name() const {
  return std::visit(Overloaded{
                        [](const family::Rectangular&) { return std::string("rectangular"); },
                        [](const family::GeneralizedCosine&) {
                          return std::string("generalized_cosine");
                        },
                        [](const family::CosineTip&) { return std::string("cosine_tip"); },
                        [](const family::Kaiser&) { return std::string("kaiser"); },
                        [](const family::VonMises&) { return std::string("von_mises"); },
                    },
                    family_);
}

double evaluate(const WindowSpec& spec, double t) {
  if (!std::isfinite(t)) {
    throw DomainError("window evaluate: t must be finite");
  }
  const double u = t - spec.delay();
  if (rect(u / spec.length()) == 0.0) {
    return 0.0;
  }
  return centered_shape(spec.family(), spec.length(), u);
}

SampledWindow sample(const WindowSpec& spec, std::size_t count) {
  if (count < 2) {
    throw DomainError("window sample: count must be at least 2");
  }
  SampledWindow out{spec, {}, {}};
  out.times.reserve(count);
  out.values.reserve(count);
  const double lo = spec.support_begin();
  const double hi = spec.support_end();
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    // Both ends are pinned so boundary samples hit the closed support exactly.
    const double t = (i + 1 == count) ? hi : lo + step * static_cast<double>(i);
    out.times.push_back(t);
    out.values.push_back(evaluate(spec, t));
  }
  return out;
}

}  // namespace vmtaper
