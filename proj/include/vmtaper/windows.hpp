#ifndef VMTAPER_WINDOWS_HPP
#define VMTAPER_WINDOWS_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace vmtaper {

namespace family {

struct Rectangular {};

// alpha + (1 - alpha) cos(2 pi t / N); Hann is alpha = 0.5, Hamming 0.54.
struct GeneralizedCosine {
  double alpha;
};

// cos(2 pi t / N). Goes negative for |t| > N/4.
struct CosineTip {};

// I0(beta sqrt(1 - (2t/N)^2)) / I0(beta).
struct Kaiser {
  double beta;
};

// exp(beta cos(pi t / N)) / exp(beta), the circular-normal taper.
struct VonMises {
  double beta;
};

}  // namespace family

using Family = std::variant<family::Rectangular, family::GeneralizedCosine, family::CosineTip,
                            family::Kaiser, family::VonMises>;

enum class Alignment { centered, causal };

inline constexpr double kHannAlpha = 0.5;
inline constexpr double kHammingAlpha = 0.54;

// Window family, support length N (seconds) and alignment. Centered windows
// live on [-N/2, N/2], causal ones on [0, N].
class WindowSpec {
 public:
  WindowSpec(Family family, double length, Alignment alignment = Alignment::centered);

  const Family& family() const noexcept { return family_; }
  double length() const noexcept { return length_; }
  Alignment alignment() const noexcept { return alignment_; }

  double support_begin() const noexcept;
  double support_end() const noexcept;
  // Offset of the window centre from t = 0 (N/2 for causal windows).
  double delay() const noexcept;

  // The same family and length, centered.
  WindowSpec centered() const;

  bool is_von_mises() const noexcept;
  // Shape parameter (alpha or beta); 0 for parameterless families.
  double parameter() const noexcept;
  std::string family_name() const;

 private:
  Family family_;
  double length_;
  Alignment alignment_;
};

struct SampledWindow {
  WindowSpec spec;
  std::vector<double> times;
  std::vector<double> values;
};

// Window value at time t; exactly 0 outside the (closed) support.
double evaluate(const WindowSpec& spec, double t);

// Uniform grid of count >= 2 points over the support, endpoints included.
SampledWindow sample(const WindowSpec& spec, std::size_t count);

}  // namespace vmtaper

#endif  // VMTAPER_WINDOWS_HPP
