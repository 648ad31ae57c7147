#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "vmtaper/errors.hpp"
#include "vmtaper/metrics.hpp"
#include "vmtaper/spectra.hpp"

using namespace vmtaper;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("coherent gain and ENBW of the classical windows") {
  const WindowSpec r(family::Rectangular{}, 2.0);
  const WindowSpec h(family::GeneralizedCosine{kHannAlpha}, 2.0);
  CHECK(std::abs(coherent_gain(r) - 1.0) < 1e-9);
  CHECK(std::abs(enbw(r) - 1.0) < 1e-9);
  CHECK(std::abs(coherent_gain(h) - 0.5) < 1e-9);
  CHECK(std::abs(enbw(h) - 1.5) < 1e-6);
  // Hamming: (a^2 + (1-a)^2/2) / a^2.
  const double a = kHammingAlpha;
  CHECK(enbw(WindowSpec(family::GeneralizedCosine{a}, 3.0)) ==
        Approx((a * a + 0.5 * (1 - a) * (1 - a)) / (a * a)).epsilon(1e-9));
  const double b = 5.0;
  auto shape = [b](double t) { return std::exp(b * (std::cos(kPi * t / 2.0) - 1.0)); };
  const double area = oracle::simpson<double>(shape, -1.0, 1.0, 20000);
  const double energy = oracle::simpson<double>(
      [&](double t) { return shape(t) * shape(t); }, -1.0, 1.0, 20000);
  const double expected = 2.0 * energy / (area * area);
  CHECK(enbw(WindowSpec(family::VonMises{b}, 2.0)) == Approx(expected).epsilon(1e-10));
  CHECK(enbw(WindowSpec(family::VonMises{b}, 2.0)) ==
        Approx(1.90669918342275072859120838376).epsilon(1e-10));
}

TEST_CASE("cosine tip has no defined gain-normalized metrics") {
  const WindowSpec c(family::CosineTip{}, 2.0);
  CHECK(std::abs(coherent_gain(c)) < 1e-11);
  CHECK_THROWS_AS(enbw(c), UndefinedMetricError);
  const WindowMetrics m = compute_metrics(c);
  CHECK(!m.enbw_bins.has_value());
  CHECK(!m.mainlobe_width_3db_bins.has_value());
  CHECK(!m.peak_sidelobe_db.has_value());
}

TEST_CASE("rectangular spectral shape metrics") {
  const WindowSpec r(family::Rectangular{}, 2.0);
  const double dense = oracle::dense_sidelobe_db(
      [](double w) { return 2.0 * oracle::sinc(w); }, 40.0 * kPi, 400000);
  CHECK(std::abs(peak_sidelobe(r) - dense) < 0.05);
  CHECK(peak_sidelobe(r) == Approx(-13.2614).epsilon(1e-4));
  CHECK(first_null(r) == Approx(1.0).epsilon(1e-7));
  // Sa(pi x / 2) = 10^(-3/20) at x = 0.88449; the half-power point 1/sqrt(2)
  // is the often quoted 0.8859.
  CHECK(mainlobe_width(r, -3.0) == Approx(0.884486779252536259).epsilon(1e-8));
  CHECK(mainlobe_width(r, 20.0 * std::log10(std::sqrt(0.5))) ==
        Approx(0.885892941378904681).epsilon(1e-8));
  CHECK_THROWS_AS(mainlobe_width(r, 1.0), DomainError);
}

TEST_CASE("Hann sidelobe matches a scan of its closed-form spectrum") {
  const WindowSpec h(family::GeneralizedCosine{kHannAlpha}, 2.0);
  const double dense = oracle::dense_sidelobe_db(
      [](double w) {
        return oracle::sinc(w) + 0.5 * oracle::sinc(w - kPi) + 0.5 * oracle::sinc(w + kPi);
      },
      40.0 * kPi, 400000);
  CHECK(std::abs(peak_sidelobe(h) - dense) < 0.05);
  CHECK(peak_sidelobe(h) == Approx(-31.47).epsilon(1e-3));
  CHECK(first_null(h) == Approx(2.0).epsilon(1e-6));
}

TEST_CASE("von Mises trade-off ordering") {
  double prev_width = 0.0;
  double prev_side = 0.0;
  bool first = true;
  for (double beta : {0.0, 1.0, 3.0, 5.0}) {
    const WindowMetrics m = compute_metrics(WindowSpec(family::VonMises{beta}, 2.0));
    REQUIRE(m.mainlobe_width_3db_bins.has_value());
    REQUIRE(m.peak_sidelobe_db.has_value());
    if (!first) {
      CHECK(*m.mainlobe_width_3db_bins >= prev_width);
      CHECK(*m.peak_sidelobe_db <= prev_side);
    }
    first = false;
    prev_width = *m.mainlobe_width_3db_bins;
    prev_side = *m.peak_sidelobe_db;
  }
  const WindowSpec r(family::Rectangular{}, 2.0);
  CHECK(mainlobe_width(WindowSpec(family::VonMises{0.0}, 2.0), -6.0) ==
        Approx(mainlobe_width(r, -6.0)).epsilon(1e-9));
  CHECK(mainlobe_width(WindowSpec(family::VonMises{5.0}, 2.0), -3.0) > mainlobe_width(r, -3.0));
}

TEST_CASE("bin-normalized metrics do not depend on the length") {
  for (const Family& f : std::vector<Family>{family::Rectangular{},
                                             family::GeneralizedCosine{kHammingAlpha},
                                             family::Kaiser{5.0}, family::VonMises{3.0}}) {
    const WindowMetrics a = compute_metrics(WindowSpec(f, 1.0));
    const WindowMetrics b = compute_metrics(WindowSpec(f, 16.0));
    CHECK(std::abs(a.coherent_gain - b.coherent_gain) < 1e-6);
    CHECK(std::abs(*a.enbw_bins - *b.enbw_bins) < 1e-6);
    CHECK(std::abs(*a.mainlobe_width_3db_bins - *b.mainlobe_width_3db_bins) < 1e-6);
    CHECK(std::abs(*a.first_null_bins - *b.first_null_bins) < 1e-6);
    CHECK(std::abs(*a.peak_sidelobe_db - *b.peak_sidelobe_db) < 1e-6);
  }
}

TEST_CASE("metric grid validation") {
  const WindowSpec r(family::Rectangular{}, 2.0);
  CHECK_THROWS_AS(peak_sidelobe(r, MetricsGrid{0.0, 64}), DomainError);
  CHECK_THROWS_AS(peak_sidelobe(r, MetricsGrid{40.0, 0}), DomainError);
  // Too narrow a band to contain a null.
  CHECK_THROWS(first_null(WindowSpec(family::VonMises{5.0}, 2.0), MetricsGrid{0.5, 64}));
}
