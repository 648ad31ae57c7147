#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "vmtaper/errors.hpp"
#include "vmtaper/special.hpp"

using namespace vmtaper;
using doctest::Approx;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("sa fills the removable singularity") {
  CHECK(sa(0.0) == 1.0);
  CHECK(std::abs(sa(kPi)) < 1e-16);
  CHECK(sa(kPi / 2) == Approx(2.0 / kPi).epsilon(1e-15));
  // Taylor guard joins the direct formula smoothly.
  CHECK(sa(0.99e-4) == Approx(std::sin(0.99e-4) / 0.99e-4).epsilon(1e-16));
  for (double x = -20.0; x <= 20.0; x += 0.37) {
    CHECK(sa(x) == sa(-x));
  }
  CHECK_THROWS_AS(sa(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(sa(std::nan("")), DomainError);
}

TEST_CASE("rect uses a closed boundary") {
  CHECK(rect(0.4) == 1.0);
  CHECK(rect(0.5) == 1.0);
  CHECK(rect(-0.5) == 1.0);
  CHECK(rect(0.6) == 0.0);
  for (double x = -1.0; x <= 1.0; x += 0.05) {
    CHECK(rect(x) == rect(-x));
  }
  CHECK_THROWS_AS(rect(std::nan("")), DomainError);
}

TEST_CASE("BesselOrder rejects negative orders") {
  CHECK_THROWS_AS(BesselOrder(-0.5), DomainError);
  CHECK_THROWS_AS(BesselOrder(std::nan("")), DomainError);
  CHECK(BesselOrder(2.5).value() == 2.5);
}

TEST_CASE("bessel_i at the origin") {
  CHECK(bessel_i(BesselOrder(0.0), 0.0) == 1.0);
  CHECK(bessel_i(BesselOrder(1.0), 0.0) == 0.0);
  CHECK(bessel_i(BesselOrder(0.3), 0.0) == 0.0);
  CHECK_THROWS_AS(bessel_i(BesselOrder(0.0), -1.0), DomainError);
}

TEST_CASE("bessel_i against frozen high-precision values") {
  // Reference digits computed with 30-digit arithmetic; the bound is the
  // series truncation tolerance.
  CHECK(rel(bessel_i(BesselOrder(0.0), 1.0), 1.26606587775200833559824462521) < 1e-13);
  CHECK(rel(bessel_i(BesselOrder(0.0), 5.0), 27.2398718236044468945442320759) < 1e-13);
  CHECK(rel(bessel_i(BesselOrder(1.0), 5.0), 24.3356421424505271991430504518) < 1e-13);
  CHECK(rel(bessel_i(BesselOrder(2.5), 3.0), 1.51533944668196513774057865265) < 1e-13);
  CHECK(rel(bessel_i(BesselOrder(7.3), 4.2), 0.0406596871529926270148940863389) < 1e-13);
  CHECK(rel(bessel_i(BesselOrder(40.0), 1.0), 1.12150974133148595810324652224e-60) < 1e-12);
  CHECK(rel(bessel_i_scaled(BesselOrder(0.0), 700.0), 0.0150812956515313575869861745298) < 1e-12);
}

TEST_CASE("bessel_i order zero matches the plain factorial series") {
  for (double z : {0.1, 1.0, 2.5, 10.0, 30.0}) {
    CHECK(rel(bessel_i(BesselOrder(0.0), z), oracle::bessel_i0_plain_series(z)) < 1e-13);
  }
}

TEST_CASE("bessel_i order zero matches its integral representation") {
  for (double z : {0.5, 1.0, 3.0, 5.0}) {
    CHECK(rel(bessel_i(BesselOrder(0.0), z), oracle::bessel_i0_integral(z)) < 1e-10);
  }
}

TEST_CASE("half-order series reproduces sqrt(2/(pi z)) sinh z") {
  for (double z : {0.2, 1.0, 2.0, 5.0, 20.0}) {
    CHECK(rel(bessel_i(BesselOrder(0.5), z), oracle::bessel_i_half(z)) < 1e-12);
  }
}

TEST_CASE("three-term recurrence for integer orders") {
  for (int nu = 1; nu <= 10; ++nu) {
    for (double z : {1.0, 5.0}) {
      const double lhs = bessel_i(BesselOrder(nu - 1.0), z) - bessel_i(BesselOrder(nu + 1.0), z);
      const double rhs = 2.0 * nu / z * bessel_i(BesselOrder(nu), z);
      CHECK(rel(lhs, rhs) < 1e-9);
    }
  }
}

TEST_CASE("bessel_i decreases strictly with the order") {
  for (double z : {0.5, 1.0, 5.0, 20.0}) {
    double prev = bessel_i(BesselOrder(0.0), z);
    for (double nu = 0.5; nu <= 10.0; nu += 0.5) {
      const double v = bessel_i(BesselOrder(nu), z);
      CHECK(v < prev);
      CHECK(v > 0.0);
      prev = v;
    }
  }
}

TEST_CASE("scaled variant agrees with the unscaled function and stays finite") {
  for (double z : {0.5, 10.0, 100.0, 600.0}) {
    for (double nu : {0.0, 1.0, 3.7}) {
      const double direct = bessel_i(BesselOrder(nu), z);
      CHECK(rel(bessel_i_scaled(BesselOrder(nu), z) * std::exp(z), direct) < 1e-12);
    }
  }
  // Series and asymptotic branches meet at z = 700.
  const double below = bessel_i_scaled(BesselOrder(1.0), 700.0);
  const double above = bessel_i_scaled(BesselOrder(1.0), std::nextafter(700.0, 800.0));
  CHECK(rel(above, below) < 1e-12);
  CHECK(std::isfinite(bessel_i_scaled(BesselOrder(0.0), 5000.0)));
  CHECK(bessel_i_scaled(BesselOrder(0.0), 5000.0) ==
        Approx(1.0 / std::sqrt(2.0 * kPi * 5000.0)).epsilon(1e-4));
}

TEST_CASE("bessel_i signals overflow as a range error") {
  CHECK_NOTHROW(bessel_i(BesselOrder(0.0), 700.0));
  CHECK_THROWS_AS(bessel_i(BesselOrder(0.0), 710.0), RangeError);
}

TEST_CASE("log_gamma") {
  CHECK(log_gamma(1.0) == Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(2.0) == Approx(0.0).epsilon(1e-15));
  CHECK(rel(log_gamma(0.5), std::log(std::sqrt(kPi))) < 1e-14);
  // ln((n-1)!) for integers.
  double log_factorial = 0.0;
  for (int n = 2; n <= 200; ++n) {
    CHECK(rel(log_gamma(n + 1.0), log_factorial + std::log(static_cast<double>(n))) < 1e-12);
    log_factorial += std::log(static_cast<double>(n));
  }
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}
