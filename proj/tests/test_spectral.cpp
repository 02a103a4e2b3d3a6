#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "errors.hpp"
#include "spectral.hpp"

using namespace coshspec;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent inverse: principal arccos seed plus a plain Newton loop on
// -2 cos(w) = lam, kept separate from the library implementation.
cplx oracle_omega(cplx lam) {
  cplx w = std::acos(-lam / 2.0);
  for (int i = 0; i < 50; ++i) {
    const cplx f = -2.0 * std::cos(w) - lam;
    if (std::abs(f) < 1e-15 * (1.0 + std::abs(lam))) break;
    w -= f / (2.0 * std::sin(w));
  }
  return w;
}
}  // namespace

TEST_CASE("lambda_of_omega on reference points") {
  CHECK(std::abs(lambda_of_omega(OmegaPoint(cplx(kPi / 2, 0))).value) < 1e-15);
  CHECK(lambda_of_omega(OmegaPoint(cplx(0, 0))).value.real() == doctest::Approx(-2.0));
  // -2 cos(i) = -2 cosh(1), high-precision reference value
  const SpectralParam lam = lambda_of_omega(OmegaPoint(cplx(0, 1)));
  CHECK(lam.value.real() == doctest::Approx(-3.086161269630487557).epsilon(1e-14));
  CHECK(lam.value.imag() == 0.0);
  CHECK(!lam.on_cut);
}

TEST_CASE("interior strip-0 points map off the cut") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(1e-3, kPi - 1e-3), im(-4.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const SpectralParam lam = lambda_of_omega(OmegaPoint(cplx(re(rng), im(rng))));
    CHECK(!lam.on_cut);
  }
}

TEST_CASE("omega_of_lambda reference points and errors") {
  const OmegaPoint w0 = omega_of_lambda(SpectralParam(cplx(0, 0)));
  CHECK(w0.value.real() == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(std::abs(w0.value.imag()) < 1e-15);

  const OmegaPoint w1 = omega_of_lambda(SpectralParam(cplx(-2, 0)));
  CHECK(std::abs(w1.value) < 1e-7);  // branch endpoint

  const OmegaPoint w2 = omega_of_lambda(SpectralParam(cplx(1, 1)));
  CHECK(w2.value.real() > 0.0);
  CHECK(w2.value.real() < kPi);
  CHECK(w2.value.imag() > 0.0);
  CHECK(std::abs(w2.value - oracle_omega(cplx(1, 1))) < 1e-12);
  const cplx back = lambda_of_omega(w2).value;
  CHECK(std::abs(back - cplx(1, 1)) <= 1e-12 * (1.0 + std::abs(cplx(1, 1))));

  CHECK_THROWS_AS(omega_of_lambda(SpectralParam(cplx(3, 0))), CutPointError);
  CHECK_THROWS_AS(omega_of_lambda(SpectralParam(cplx(2, 0))), CutPointError);
}

TEST_CASE("lambda below -2 maps onto the positive imaginary axis") {
  const OmegaPoint w = omega_of_lambda(SpectralParam(cplx(-3, 0)));
  CHECK(std::abs(w.value.real()) < 1e-14);
  CHECK(w.value.imag() > 0.0);
  CHECK(lambda_of_omega(w).value.real() == doctest::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("round trip over random off-cut lambda") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> re(-30.0, 30.0), im(-30.0, 30.0);
  int tested = 0;
  while (tested < 10000) {
    const SpectralParam lam(cplx(re(rng), im(rng)));
    if (lam.on_cut) continue;
    ++tested;
    const OmegaPoint w = omega_of_lambda(lam);
    CHECK(w.value.real() >= 0.0);
    CHECK(w.value.real() <= kPi);
    const cplx back = lambda_of_omega(w).value;
    REQUIRE(std::abs(back - lam.value) <= 1e-12 * (1.0 + std::abs(lam.value)));
    if (lam.value.imag() != 0.0) {
      REQUIRE(((lam.value.imag() > 0.0) == (w.value.imag() > 0.0)));
    }
  }
}

TEST_CASE("symbol values and operator inequality") {
  CHECK(symbol(0.0, 1.0) == doctest::Approx(2.0));
  CHECK(symbol(1.0, 1.0) == doctest::Approx(535.4935229674964).epsilon(1e-13));
  for (double k = -3.0; k <= 3.0; k += 0.05)
    for (double b : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double lhs = symbol(k, b) - 2.0;
      const double quad = 2.0 * kPi * b * k * (2.0 * kPi * b * k) / 2.0;  // (2 pi b k)^2 / 2...
      (void)quad;
      CHECK(lhs >= (2.0 * kPi * b * k) * (2.0 * kPi * b * k) - 1e-9 * (1.0 + lhs));
    }
}

TEST_CASE("strip index and half plane") {
  CHECK(OmegaPoint(cplx(0.5, 1.0)).strip_index == 0);
  CHECK(OmegaPoint(cplx(kPi + 0.1, -1.0)).strip_index == 1);
  CHECK(OmegaPoint(cplx(2 * kPi + 0.1, 0.0)).strip_index == 2);
  CHECK(OmegaPoint(cplx(1.0, 2.0)).half_plane == 1);
  CHECK(OmegaPoint(cplx(1.0, -2.0)).half_plane == -1);
  CHECK(OmegaPoint(cplx(1.0, 0.0)).half_plane == 0);
}

TEST_CASE("sin_ratio removable singularity and consistency") {
  CHECK(sin_ratio(cplx(0, 0)) == cplx(1.0, 0.0));
  CHECK(std::abs(sin_ratio(cplx(1e-9, 0)) - 1.0) < 1e-15);
  const cplx w(0.3, -0.7);
  CHECK(std::abs(sin_ratio(w) - std::sin(w) / w) < 1e-15);
  // derivative against a central difference
  const cplx h(1e-6, 0);
  const cplx fd = (sin_ratio(w + h) - sin_ratio(w - h)) / (2.0 * h);
  CHECK(std::abs(sin_ratio_derivative(w) - fd) < 1e-9);
}
