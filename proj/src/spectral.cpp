#include "spectral.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace coshspec {

namespace {
constexpr double kPi = std::numbers::pi;
}

OmegaPoint::OmegaPoint(cplx w) : value(w) {
  strip_index = static_cast<int>(std::floor(w.real() / kPi));
  half_plane = (w.imag() > 0.0) - (w.imag() < 0.0);
}

SpectralParam::SpectralParam(cplx lam) : value(lam) {
  on_cut = std::abs(lam.imag()) <= kCutTol && lam.real() >= 2.0 - kCutTol;
}

SpectralParam lambda_of_omega(const OmegaPoint& omega) {
  return SpectralParam(-2.0 * std::cos(omega.value));
}

OmegaPoint omega_of_lambda(const SpectralParam& lambda) {
  if (lambda.on_cut)
    throw CutPointError("omega_of_lambda: lambda lies on the essential spectrum [2,inf)");
  const cplx lam = lambda.value;
  cplx w = std::acos(-lam / 2.0);
  if (w.real() < 0.0) w = cplx(0.0, w.imag());
  // Real lambda <= -2 lands on the Re = 0 edge where acos picks the lower
  // half; normalize to Im omega >= 0 there.
  if (lam.imag() == 0.0 && w.imag() < 0.0) w = std::conj(w);
  // One Newton polish on -2 cos w = lambda tightens the round trip.
  for (int it = 0; it < 2; ++it) {
    const cplx f = -2.0 * std::cos(w) - lam;
    if (std::abs(f) <= 1e-14 * (1.0 + std::abs(lam))) break;
    const cplx df = 2.0 * std::sin(w);
    if (std::abs(df) < 1e-14) break;
    w -= f / df;
  }
  return OmegaPoint(w);
}

double symbol(double k, double b) { return 2.0 * std::cosh(2.0 * kPi * b * k); }

cplx sin_ratio(cplx w) {
  if (std::abs(w) < 1e-4) {
    const cplx w2 = w * w;
    return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sin(w) / w;
}

cplx sin_ratio_derivative(cplx w) {
  if (std::abs(w) < 1e-4) {
    const cplx w2 = w * w;
    return -w / 3.0 + w * w2 / 30.0;
  }
  return (w * std::cos(w) - std::sin(w)) / (w * w);
}

}  // namespace coshspec
