#include "resolvent.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace coshspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr double kSinFloor = 1e-14;
constexpr double kTaylorSwitch = 1e-4;   // |x| < kTaylorSwitch * b
constexpr double kExpSwitch = 30.0 / kPi;  // |x| > kExpSwitch * b

cplx checked_sin(const cplx w) {
  const cplx sw = std::sin(w);
  if (std::abs(sw) < kSinFloor)
    throw SingularOmega("resolvent: sin(omega) vanishes (omega on pi Z)");
  return sw;
}

}  // namespace

cplx sinh_ratio(cplx w, double u) {
  if (u < kTaylorSwitch) {
    const cplx w2 = w * w;
    const double p2 = kPi * kPi;
    const cplx c2 = (w2 - p2) / 6.0;
    const cplx c4 = (w2 * w2 - p2 * p2) / 120.0 - p2 * (w2 - p2) / 36.0;
    const double u2 = u * u;
    return (w / kPi) * (1.0 + c2 * u2 + c4 * u2 * u2);
  }
  if (u > kExpSwitch) {
    // Rewritten so only decaying exponentials appear while Re w < pi;
    // beyond strip 0 the growth is the genuine continuation.
    const cplx en = std::exp((w - kPi) * u);
    return en * (1.0 - std::exp(-2.0 * w * u)) / (1.0 - std::exp(-2.0 * kPi * u));
  }
  return std::sinh(w * u) / std::sinh(kPi * u);
}

cplx kernel(const OmegaPoint& omega, double b, double x) {
  if (b <= 0.0) throw InvalidArgument("kernel: b must be positive");
  const cplx w = omega.value;
  const cplx sw = checked_sin(w);
  // evenness is exact: only |x| enters
  return sinh_ratio(w, std::abs(x) / b) / (2.0 * b * sw);
}

cplx diagonal(const OmegaPoint& omega, double b) {
  if (b <= 0.0) throw InvalidArgument("diagonal: b must be positive");
  const cplx w = omega.value;
  if (w == cplx(0.0, 0.0)) return cplx(1.0 / (2.0 * kPi * b), 0.0);
  const cplx sw = checked_sin(w);
  return w / (2.0 * kPi * b * sw);
}

bool continued_evaluation(const OmegaPoint& omega) { return omega.strip_index != 0; }

ResolventEval::ResolventEval(const OmegaPoint& w, double b_)
    : omega(w), b(b_), continued(continued_evaluation(w)) {
  if (b <= 0.0) throw InvalidArgument("ResolventEval: b must be positive");
}

cplx kernel_ft_form(const OmegaPoint& omega, double b, double x) {
  if (b <= 0.0) throw InvalidArgument("kernel_ft_form: b must be positive");
  const cplx w = omega.value;
  checked_sin(w);
  if (std::abs(x) < kTaylorSwitch * b)
    throw ZeroDisplacement("kernel_ft_form: terms are singular near x = 0; use kernel()");
  const cplx sigma = kI / (2.0 * b);
  const cplx kappa = (w - kPi) / (2.0 * kPi * kI * b);
  const cplx pref = sigma / std::sinh(kPi * kI * kappa / sigma);
  auto term = [&](double s) -> cplx {
    const cplx num = -2.0 * kPi * kI * kappa * s;
    const cplx den = -4.0 * kPi * kI * sigma * s;  // real-valued: 2 pi s / b
    // For den >> 1 divide through by e^{den} to keep exponentials bounded.
    if (den.real() > 350.0) return std::exp(num - den) / (std::exp(-den) - 1.0);
    return std::exp(num) / (1.0 - std::exp(den));
  };
  return pref * (term(x) + term(-x));
}

BoundCheckReport kernel_bound_check(const OmegaPoint& omega, double b,
                                    std::span<const double> xs) {
  if (omega.strip_index != 0)
    throw InvalidArgument("kernel_bound_check: omega must lie in strip 0");
  const double d = std::abs(diagonal(omega, b));
  BoundCheckReport rep;
  for (const double x : xs)
    rep.max_ratio = std::max(rep.max_ratio, std::abs(kernel(omega, b, x)) / d);
  rep.ok = rep.max_ratio <= 1.0 + 1e-12;
  return rep;
}

double fourier_roundtrip_residual(const OmegaPoint& omega, double b, double k,
                                  const QuadratureSpec& q) {
  if (b <= 0.0) throw InvalidArgument("fourier_roundtrip_residual: b must be positive");
  if (omega.strip_index != 0)
    throw InvalidArgument("fourier_roundtrip_residual: omega must lie in strip 0");
  const cplx w = omega.value;
  checked_sin(w);
  const double rate = (kPi - w.real()) / b;  // kernel decays like e^{-rate |x|}
  double L = q.truncation;
  if (L <= 0.0) {
    L = std::log(1e13) / rate;
    if (L > 400.0 * b)
      throw TailTooFat("fourier_roundtrip_residual: Re omega too close to pi for the "
                       "requested tolerance at affordable truncation");
  }
  auto f = [&](double x) { return kernel(omega, b, x) * std::exp(-2.0 * kPi * kI * k * x); };
  const cplx integral = integrate_panels(f, -L, L, q.panels, q.nodes_per_panel);
  const cplx closed = 1.0 / (2.0 * std::cosh(2.0 * kPi * b * k) + 2.0 * std::cos(w));
  return std::abs(integral - closed);
}

AsymptoticsReport diagonal_asymptotics_check(double b) {
  if (b <= 0.0) throw InvalidArgument("diagonal_asymptotics_check: b must be positive");
  AsymptoticsReport rep;
  {
    const double lam = 2.0 - 1e-6;
    const OmegaPoint w = omega_of_lambda(SpectralParam(cplx(lam, 0.0)));
    rep.edge_ratio = std::abs(diagonal(w, b)) * 2.0 * b * std::sqrt(2.0 - lam);
  }
  {
    const double lam = -1e8;
    const OmegaPoint w = omega_of_lambda(SpectralParam(cplx(lam, 0.0)));
    rep.tail_ratio =
        std::abs(diagonal(w, b)) * kPi * b * std::abs(lam) / std::log(std::abs(lam));
  }
  rep.ok = std::abs(rep.edge_ratio - 1.0) <= 0.02 && std::abs(rep.tail_ratio - 1.0) <= 0.05;
  return rep;
}

bool three_lines_check(cplx alpha, double x) {
  if (alpha.real() < 0.0 || alpha.real() > 1.0)
    throw DomainError("three_lines_check: Re alpha must lie in [0, 1]");
  return std::abs(std::cosh(alpha * x)) <= std::cosh(x) + 1e-12;
}

}  // namespace coshspec
