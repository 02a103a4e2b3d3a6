#include "variational.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "quadrature.hpp"

namespace coshspec {

namespace {
constexpr double kPi = std::numbers::pi;
}

double kinetic_term(double n, double b) {
  if (n <= 0.0) throw InvalidArgument("kinetic_term: n must be positive");
  if (b < 0.0) throw InvalidArgument("kinetic_term: b must be nonnegative");
  return n * std::sqrt(2.0 * kPi) * std::expm1(b * b / (2.0 * n * n));
}

double kinetic_term_quadrature(double n, double b) {
  if (n <= 0.0) throw InvalidArgument("kinetic_term_quadrature: n must be positive");
  if (b < 0.0) throw InvalidArgument("kinetic_term_quadrature: b must be nonnegative");
  if (b == 0.0) return 0.0;
  // Integrand support: 2 pi^2 n^2 k^2 - 2 pi b k <= 45 bounds the tail.
  const double kmax = (b + std::sqrt(b * b + 90.0 * n * n)) / (2.0 * kPi * n * n);
  auto f = [n, b](double k) {
    const double s = std::sinh(kPi * b * k);
    // 2 cosh(2 pi b k) - 2 written as 4 sinh^2(pi b k): no cancellation
    return 4.0 * s * s * kPi * n * n * std::exp(-2.0 * kPi * kPi * n * n * k * k);
  };
  return integrate_panels(f, -kmax, kmax, 48, 16);
}

TrialForm form_value(const Potential& V, double n, double b) {
  if (V.kind() == PotentialKind::delta)
    throw InvalidArgument("form_value: delta couplings are handled by the rank-one model");
  TrialForm out;
  out.n = n;
  out.b = b;
  out.kinetic = kinetic_term(n, b);
  const double L = V.support_radius();
  auto f = [&](double x) { return V(x) * std::exp(-2.0 * x * x / (n * n)); };
  out.potential_term = integrate_adaptive<cplx>(f, -L, L, 1e-10);
  out.total = cplx(out.kinetic, 0.0) - out.potential_term;
  return out;
}

Certificate certify_bound_state(const Potential& V, double b) {
  if (V.kind() == PotentialKind::delta)
    throw InvalidArgument("certify_bound_state: delta couplings are exact; nothing to certify");
  // Hypotheses of the resonance-state theorem: V real, V >= 0, V not == 0.
  const double L = V.support_radius();
  double vmax = 0.0;
  const int samples = 2048;
  for (int i = 0; i <= samples; ++i) {
    const double x = -L + 2.0 * L * i / samples;
    const cplx v = V(x);
    vmax = std::max(vmax, std::abs(v));
  }
  const double tol = 1e-12 * std::max(vmax, 1.0);
  for (int i = 0; i <= samples; ++i) {
    const double x = -L + 2.0 * L * i / samples;
    const cplx v = V(x);
    if (std::abs(v.imag()) > tol || v.real() < -tol)
      throw NotNonnegative("certify_bound_state: V must be real-valued and nonnegative");
  }
  if (vmax == 0.0) throw ValidationError("certify_bound_state: V != 0 required");

  for (double n = 1.0; n <= 1048576.0; n *= 2.0) {
    const TrialForm tf = form_value(V, n, b);
    if (tf.total.real() < 0.0) return Certificate{n, tf.total.real()};
  }
  throw CertificationFailed(
      "certify_bound_state: no negative form value up to n = 2^20 (check the hypotheses)");
}

}  // namespace coshspec
