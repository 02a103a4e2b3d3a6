#pragma once

#include <span>

#include "quadrature.hpp"
#include "spectral.hpp"

namespace coshspec {

// Free resolvent kernel
//   G_lambda(x) = (1/(2 b sin w)) sinh(w x / b) / sinh(pi x / b),
// lambda = -2 cos(w).  Evaluation is branch-switched so it neither
// overflows nor loses accuracy for any real x:
//   |x| <  1e-4 * b      Taylor form around x = 0
//   |x| >  30 * b / pi   exponential form
// Strip 0 gives the resolvent proper; for strip_index >= 1 the same
// expression is the analytic continuation used by the resonance model
// (see `continued_evaluation`).
cplx kernel(const OmegaPoint& omega, double b, double x);

// The branch-switched ratio sinh(w u)/sinh(pi u) at u >= 0 (kernel without
// its 1/(2 b sin w) prefactor); hoisting the prefactor lets matrix assembly
// skip the per-entry sin(w) work.
cplx sinh_ratio(cplx w, double u);

// Diagonal value G_lambda(0) = w / (2 pi b sin w); the removable limit
// 1/(2 pi b) is returned at w = 0 exactly.
cplx diagonal(const OmegaPoint& omega, double b);

// True when `omega` lies beyond strip 0, i.e. kernel values are analytic
// continuations rather than resolvent values.
bool continued_evaluation(const OmegaPoint& omega);

// Two-term resolvent form of Faddeev-Takhtajan, written with
// sigma = i/(2b) and kappa = (w - pi)/(2 pi i b).  Each term is singular
// at x = 0, so small displacements are rejected (ZeroDisplacement).
cplx kernel_ft_form(const OmegaPoint& omega, double b, double x);

// Convenience binding of (omega, b) and the continuation flag.
struct ResolventEval {
  OmegaPoint omega;
  double b = 1.0;
  bool continued = false;

  ResolventEval(const OmegaPoint& w, double b_);
  cplx value_at(double x) const { return kernel(omega, b, x); }
  cplx value_at_zero() const { return diagonal(omega, b); }
};

struct BoundCheckReport {
  double max_ratio = 0.0;  // max |G(x)| / |G(0)| over the sample set
  bool ok = false;         // max_ratio <= 1 + 1e-12
};

// |G(x)| <= |G(0)| over the given displacements (strip 0 only).
BoundCheckReport kernel_bound_check(const OmegaPoint& omega, double b,
                                    std::span<const double> xs);

// | int G(x) e^{-2 pi i k x} dx  -  1/(2 cosh(2 pi b k) + 2 cos w) |
// by panel quadrature on [-L, L] with L from the kernel decay rate.
double fourier_roundtrip_residual(const OmegaPoint& omega, double b, double k,
                                  const QuadratureSpec& q = {});

struct AsymptoticsReport {
  double edge_ratio = 0.0;  // G(0) * 2b * sqrt(2-lambda) at lambda = 2 - 1e-6
  double tail_ratio = 0.0;  // |G(0)| * pi b |lambda| / log|lambda| at lambda = -1e8
  bool ok = false;          // edge within 2%, tail within 5%
};

AsymptoticsReport diagonal_asymptotics_check(double b);

// |cosh(alpha x)| <= cosh(x) for 0 <= Re alpha <= 1 (three-lines lemma).
bool three_lines_check(cplx alpha, double x);

}  // namespace coshspec
