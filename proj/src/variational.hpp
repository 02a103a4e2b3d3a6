#pragma once

#include "potential.hpp"

namespace coshspec {

// Quadratic form ((W_V - 2) u_n, u_n) for the Gaussian trials
// u_n(x) = exp(-x^2/n^2).  The Fourier-side (kinetic) term uses the
// Plancherel weight |u_n^(k)|^2 = pi n^2 exp(-2 pi^2 n^2 k^2).
struct TrialForm {
  double n = 1.0;
  double b = 1.0;
  double kinetic = 0.0;        // >= 0
  cplx potential_term{0.0, 0.0};
  cplx total{0.0, 0.0};        // kinetic - potential_term
};

// Closed form n sqrt(2 pi) (e^{b^2/(2 n^2)} - 1).
double kinetic_term(double n, double b);

// Same integral by panel quadrature; agrees with the closed form to
// 1e-10 relative (cross-checked in the test suite).
double kinetic_term_quadrature(double n, double b);

TrialForm form_value(const Potential& V, double n, double b);

struct Certificate {
  double n_star = 0.0;
  double total = 0.0;  // < 0
};

// Doubles n from 1 until the form value turns negative, which certifies an
// eigenvalue below the spectral point 2 for real V >= 0, V != 0.
// Throws NotNonnegative/ValidationError on violated hypotheses and
// CertificationFailed past n = 2^20.
Certificate certify_bound_state(const Potential& V, double b);

}  // namespace coshspec
