#pragma once

#include <vector>

#include "spectral.hpp"

namespace coshspec {

// Rank-one model W_0(b) - c delta(x) with coupling c = r e^{i theta}.
// Its eigenvalue condition is sin(w)/w = c/(2 pi b); solutions with
// Re w in [0, pi) are eigenvalues, solutions in higher strips are the
// resonances (exponentially growing formal eigenfunctions).
struct DeltaModel {
  double b = 1.0;
  double r = 1.0;       // |c| > 0
  double theta = 0.0;   // arg c, normalized to [0, 2 pi)

  DeltaModel(double b_, double r_, double theta_);
  static DeltaModel from_coupling(double b, cplx c);

  cplx coupling() const;
  cplx condition_target() const;  // c / (2 pi b)
};

// sin(w)/w - c/(2 pi b); the removable value 1 is used at w = 0.
cplx delta_condition(cplx omega, const DeltaModel& model);

struct DeltaRoot {
  cplx omega;
  int strip = 0;
  double residual = 0.0;
};

// All roots with Re omega in [0, (max_strip+1) pi) and |Im omega| <= imax
// (imax <= 0 derives a provably root-free depth from |sin w| >= sinh|Im w|).
// Completeness inside the searched rectangle is validated by an
// argument-principle winding count; a disagreement throws WindingMismatch.
std::vector<DeltaRoot> solve_all(const DeltaModel& model, int max_strip, double imax = 0.0);

struct TraceRecord {
  double theta = 0.0;
  cplx omega;        // representative with Re >= 0 (the condition is even in w)
  cplx lambda;
  int strip = 0;
  double residual = 0.0;
  bool boundary = false;  // within 1e-9 of a strip boundary Re w = k pi
  bool marker = false;    // theta is one of k pi/4, k = 0..7
};

struct BranchTrace {
  int branch_id = 0;
  double r_over_2pi = 0.0;
  std::vector<TraceRecord> records;
  bool collapsed = false;  // corrector failed below the minimum substep
  bool exited = false;     // left the Im search window
};

// theta-continuation of every theta = 0 root over [0, 2 pi] (b = 1, as in
// the figure set).  Records land on the uniform theta grid plus the exact
// k pi/4 highlight angles.
std::vector<BranchTrace> trace_branches(double r_over_2pi, int theta_steps, int max_strip);

// Unnormalized eigenfunction (psi(0) = 1); omega must solve the condition
// to 1e-8 or NotARoot is thrown.  Valid on every strip (continuation).
cplx eigenfunction(const DeltaModel& model, cplx omega, double x);

// Exponential growth rate (Re w - pi)/b of the strip >= 1 solutions.
double growth_rate(const DeltaModel& model, cplx omega);

// Residual of the Fourier-space eigenequation
// (2 cosh(2 pi b k) - lambda) psi^(k) = c psi(0).
double rank_one_fourier_residual(const DeltaModel& model, cplx omega, double k);

// Zeros (with multiplicity) of sin(w)/w - target inside the rectangle,
// counted by the boundary winding number.  Exposed for validation.
int winding_count(cplx target, double re_lo, double re_hi, double im_lo, double im_hi);

}  // namespace coshspec
