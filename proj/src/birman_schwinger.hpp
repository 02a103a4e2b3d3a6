#pragma once

#include <Eigen/Dense>
#include <vector>

#include "potential.hpp"
#include "quadrature.hpp"
#include "resolvent.hpp"

namespace coshspec {

// Symmetrized Nystrom discretization of Y G_lambda X:
//   M_ij = sqrt(w_i) Y(x_i) G(x_i - x_j) X(x_j) sqrt(w_j),
// so the matrix singular values approximate the operator's.
struct BSMatrix {
  OmegaPoint omega;
  std::vector<double> nodes;
  std::vector<double> weights;
  Eigen::MatrixXcd entries;
};

struct EigenReport {
  OmegaPoint omega;
  SpectralParam lambda;
  double determinant_residual = 0.0;  // |det(I - M)| at the root
  double bs_norm = 0.0;               // largest singular value of M
  double bound_lhs = 0.0;             // |sin w / w|
  double bound_rhs = 0.0;             // l1_norm / (2 pi b)
  bool satisfied = false;             // lhs <= rhs (1 + 1e-6)
};

struct SearchSpec {
  double delta_margin = 1e-3;  // search Re w in [delta, pi - delta]
  double imax = 0.0;           // <= 0: asinh(max(10, 4 * bound_rhs))
  int grid_re = 40;
  int grid_im = 40;
  int newton_cap = 50;
  double det_tol = 1e-9;       // absolute |det| at accepted roots
  double dedupe_tol = 1e-8;
  double fd_step = 1e-6;       // central-difference step for d(det)/dw
  int coarse_nodes = 96;       // node count for the scan/Newton stage
};

BSMatrix assemble(const Potential& V, const OmegaPoint& omega, double b,
                  const QuadratureSpec& q);

// Largest singular value (dense SVD; deterministic for a given matrix).
double bs_norm(const BSMatrix& M);

// det(I - M) via pivoted LU with log-scaled accumulation.
cplx fredholm_det(const BSMatrix& M);

// Locates the zeros of det(I - M(w)) over the strip-0 search rectangle by a
// grid scan (local |det| minima seed damped Newton with a finite-difference
// derivative), polishes them at the full node count, and reports each root
// with its Theorem-1.1 comparison.  A root violating the bound raises
// BoundViolation; an empty result is a valid outcome.
std::vector<EigenReport> find_eigenvalues(const Potential& V, double b,
                                          const QuadratureSpec& q,
                                          const SearchSpec& s = {});

// Independent recomputation of both sides of the eigenvalue bound.
bool verify_bound(const EigenReport& report, const Potential& V, double b);

}  // namespace coshspec
