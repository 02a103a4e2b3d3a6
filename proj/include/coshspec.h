/* coshspec — numerical toolkit for the functional difference operator
 * W_V(b) = 2 cosh(bP) - V with complex-valued potentials.
 *
 * C interface of the shared library.  All functions return a status code
 * (COSHSPEC_OK on success); results come back through out-parameters.
 * A human-readable message for the most recent failure on the calling
 * thread is available from coshspec_last_error().
 */
#ifndef COSHSPEC_H
#define COSHSPEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct coshspec_complex {
  double re;
  double im;
} coshspec_complex;

typedef enum coshspec_status {
  COSHSPEC_OK = 0,
  COSHSPEC_ERR_INVALID_ARGUMENT = 1,
  COSHSPEC_ERR_PARSE = 2,
  COSHSPEC_ERR_VALIDATION = 3,
  COSHSPEC_ERR_SINGULAR_OMEGA = 4,
  COSHSPEC_ERR_CUT_POINT = 5,
  COSHSPEC_ERR_ZERO_DISPLACEMENT = 6,
  COSHSPEC_ERR_DOMAIN = 7,
  COSHSPEC_ERR_TAIL_TOO_FAT = 8,
  COSHSPEC_ERR_QUADRATURE_DIVERGED = 9,
  COSHSPEC_ERR_NO_CONVERGENCE = 10,
  COSHSPEC_ERR_BOUND_VIOLATION = 11,
  COSHSPEC_ERR_WINDING_MISMATCH = 12,
  COSHSPEC_ERR_NOT_A_ROOT = 13,
  COSHSPEC_ERR_NOT_NONNEGATIVE = 14,
  COSHSPEC_ERR_CERTIFICATION_FAILED = 15,
  COSHSPEC_ERR_INTERNAL = 16
} coshspec_status;

const char* coshspec_status_name(int status);
const char* coshspec_last_error(void); /* thread-local; empty if none */

/* ---- spectral parameterization ------------------------------------- */

/* lambda = -2 cos(omega); on_cut reports membership of [2, inf). */
int coshspec_lambda_of_omega(coshspec_complex omega, coshspec_complex* lambda,
                             int* on_cut);

/* Inverse map into Re omega in [0, pi]; sign(Im omega) = sign(Im lambda).
 * Fails with COSHSPEC_ERR_CUT_POINT when lambda lies on the cut. */
int coshspec_omega_of_lambda(coshspec_complex lambda, coshspec_complex* omega,
                             int* strip_index, int* half_plane);

double coshspec_symbol(double k, double b); /* 2 cosh(2 pi b k) */
int coshspec_strip_index(coshspec_complex omega);

/* sin(omega)/omega with the removable value 1 at omega = 0. */
int coshspec_sin_ratio(coshspec_complex omega, coshspec_complex* out);

/* ---- free resolvent -------------------------------------------------- */

typedef struct coshspec_quadrature {
  double truncation;     /* <= 0: derive from the integrand decay */
  int panels;            /* default 64 when zero */
  int nodes_per_panel;   /* default 16 when zero */
} coshspec_quadrature;

int coshspec_resolvent_kernel(coshspec_complex omega, double b, double x,
                              coshspec_complex* out);
int coshspec_resolvent_diagonal(coshspec_complex omega, double b, coshspec_complex* out);
int coshspec_resolvent_kernel_ft(coshspec_complex omega, double b, double x,
                                 coshspec_complex* out);

/* max |G(x)|/|G(0)| over xs; the kernel bound asserts <= 1. */
int coshspec_resolvent_bound_ratio(coshspec_complex omega, double b, const double* xs,
                                   size_t count, double* max_ratio);

/* |quadrature Fourier transform - (2 cosh(2 pi b k) + 2 cos omega)^{-1}|.
 * quad may be NULL for defaults. */
int coshspec_resolvent_fourier_residual(coshspec_complex omega, double b, double k,
                                        const coshspec_quadrature* quad, double* residual);

/* Ratio tests of the diagonal near lambda = 2 and lambda -> -inf. */
int coshspec_diagonal_asymptotics(double b, double* edge_ratio, double* tail_ratio,
                                  int* ok);

/* |cosh(alpha x)| <= cosh(x) for 0 <= Re alpha <= 1. */
int coshspec_three_lines_check(coshspec_complex alpha, double x, int* holds);

/* ---- potentials ------------------------------------------------------ */

typedef struct coshspec_potential coshspec_potential;

/* JSON schema (complex numbers are [re, im] arrays):
 *   {"type":"gaussian_sum","terms":[{"amp":[re,im],"center":x0,"width":w},...]}
 *   {"type":"grid","nodes":[...],"values":[[re,im],...]}
 *   {"type":"delta","c":[re,im]}
 */
int coshspec_potential_from_json(const char* text, coshspec_potential** out);
void coshspec_potential_free(coshspec_potential* p);

/* 0 = gaussian_sum, 1 = grid, 2 = delta */
int coshspec_potential_kind(const coshspec_potential* p);
int coshspec_potential_eval(const coshspec_potential* p, double x, coshspec_complex* out);
int coshspec_potential_l1_norm(const coshspec_potential* p, double* out);

/* Birman-Schwinger factors X = |V|^{1/2}, Y = V |V|^{-1/2} at a point. */
int coshspec_potential_factors(const coshspec_potential* p, double x,
                               coshspec_complex* X, coshspec_complex* Y);

/* ---- Birman-Schwinger eigenvalue search ------------------------------ */

typedef struct coshspec_eigen_report {
  coshspec_complex omega;
  coshspec_complex lambda;
  double det_residual;
  double bs_norm;
  double bound_lhs;  /* |sin w / w| */
  double bound_rhs;  /* l1 norm / (2 pi b) */
  int satisfied;
} coshspec_eigen_report;

typedef struct coshspec_search {
  double delta_margin; /* 0: default 1e-3 */
  double imax;         /* 0: asinh(max(10, 4 rhs)) */
  int grid_re;         /* 0: 40 */
  int grid_im;         /* 0: 40 */
  int newton_cap;      /* 0: 50 */
} coshspec_search;

/* Locates det(I - M(omega)) = 0 over strip 0 and reports each root with its
 * eigenvalue-bound comparison.  `reports` is allocated by the library and
 * released with coshspec_reports_free.  quad/search may be NULL.
 * A located root violating the bound fails with
 * COSHSPEC_ERR_BOUND_VIOLATION. */
int coshspec_bs_find_eigenvalues(const coshspec_potential* p, double b,
                                 const coshspec_quadrature* quad,
                                 const coshspec_search* search,
                                 coshspec_eigen_report** reports, size_t* count);
void coshspec_reports_free(coshspec_eigen_report* reports);

/* ---- rank-one (delta) model ------------------------------------------ */

typedef struct coshspec_delta_root {
  coshspec_complex omega;
  int strip;
  double residual;
} coshspec_delta_root;

/* sin(w)/w - c/(2 pi b) at omega. */
int coshspec_delta_condition(coshspec_complex omega, double b, coshspec_complex c,
                             coshspec_complex* out);

/* All roots with Re omega in [0, (max_strip+1) pi), |Im omega| <= imax
 * (imax <= 0 chooses a provably root-free depth).  Completeness is
 * validated by an argument-principle winding count. */
int coshspec_delta_solve_all(double b, coshspec_complex c, int max_strip, double imax,
                             coshspec_delta_root** roots, size_t* count);
void coshspec_delta_roots_free(coshspec_delta_root* roots);

typedef struct coshspec_trace_record {
  double theta;
  coshspec_complex omega;
  coshspec_complex lambda;
  int strip;
  int branch_id;
  double residual;
  int boundary; /* within 1e-9 of a strip boundary */
  int marker;   /* theta equals one of k pi/4, k = 0..7 */
  int collapsed;
  int exited;
} coshspec_trace_record;

/* theta-continuation (b = 1) of every theta = 0 root of
 * sin(w)/w = r_over_2pi e^{i theta} over theta in [0, 2 pi].  Rows are
 * ordered by (branch_id, theta). */
int coshspec_delta_trace(double r_over_2pi, int theta_steps, int max_strip,
                         coshspec_trace_record** records, size_t* count);
void coshspec_trace_free(coshspec_trace_record* records);

/* Unnormalized eigenfunction (psi(0) = 1) of the delta model at a solved
 * omega; fails with COSHSPEC_ERR_NOT_A_ROOT otherwise. */
int coshspec_delta_eigenfunction(double b, coshspec_complex c, coshspec_complex omega,
                                 double x, coshspec_complex* out);

/* Residual of the Fourier-space eigenequation at frequency k. */
int coshspec_delta_fourier_residual(double b, coshspec_complex c, coshspec_complex omega,
                                    double k, double* out);

/* ---- variational certificate ----------------------------------------- */

double coshspec_variational_kinetic(double n, double b);
int coshspec_variational_kinetic_quadrature(double n, double b, double* out);

int coshspec_variational_form(const coshspec_potential* p, double n, double b,
                              double* kinetic, coshspec_complex* potential_term,
                              coshspec_complex* total);

/* Doubles n from 1 until ((W_V - 2) u_n, u_n) < 0; requires V real >= 0,
 * V not identically zero. */
int coshspec_variational_certify(const coshspec_potential* p, double b, double* n_star,
                                 double* total);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COSHSPEC_H */
