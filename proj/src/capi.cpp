#include "coshspec.h"

#include <cstring>
#include <new>
#include <span>
#include <string>

#include "birman_schwinger.hpp"
#include "delta_model.hpp"
#include "errors.hpp"
#include "potential.hpp"
#include "quadrature.hpp"
#include "resolvent.hpp"
#include "spectral.hpp"
#include "variational.hpp"

using namespace coshspec;

struct coshspec_potential {
  Potential value;
};

namespace {

thread_local std::string g_last_error;

static_assert(static_cast<int>(errc::invalid_argument) == COSHSPEC_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(errc::parse) == COSHSPEC_ERR_PARSE);
static_assert(static_cast<int>(errc::validation) == COSHSPEC_ERR_VALIDATION);
static_assert(static_cast<int>(errc::singular_omega) == COSHSPEC_ERR_SINGULAR_OMEGA);
static_assert(static_cast<int>(errc::cut_point) == COSHSPEC_ERR_CUT_POINT);
static_assert(static_cast<int>(errc::zero_displacement) == COSHSPEC_ERR_ZERO_DISPLACEMENT);
static_assert(static_cast<int>(errc::domain) == COSHSPEC_ERR_DOMAIN);
static_assert(static_cast<int>(errc::tail_too_fat) == COSHSPEC_ERR_TAIL_TOO_FAT);
static_assert(static_cast<int>(errc::quadrature_diverged) == COSHSPEC_ERR_QUADRATURE_DIVERGED);
static_assert(static_cast<int>(errc::no_convergence) == COSHSPEC_ERR_NO_CONVERGENCE);
static_assert(static_cast<int>(errc::bound_violation) == COSHSPEC_ERR_BOUND_VIOLATION);
static_assert(static_cast<int>(errc::winding_mismatch) == COSHSPEC_ERR_WINDING_MISMATCH);
static_assert(static_cast<int>(errc::not_a_root) == COSHSPEC_ERR_NOT_A_ROOT);
static_assert(static_cast<int>(errc::not_nonnegative) == COSHSPEC_ERR_NOT_NONNEGATIVE);
static_assert(static_cast<int>(errc::certification_failed) ==
              COSHSPEC_ERR_CERTIFICATION_FAILED);
static_assert(static_cast<int>(errc::internal) == COSHSPEC_ERR_INTERNAL);

cplx in(coshspec_complex z) { return {z.re, z.im}; }
coshspec_complex out(cplx z) { return {z.real(), z.imag()}; }

template <typename F>
int guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return COSHSPEC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return COSHSPEC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return COSHSPEC_ERR_INTERNAL;
  }
}

QuadratureSpec to_spec(const coshspec_quadrature* q) {
  QuadratureSpec spec;
  if (q) {
    if (q->truncation > 0.0) spec.truncation = q->truncation;
    if (q->panels > 0) spec.panels = q->panels;
    if (q->nodes_per_panel > 0) spec.nodes_per_panel = q->nodes_per_panel;
  }
  return spec;
}

SearchSpec to_search(const coshspec_search* s) {
  SearchSpec spec;
  if (s) {
    if (s->delta_margin > 0.0) spec.delta_margin = s->delta_margin;
    if (s->imax > 0.0) spec.imax = s->imax;
    if (s->grid_re > 0) spec.grid_re = s->grid_re;
    if (s->grid_im > 0) spec.grid_im = s->grid_im;
    if (s->newton_cap > 0) spec.newton_cap = s->newton_cap;
  }
  return spec;
}

}  // namespace

extern "C" {

const char* coshspec_status_name(int status) {
  switch (status) {
    case COSHSPEC_OK: return "ok";
    case COSHSPEC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case COSHSPEC_ERR_PARSE: return "parse_error";
    case COSHSPEC_ERR_VALIDATION: return "validation_error";
    case COSHSPEC_ERR_SINGULAR_OMEGA: return "singular_omega";
    case COSHSPEC_ERR_CUT_POINT: return "cut_point";
    case COSHSPEC_ERR_ZERO_DISPLACEMENT: return "zero_displacement";
    case COSHSPEC_ERR_DOMAIN: return "domain_error";
    case COSHSPEC_ERR_TAIL_TOO_FAT: return "tail_too_fat";
    case COSHSPEC_ERR_QUADRATURE_DIVERGED: return "quadrature_diverged";
    case COSHSPEC_ERR_NO_CONVERGENCE: return "no_convergence";
    case COSHSPEC_ERR_BOUND_VIOLATION: return "bound_violation";
    case COSHSPEC_ERR_WINDING_MISMATCH: return "winding_mismatch";
    case COSHSPEC_ERR_NOT_A_ROOT: return "not_a_root";
    case COSHSPEC_ERR_NOT_NONNEGATIVE: return "not_nonnegative";
    case COSHSPEC_ERR_CERTIFICATION_FAILED: return "certification_failed";
    case COSHSPEC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* coshspec_last_error(void) { return g_last_error.c_str(); }

int coshspec_lambda_of_omega(coshspec_complex omega, coshspec_complex* lambda,
                             int* on_cut) {
  return guarded([&] {
    const SpectralParam lam = lambda_of_omega(OmegaPoint(in(omega)));
    if (lambda) *lambda = out(lam.value);
    if (on_cut) *on_cut = lam.on_cut ? 1 : 0;
  });
}

int coshspec_omega_of_lambda(coshspec_complex lambda, coshspec_complex* omega,
                             int* strip_index, int* half_plane) {
  return guarded([&] {
    const OmegaPoint w = omega_of_lambda(SpectralParam(in(lambda)));
    if (omega) *omega = out(w.value);
    if (strip_index) *strip_index = w.strip_index;
    if (half_plane) *half_plane = w.half_plane;
  });
}

double coshspec_symbol(double k, double b) { return symbol(k, b); }

int coshspec_strip_index(coshspec_complex omega) {
  return OmegaPoint(in(omega)).strip_index;
}

int coshspec_sin_ratio(coshspec_complex omega, coshspec_complex* result) {
  return guarded([&] {
    if (result) *result = out(sin_ratio(in(omega)));
  });
}

int coshspec_resolvent_kernel(coshspec_complex omega, double b, double x,
                              coshspec_complex* result) {
  return guarded([&] {
    const cplx v = kernel(OmegaPoint(in(omega)), b, x);
    if (result) *result = out(v);
  });
}

int coshspec_resolvent_diagonal(coshspec_complex omega, double b,
                                coshspec_complex* result) {
  return guarded([&] {
    const cplx v = diagonal(OmegaPoint(in(omega)), b);
    if (result) *result = out(v);
  });
}

int coshspec_resolvent_kernel_ft(coshspec_complex omega, double b, double x,
                                 coshspec_complex* result) {
  return guarded([&] {
    const cplx v = kernel_ft_form(OmegaPoint(in(omega)), b, x);
    if (result) *result = out(v);
  });
}

int coshspec_resolvent_bound_ratio(coshspec_complex omega, double b, const double* xs,
                                   size_t count, double* max_ratio) {
  return guarded([&] {
    const BoundCheckReport rep =
        kernel_bound_check(OmegaPoint(in(omega)), b, std::span<const double>(xs, count));
    if (max_ratio) *max_ratio = rep.max_ratio;
  });
}

int coshspec_resolvent_fourier_residual(coshspec_complex omega, double b, double k,
                                        const coshspec_quadrature* quad,
                                        double* residual) {
  return guarded([&] {
    const double r = fourier_roundtrip_residual(OmegaPoint(in(omega)), b, k, to_spec(quad));
    if (residual) *residual = r;
  });
}

int coshspec_diagonal_asymptotics(double b, double* edge_ratio, double* tail_ratio,
                                  int* ok) {
  return guarded([&] {
    const AsymptoticsReport rep = diagonal_asymptotics_check(b);
    if (edge_ratio) *edge_ratio = rep.edge_ratio;
    if (tail_ratio) *tail_ratio = rep.tail_ratio;
    if (ok) *ok = rep.ok ? 1 : 0;
  });
}

int coshspec_three_lines_check(coshspec_complex alpha, double x, int* holds) {
  return guarded([&] {
    const bool h = three_lines_check(in(alpha), x);
    if (holds) *holds = h ? 1 : 0;
  });
}

int coshspec_potential_from_json(const char* text, coshspec_potential** result) {
  return guarded([&] {
    if (!text || !result) throw InvalidArgument("potential_from_json: null argument");
    *result = new coshspec_potential{Potential::from_json(text)};
  });
}

void coshspec_potential_free(coshspec_potential* p) { delete p; }

int coshspec_potential_kind(const coshspec_potential* p) {
  if (!p) return -1;
  return static_cast<int>(p->value.kind());
}

int coshspec_potential_eval(const coshspec_potential* p, double x,
                            coshspec_complex* result) {
  return guarded([&] {
    if (!p) throw InvalidArgument("potential_eval: null potential");
    const cplx v = p->value(x);
    if (result) *result = out(v);
  });
}

int coshspec_potential_l1_norm(const coshspec_potential* p, double* result) {
  return guarded([&] {
    if (!p) throw InvalidArgument("potential_l1_norm: null potential");
    const double v = p->value.l1_norm();
    if (result) *result = v;
  });
}

int coshspec_potential_factors(const coshspec_potential* p, double x,
                               coshspec_complex* X, coshspec_complex* Y) {
  return guarded([&] {
    if (!p) throw InvalidArgument("potential_factors: null potential");
    const BSFactorization f = factorize(p->value);
    if (X) *X = out(f.X(x));
    if (Y) *Y = out(f.Y(x));
  });
}

int coshspec_bs_find_eigenvalues(const coshspec_potential* p, double b,
                                 const coshspec_quadrature* quad,
                                 const coshspec_search* search,
                                 coshspec_eigen_report** reports, size_t* count) {
  return guarded([&] {
    if (!p || !reports || !count)
      throw InvalidArgument("bs_find_eigenvalues: null argument");
    const auto found = find_eigenvalues(p->value, b, to_spec(quad), to_search(search));
    auto* arr = new coshspec_eigen_report[found.size() > 0 ? found.size() : 1];
    for (std::size_t i = 0; i < found.size(); ++i) {
      arr[i].omega = out(found[i].omega.value);
      arr[i].lambda = out(found[i].lambda.value);
      arr[i].det_residual = found[i].determinant_residual;
      arr[i].bs_norm = found[i].bs_norm;
      arr[i].bound_lhs = found[i].bound_lhs;
      arr[i].bound_rhs = found[i].bound_rhs;
      arr[i].satisfied = found[i].satisfied ? 1 : 0;
    }
    *reports = arr;
    *count = found.size();
  });
}

void coshspec_reports_free(coshspec_eigen_report* reports) { delete[] reports; }

int coshspec_delta_condition(coshspec_complex omega, double b, coshspec_complex c,
                             coshspec_complex* result) {
  return guarded([&] {
    const DeltaModel m = DeltaModel::from_coupling(b, in(c));
    if (result) *result = out(delta_condition(in(omega), m));
  });
}

int coshspec_delta_solve_all(double b, coshspec_complex c, int max_strip, double imax,
                             coshspec_delta_root** roots, size_t* count) {
  return guarded([&] {
    if (!roots || !count) throw InvalidArgument("delta_solve_all: null argument");
    const DeltaModel m = DeltaModel::from_coupling(b, in(c));
    const auto found = solve_all(m, max_strip, imax);
    auto* arr = new coshspec_delta_root[found.size() > 0 ? found.size() : 1];
    for (std::size_t i = 0; i < found.size(); ++i) {
      arr[i].omega = out(found[i].omega);
      arr[i].strip = found[i].strip;
      arr[i].residual = found[i].residual;
    }
    *roots = arr;
    *count = found.size();
  });
}

void coshspec_delta_roots_free(coshspec_delta_root* roots) { delete[] roots; }

int coshspec_delta_trace(double r_over_2pi, int theta_steps, int max_strip,
                         coshspec_trace_record** records, size_t* count) {
  return guarded([&] {
    if (!records || !count) throw InvalidArgument("delta_trace: null argument");
    const auto traces = trace_branches(r_over_2pi, theta_steps, max_strip);
    std::size_t total = 0;
    for (const auto& tr : traces) total += tr.records.size();
    auto* arr = new coshspec_trace_record[total > 0 ? total : 1];
    std::size_t k = 0;
    for (const auto& tr : traces)
      for (const auto& rec : tr.records) {
        arr[k].theta = rec.theta;
        arr[k].omega = out(rec.omega);
        arr[k].lambda = out(rec.lambda);
        arr[k].strip = rec.strip;
        arr[k].branch_id = tr.branch_id;
        arr[k].residual = rec.residual;
        arr[k].boundary = rec.boundary ? 1 : 0;
        arr[k].marker = rec.marker ? 1 : 0;
        arr[k].collapsed = tr.collapsed ? 1 : 0;
        arr[k].exited = tr.exited ? 1 : 0;
        ++k;
      }
    *records = arr;
    *count = total;
  });
}

void coshspec_trace_free(coshspec_trace_record* records) { delete[] records; }

int coshspec_delta_eigenfunction(double b, coshspec_complex c, coshspec_complex omega,
                                 double x, coshspec_complex* result) {
  return guarded([&] {
    const DeltaModel m = DeltaModel::from_coupling(b, in(c));
    const cplx v = eigenfunction(m, in(omega), x);
    if (result) *result = out(v);
  });
}

int coshspec_delta_fourier_residual(double b, coshspec_complex c, coshspec_complex omega,
                                    double k, double* result) {
  return guarded([&] {
    const DeltaModel m = DeltaModel::from_coupling(b, in(c));
    const double v = rank_one_fourier_residual(m, in(omega), k);
    if (result) *result = v;
  });
}

double coshspec_variational_kinetic(double n, double b) { return kinetic_term(n, b); }

int coshspec_variational_kinetic_quadrature(double n, double b, double* result) {
  return guarded([&] {
    const double v = kinetic_term_quadrature(n, b);
    if (result) *result = v;
  });
}

int coshspec_variational_form(const coshspec_potential* p, double n, double b,
                              double* kinetic, coshspec_complex* potential_term,
                              coshspec_complex* total) {
  return guarded([&] {
    if (!p) throw InvalidArgument("variational_form: null potential");
    const TrialForm tf = form_value(p->value, n, b);
    if (kinetic) *kinetic = tf.kinetic;
    if (potential_term) *potential_term = out(tf.potential_term);
    if (total) *total = out(tf.total);
  });
}

int coshspec_variational_certify(const coshspec_potential* p, double b, double* n_star,
                                 double* total) {
  return guarded([&] {
    if (!p) throw InvalidArgument("variational_certify: null potential");
    const Certificate cert = certify_bound_state(p->value, b);
    if (n_star) *n_star = cert.n_star;
    if (total) *total = cert.total;
  });
}

}  // extern "C"
