#include "birman_schwinger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "errors.hpp"
#include "parallel.hpp"

namespace coshspec {

namespace {

constexpr double kPi = std::numbers::pi;

struct NystromPlan {
  double b = 1.0;
  std::vector<double> nodes;
  std::vector<double> weights;
  Eigen::VectorXcd u;  // sqrt(w_i) Y(x_i)
  Eigen::VectorXcd v;  // sqrt(w_i) X(x_i)
};

NystromPlan make_plan(const Potential& V, double b, const QuadratureSpec& q) {
  if (V.kind() == PotentialKind::delta)
    throw InvalidArgument("birman_schwinger: delta couplings are handled by the rank-one model");
  if (b <= 0.0) throw InvalidArgument("birman_schwinger: b must be positive");
  NystromPlan plan;
  plan.b = b;
  const double L = q.truncation > 0.0 ? q.truncation : V.support_radius();
  panel_rule(-L, L, q.panels, q.nodes_per_panel, plan.nodes, plan.weights);
  const BSFactorization f = factorize(V);
  const auto n = static_cast<Eigen::Index>(plan.nodes.size());
  plan.u.resize(n);
  plan.v.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sw = std::sqrt(plan.weights[static_cast<std::size_t>(i)]);
    const double x = plan.nodes[static_cast<std::size_t>(i)];
    plan.u(i) = sw * f.Y(x);
    plan.v(i) = sw * f.X(x);
  }
  return plan;
}

Eigen::MatrixXcd assemble_matrix(const NystromPlan& plan, cplx w) {
  const cplx sw = std::sin(w);
  if (std::abs(sw) < 1e-14)
    throw SingularOmega("birman_schwinger: sin(omega) vanishes");
  const cplx pref = 1.0 / (2.0 * plan.b * sw);
  const cplx g0 = w / (2.0 * kPi * plan.b * sw);
  const auto n = static_cast<Eigen::Index>(plan.nodes.size());
  Eigen::MatrixXcd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    A(i, i) = plan.u(i) * g0 * plan.v(i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = std::abs(plan.nodes[static_cast<std::size_t>(i)] -
                                plan.nodes[static_cast<std::size_t>(j)]);
      const cplx g = pref * sinh_ratio(w, d / plan.b);
      A(i, j) = plan.u(i) * g * plan.v(j);
      A(j, i) = plan.u(j) * g * plan.v(i);
    }
  }
  return A;
}

struct LogDet {
  double log_mag = 0.0;  // log |det(I - M)|
  double arg = 0.0;      // accumulated argument (not reduced mod 2 pi)
  bool zero = false;
};

LogDet logdet_i_minus(const Eigen::MatrixXcd& M) {
  Eigen::MatrixXcd A = -M;
  A.diagonal().array() += 1.0;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  LogDet out;
  const auto& LU = lu.matrixLU();
  for (Eigen::Index i = 0; i < LU.rows(); ++i) {
    const cplx d = LU(i, i);
    if (d == cplx(0.0, 0.0)) {
      out.zero = true;
      return out;
    }
    out.log_mag += std::log(std::abs(d));
    out.arg += std::arg(d);
  }
  if (lu.permutationP().determinant() < 0) out.arg += kPi;
  return out;
}

cplx logdet_to_complex(const LogDet& d) {
  if (d.zero) return {0.0, 0.0};
  const double m = std::exp(std::min(d.log_mag, 709.0));
  return std::polar(m, std::fmod(d.arg, 2.0 * kPi));
}

double logdet_abs(const LogDet& d) {
  if (d.zero) return 0.0;
  return std::exp(std::min(d.log_mag, 709.0));
}

// Newton iteration on det(I - M(w)) = 0.  The update uses the logarithmic
// derivative f'/f from central differences of log-scaled determinants, so
// no determinant magnitude ever needs to be representable.
std::optional<cplx> newton_det(const NystromPlan& plan, cplx seed, double imax,
                               const SearchSpec& s, int cap) {
  cplx w = seed;
  double last_step = 1.0;
  try {
    for (int it = 0; it < cap; ++it) {
      if (w.real() < 0.5 * s.delta_margin || w.real() > kPi - 0.5 * s.delta_margin ||
          std::abs(w.imag()) > imax + 0.5)
        return std::nullopt;
      const LogDet d0 = logdet_i_minus(assemble_matrix(plan, w));
      // The step-size condition rejects "flat" regions where |det| is
      // spuriously small without a nearby zero; truly deep minima pass.
      if (logdet_abs(d0) <= s.det_tol && (last_step <= 1e-7 || logdet_abs(d0) <= 1e-13))
        return w;
      const double h = s.fd_step;
      const LogDet dp = logdet_i_minus(assemble_matrix(plan, w + h));
      const LogDet dm = logdet_i_minus(assemble_matrix(plan, w - h));
      if (d0.zero) return w;  // exactly singular: we are on a root
      if (dp.zero || dm.zero) {
        w += cplx(0.37 * h, 0.41 * h);  // stencil hit a root; re-center
        continue;
      }
      const cplx gp = std::polar(std::exp(dp.log_mag - d0.log_mag), dp.arg - d0.arg);
      const cplx gm = std::polar(std::exp(dm.log_mag - d0.log_mag), dm.arg - d0.arg);
      const cplx logder = (gp - gm) / (2.0 * h);  // f'(w)/f(w)
      if (!std::isfinite(logder.real()) || !std::isfinite(logder.imag()) ||
          std::abs(logder) < 1e-300)
        return std::nullopt;
      cplx step = -1.0 / logder;
      const double len = std::abs(step);
      if (len > 0.25) step *= 0.25 / len;
      w += step;
      last_step = std::abs(step);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
    }
  } catch (const SingularOmega&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

BSMatrix assemble(const Potential& V, const OmegaPoint& omega, double b,
                  const QuadratureSpec& q) {
  if (omega.strip_index != 0)
    throw InvalidArgument("assemble: omega must lie in strip 0");
  const NystromPlan plan = make_plan(V, b, q);
  BSMatrix M;
  M.omega = omega;
  M.nodes = plan.nodes;
  M.weights = plan.weights;
  M.entries = assemble_matrix(plan, omega.value);
  return M;
}

double bs_norm(const BSMatrix& M) {
  if (M.entries.rows() == 0) return 0.0;
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(M.entries);
  return svd.singularValues()(0);
}

cplx fredholm_det(const BSMatrix& M) {
  if (M.entries.rows() == 0) return {1.0, 0.0};
  return logdet_to_complex(logdet_i_minus(M.entries));
}

std::vector<EigenReport> find_eigenvalues(const Potential& V, double b,
                                          const QuadratureSpec& q, const SearchSpec& s) {
  const double l1 = V.l1_norm();
  if (l1 <= 0.0) return {};
  const double rhs = l1 / (2.0 * kPi * b);
  const double imax = s.imax > 0.0 ? s.imax : std::asinh(std::max(10.0, 4.0 * rhs));

  const NystromPlan full = make_plan(V, b, q);
  QuadratureSpec cq = q;
  if (s.coarse_nodes > 0 && q.total_nodes() > s.coarse_nodes) {
    cq.nodes_per_panel = std::min(q.nodes_per_panel, 16);
    cq.panels = std::max(1, (s.coarse_nodes + cq.nodes_per_panel - 1) / cq.nodes_per_panel);
  }
  const bool two_stage = cq.total_nodes() != q.total_nodes();
  const NystromPlan coarse = two_stage ? make_plan(V, b, cq) : full;

  // |det| landscape on the seed grid; local minima start the Newton runs.
  const int gr = std::max(4, s.grid_re), gi = std::max(4, s.grid_im);
  const double re_lo = s.delta_margin, re_hi = kPi - s.delta_margin;
  std::vector<double> landscape(static_cast<std::size_t>(gr) * gi);
  parallel_for(landscape.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx) % gr;
    const int j = static_cast<int>(idx) / gr;
    const cplx w(re_lo + (re_hi - re_lo) * i / (gr - 1.0),
                 -imax + 2.0 * imax * j / (gi - 1.0));
    try {
      const LogDet d = logdet_i_minus(assemble_matrix(coarse, w));
      landscape[idx] = d.zero ? -1e308 : d.log_mag;
    } catch (const SingularOmega&) {
      landscape[idx] = 1e308;
    }
  });
  std::vector<cplx> seeds;
  for (int j = 0; j < gi; ++j)
    for (int i = 0; i < gr; ++i) {
      const double here = landscape[static_cast<std::size_t>(j) * gr + i];
      bool is_min = here < 1e307;
      for (int dj = -1; dj <= 1 && is_min; ++dj)
        for (int di = -1; di <= 1 && is_min; ++di) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || ii >= gr || jj < 0 || jj >= gi) continue;
          if (landscape[static_cast<std::size_t>(jj) * gr + ii] < here) is_min = false;
        }
      if (is_min)
        seeds.emplace_back(re_lo + (re_hi - re_lo) * i / (gr - 1.0),
                           -imax + 2.0 * imax * j / (gi - 1.0));
    }

  std::vector<cplx> candidates(seeds.size(), cplx(1e300, 0.0));
  parallel_for(seeds.size(), [&](std::size_t k) {
    const auto rough = newton_det(coarse, seeds[k], imax, s, s.newton_cap);
    if (!rough) return;
    const auto fine = two_stage ? newton_det(full, *rough, imax, s, 12) : rough;
    if (fine) candidates[k] = *fine;
  });

  std::vector<cplx> roots;
  for (cplx w : candidates) {
    if (w.real() > 1e299) continue;
    if (w.real() < 0.5 * s.delta_margin || w.real() > kPi - 0.5 * s.delta_margin) continue;
    if (std::abs(w.imag()) > imax + 0.5) continue;
    roots.push_back(w);
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b2) {
    return a.real() != b2.real() ? a.real() < b2.real() : a.imag() < b2.imag();
  });
  std::vector<cplx> unique_roots;
  for (cplx w : roots) {
    bool dup = false;
    for (cplx u : unique_roots)
      if (std::abs(w - u) < s.dedupe_tol) { dup = true; break; }
    if (!dup) unique_roots.push_back(w);
  }

  std::vector<EigenReport> reports;
  for (cplx w : unique_roots) {
    EigenReport rep;
    rep.omega = OmegaPoint(w);
    rep.lambda = lambda_of_omega(rep.omega);
    const Eigen::MatrixXcd M = assemble_matrix(full, w);
    rep.determinant_residual = logdet_abs(logdet_i_minus(M));
    const Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
    rep.bs_norm = svd.singularValues()(0);
    rep.bound_lhs = std::abs(sin_ratio(w));
    rep.bound_rhs = rhs;
    rep.satisfied = rep.bound_lhs <= rep.bound_rhs * (1.0 + 1e-6);
    if (!rep.satisfied) {
      std::ostringstream msg;
      msg << "find_eigenvalues: located root omega = (" << w.real() << ", " << w.imag()
          << ") violates the eigenvalue bound: |sin w/w| = " << rep.bound_lhs
          << " > " << rep.bound_rhs << " = |V|_1/(2 pi b); "
          << "suspect quadrature failure (nodes = " << full.nodes.size() << ")";
      throw BoundViolation(msg.str());
    }
    reports.push_back(rep);
  }
  return reports;
}

bool verify_bound(const EigenReport& report, const Potential& V, double b) {
  const double lhs = std::abs(sin_ratio(report.omega.value));
  const double rhs = V.l1_norm() / (2.0 * kPi * b);
  return lhs <= rhs * (1.0 + 1e-6);
}

}  // namespace coshspec
