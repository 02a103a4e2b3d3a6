#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"

namespace coshspec {

// Panelized Gauss-Legendre rule.  truncation <= 0 means "derive from the
// integrand's decay" at the call site.
struct QuadratureSpec {
  double truncation = 0.0;
  int panels = 64;
  int nodes_per_panel = 16;

  int total_nodes() const { return panels * nodes_per_panel; }
};

inline constexpr int kMaxQuadratureNodes = 4096;

// n-point Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// Global nodes/weights for `panels` equal panels on [a, b].
void panel_rule(double a, double b, int panels, int nodes_per_panel,
                std::vector<double>& x, std::vector<double>& w);

template <typename F>
auto integrate_panels(F&& f, double a, double b, int panels, int nodes_per_panel)
    -> decltype(f(0.0)) {
  std::vector<double> x, w;
  panel_rule(a, b, panels, nodes_per_panel, x, w);
  decltype(f(0.0)) acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * f(x[i]);
  return acc;
}

// Adaptive panel-splitting quadrature: a 16-node Gauss rule per panel,
// bisected until the two-half refinement changes the panel value by less
// than the panel's share of the tolerance.  Throws QuadratureDiverged when
// the refinement budget runs out.
template <typename T = double, typename F>
T integrate_adaptive(F&& f, double a, double b, double abs_tol) {
  std::vector<double> gx, gw;
  gauss_legendre(16, gx, gw);
  auto rule = [&](double lo, double hi) {
    T acc{};
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < 16; ++i) acc += half * gw[i] * f(mid + half * gx[i]);
    return acc;
  };
  long budget = 200000;
  auto run = [&](auto&& self, double lo, double hi, T whole, double tol, int depth) -> T {
    if (--budget < 0) throw QuadratureDiverged("adaptive quadrature exceeded its budget");
    const double mid = 0.5 * (lo + hi);
    const T left = rule(lo, mid), right = rule(mid, hi);
    const T refined = left + right;
    if (std::abs(refined - whole) <= tol) return refined;
    if (depth >= 48) throw QuadratureDiverged("adaptive quadrature failed to converge");
    return self(self, lo, mid, left, 0.5 * tol, depth + 1) +
           self(self, mid, hi, right, 0.5 * tol, depth + 1);
  };
  return run(run, a, b, rule(a, b), abs_tol, 0);
}

}  // namespace coshspec
