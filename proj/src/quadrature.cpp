#include "quadrature.hpp"

#include <cmath>
#include <numbers>

namespace coshspec {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be positive");
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev estimate of the i-th root, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

void panel_rule(double a, double b, int panels, int nodes_per_panel,
                std::vector<double>& x, std::vector<double>& w) {
  if (panels < 1 || nodes_per_panel < 1)
    throw InvalidArgument("panel_rule: panels and nodes_per_panel must be positive");
  if (panels * nodes_per_panel > kMaxQuadratureNodes)
    throw InvalidArgument("panel_rule: node count exceeds the 4096 cap");
  std::vector<double> gx, gw;
  gauss_legendre(nodes_per_panel, gx, gw);
  x.clear();
  w.clear();
  x.reserve(static_cast<std::size_t>(panels) * nodes_per_panel);
  w.reserve(static_cast<std::size_t>(panels) * nodes_per_panel);
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width, half = 0.5 * width;
    for (int i = 0; i < nodes_per_panel; ++i) {
      x.push_back(mid + half * gx[i]);
      w.push_back(half * gw[i]);
    }
  }
}

}  // namespace coshspec
