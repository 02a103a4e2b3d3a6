#pragma once

#include <string>
#include <vector>

#include "spectral.hpp"

namespace coshspec {

enum class PotentialKind { gaussian_sum, grid, delta };

struct GaussianTerm {
  cplx amplitude{0.0, 0.0};
  double center = 0.0;
  double width = 1.0;  // > 0; the bump is amplitude * exp(-((x-center)/width)^2)
};

// A complex-valued integrable potential.  Three representations:
//   gaussian_sum  sum of Gaussian bumps (analytic preset)
//   grid          sampled values with linear interpolation, zero outside
//   delta         exact point coupling c * delta(x); only the rank-one
//                 model consumes it, quadrature paths reject it
//
// JSON schema (complex numbers are 2-element [re, im] arrays):
//   {"type":"gaussian_sum","terms":[{"amp":[re,im],"center":x0,"width":w},...]}
//   {"type":"grid","nodes":[...],"values":[[re,im],...]}
//   {"type":"delta","c":[re,im]}
class Potential {
public:
  static Potential gaussian_sum(std::vector<GaussianTerm> terms);
  static Potential grid(std::vector<double> nodes, std::vector<cplx> values);
  static Potential delta(cplx coupling);
  static Potential from_json(const std::string& text);

  PotentialKind kind() const { return kind_; }
  cplx coupling() const;                    // delta only
  cplx operator()(double x) const;          // pointwise value; rejects delta
  double l1_norm(double abs_tol = 1e-10) const;  // |c| for delta
  // Radius beyond which the remaining |V| mass is negligible
  // (below ~1e-13 of the total); quadrature truncates here.
  double support_radius() const;

  const std::vector<GaussianTerm>& terms() const { return terms_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<cplx>& values() const { return values_; }

private:
  Potential() = default;
  PotentialKind kind_ = PotentialKind::gaussian_sum;
  std::vector<GaussianTerm> terms_;
  std::vector<double> nodes_;
  std::vector<cplx> values_;
  cplx coupling_{0.0, 0.0};
};

// Birman-Schwinger factorization V = Y X with X = |V|^{1/2} and
// Y = V |V|^{-1/2}; both are 0 where V vanishes.
struct BSFactorization {
  const Potential* potential = nullptr;

  cplx X(double x) const;
  cplx Y(double x) const;
};

BSFactorization factorize(const Potential& V);

}  // namespace coshspec
