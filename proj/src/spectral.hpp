#pragma once

#include <complex>

namespace coshspec {

using cplx = std::complex<double>;

inline constexpr double kCutTol = 1e-12;

// A point of the spectral parameterization strip.  The map
// lambda = -2 cos(omega) sends {Re omega in [0,pi)} bijectively onto
// C \ [2,inf); larger strips index the sheets reached by analytic
// continuation (where the delta-model resonances live).
struct OmegaPoint {
  cplx value{0.0, 0.0};
  int strip_index = 0;  // floor(Re/pi); meaningful for Re >= 0
  int half_plane = 0;   // sign of Im in {-1, 0, +1}

  OmegaPoint() = default;
  explicit OmegaPoint(cplx w);
};

// A spectral value lambda together with its cut-membership flag.
struct SpectralParam {
  cplx value{0.0, 0.0};
  bool on_cut = false;  // within kCutTol of [2, inf)

  SpectralParam() = default;
  explicit SpectralParam(cplx lam);
};

struct ModelParams {
  double b = 1.0;  // Weyl parameter, > 0
};

// lambda = -2 cos(omega).
SpectralParam lambda_of_omega(const OmegaPoint& omega);

// Inverse map into the closed strip Re omega in [0,pi].  For Im lambda != 0
// the half-plane sign is preserved; real lambda < -2 maps onto the positive
// imaginary axis.  Throws CutPointError when lambda.on_cut.
OmegaPoint omega_of_lambda(const SpectralParam& lambda);

// Fourier-side multiplier of the free operator: 2 cosh(2 pi b k).
double symbol(double k, double b);

// sin(w)/w with the removable value 1 at w = 0.
cplx sin_ratio(cplx w);

// d/dw [sin(w)/w] = (w cos w - sin w)/w^2, removable value 0 at w = 0.
cplx sin_ratio_derivative(cplx w);

}  // namespace coshspec
