#include "delta_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "errors.hpp"
#include "parallel.hpp"
#include "resolvent.hpp"

namespace coshspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Newton for sin(w)/w = target with the analytic derivative; meets |f| <=
// tol and then takes one polish step.
std::optional<cplx> newton_root(cplx target, cplx seed, int cap = 60, double tol = 1e-13) {
  cplx z = seed;
  for (int it = 0; it < cap; ++it) {
    const cplx f = sin_ratio(z) - target;
    if (!finite(f)) return std::nullopt;
    const cplx d = sin_ratio_derivative(z);
    if (std::abs(d) < 1e-300) return std::nullopt;
    if (std::abs(f) <= tol) {
      z -= f / d;
      return z;
    }
    cplx step = f / d;
    const double cap_step = 0.5 * (1.0 + std::abs(z));
    const double len = std::abs(step);
    if (len > cap_step) step *= cap_step / len;
    z -= step;
    if (!finite(z)) return std::nullopt;
  }
  return std::nullopt;
}

// Root-free depth: beyond y with sinh(y) >= 10 |target| sqrt(R^2 + y^2)
// the condition |sin w / w| = |target| cannot hold.
double auto_imax(cplx target, double re_extent) {
  const double m = std::max(std::abs(target), 1e-6);
  double y = 2.0;
  for (int i = 0; i < 40; ++i)
    y = std::asinh(10.0 * m * std::hypot(re_extent + 1.0, y));
  return std::max(y, 2.0);
}

struct EdgeWalker {
  cplx target;
  long budget = 4000000;
  bool near_zero = false;

  cplx f(cplx z) const { return sin_ratio(z) - target; }

  // Accumulated argument change along z0 -> z1 (f sampled at both ends).
  double walk(cplx z0, cplx z1, cplx f0, cplx f1, int depth) {
    if (--budget < 0) throw InternalError("winding_count: walk budget exhausted");
    const double m0 = std::abs(f0), m1 = std::abs(f1);
    if (m0 < 1e-13 || m1 < 1e-13) {
      near_zero = true;
      return 0.0;
    }
    const double d = std::arg(f1 / f0);
    const bool smooth = std::abs(d) <= kPi / 3.0 && std::abs(f1 - f0) <= 0.75 * std::min(m0, m1);
    if (smooth) return d;
    if (depth >= 44) {
      near_zero = true;  // cannot separate the phase; treat as contour hit
      return 0.0;
    }
    const cplx mid = 0.5 * (z0 + z1);
    const cplx fm = f(mid);
    return walk(z0, mid, f0, fm, depth + 1) + walk(mid, z1, fm, f1, depth + 1);
  }
};

struct WindingResult {
  int count = 0;
  bool ok = false;  // false when f nearly vanishes on the contour
};

WindingResult try_winding(cplx target, double re_lo, double re_hi, double im_lo,
                          double im_hi) {
  EdgeWalker walker{target};
  const cplx c0(re_lo, im_lo), c1(re_hi, im_lo), c2(re_hi, im_hi), c3(re_lo, im_hi);
  const cplx corners[5] = {c0, c1, c2, c3, c0};
  double total = 0.0;
  for (int e = 0; e < 4 && !walker.near_zero; ++e) {
    const cplx a = corners[e], b = corners[e + 1];
    const int pieces = std::max(8, static_cast<int>(std::ceil(4.0 * std::abs(b - a))));
    cplx zp = a, fp = walker.f(zp);
    for (int i = 1; i <= pieces && !walker.near_zero; ++i) {
      const cplx z = a + (b - a) * (static_cast<double>(i) / pieces);
      const cplx fz = walker.f(z);
      total += walker.walk(zp, z, fp, fz, 0);
      zp = z;
      fp = fz;
    }
  }
  WindingResult res;
  if (walker.near_zero) return res;
  const double turns = total / kTwoPi;
  res.count = static_cast<int>(std::lround(turns));
  res.ok = std::abs(turns - res.count) < 0.05;
  return res;
}

}  // namespace

DeltaModel::DeltaModel(double b_, double r_, double theta_) : b(b_), r(r_), theta(theta_) {
  if (!(b > 0.0)) throw InvalidArgument("DeltaModel: b must be positive");
  if (!(r > 0.0)) throw InvalidArgument("DeltaModel: r must be positive");
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
}

DeltaModel DeltaModel::from_coupling(double b, cplx c) {
  return DeltaModel(b, std::abs(c), std::arg(c));
}

cplx DeltaModel::coupling() const { return std::polar(r, theta); }

cplx DeltaModel::condition_target() const { return coupling() / (kTwoPi * b); }

cplx delta_condition(cplx omega, const DeltaModel& model) {
  return sin_ratio(omega) - model.condition_target();
}

int winding_count(cplx target, double re_lo, double re_hi, double im_lo, double im_hi) {
  const WindingResult res = try_winding(target, re_lo, re_hi, im_lo, im_hi);
  if (!res.ok)
    throw WindingMismatch("winding_count: condition nearly vanishes on the contour");
  return res.count;
}

std::vector<DeltaRoot> solve_all(const DeltaModel& model, int max_strip, double imax) {
  if (max_strip < 0) throw InvalidArgument("solve_all: max_strip must be >= 0");
  const cplx target = model.condition_target();
  const double re_hi = (max_strip + 1) * kPi;  // requested region is [0, re_hi)
  const double margin = 0.5;
  const double re_search = re_hi + margin;
  const double depth = imax > 0.0 ? imax : auto_imax(target, re_search);

  // Grid-seeded Newton sweep over the (slightly enlarged) rectangle.
  const int nx = std::max(8, static_cast<int>(std::ceil(60.0 * re_search / kPi)));
  const int ny = 80;
  std::vector<cplx> found(static_cast<std::size_t>(nx) * ny, cplx(1e300, 0.0));
  parallel_for(found.size(), [&](std::size_t idx) {
    const int ix = static_cast<int>(idx) % nx;
    const int iy = static_cast<int>(idx) / nx;
    const cplx seed(re_search * (ix + 0.5) / nx, -depth + 2.0 * depth * (iy + 0.5) / (ny - 1.0));
    const auto root = newton_root(target, seed);
    if (root) found[idx] = *root;
  });

  std::vector<cplx> roots;
  for (cplx z : found) {
    if (z.real() > 1e299) continue;
    if (std::abs(sin_ratio(z) - target) > 1e-12) continue;
    // The condition is even in w: fold roundoff-negative real parts into
    // the half-plane instead of losing the axis roots.
    if (z.real() < 0.0) {
      if (z.real() < -1e-9) continue;
      z = -z;
    }
    // Cosmetic snap onto the axes, kept only when the residual stays put.
    const cplx snapped(std::abs(z.real()) < 5e-13 ? 0.0 : z.real(),
                       std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag());
    if (snapped != z && std::abs(sin_ratio(snapped) - target) <= 1e-12) z = snapped;
    if (z.real() >= re_search || std::abs(z.imag()) > depth + 1e-9) continue;
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<cplx> unique_roots;
  for (cplx z : roots) {
    bool dup = false;
    for (cplx u : unique_roots)
      if (std::abs(z - u) < 1e-8) { dup = true; break; }
    if (!dup) unique_roots.push_back(z);
  }

  // Argument-principle completeness check on a symmetric rectangle
  // [-re_w, re_w] x [-depth', depth']: the condition is even in w, so the
  // expected count doubles every off-axis root and keeps axis roots once
  // per sign of Im.
  bool validated = false;
  for (int attempt = 0; attempt < 10 && !validated; ++attempt) {
    const double re_w = re_hi + margin * (0.35 + 0.06 * attempt);
    const double im_w = depth * (1.0 + 0.013 * attempt) + 0.05 * attempt;
    int expected = 0;
    for (cplx z : unique_roots) {
      if (z.real() >= re_w) continue;
      expected += (z.real() > 1e-9) ? 2 : 1;  // axis roots have no distinct mirror
    }
    const WindingResult res = try_winding(target, -re_w, re_w, -im_w, im_w);
    if (!res.ok) continue;  // contour ran near a zero; nudge and retry
    if (res.count != expected)
      throw WindingMismatch("solve_all: winding count " + std::to_string(res.count) +
                            " does not match the " + std::to_string(expected) +
                            " roots found (seeding gap)");
    validated = true;
  }
  if (!validated)
    throw WindingMismatch("solve_all: could not place a contour clear of zeros");

  std::vector<DeltaRoot> out;
  for (cplx z : unique_roots) {
    if (z.real() >= re_hi) continue;
    DeltaRoot r;
    r.omega = z;
    r.strip = static_cast<int>(std::floor(z.real() / kPi));
    if (z.real() == 0.0) r.strip = 0;
    r.residual = std::abs(sin_ratio(z) - target);
    out.push_back(r);
  }
  return out;
}

namespace {

TraceRecord make_record(double theta, cplx omega_state, cplx target, bool marker) {
  // The condition is even in w; emit the representative with Re >= 0.
  cplx rep = omega_state.real() < 0.0 ? -omega_state : omega_state;
  TraceRecord rec;
  rec.theta = theta;
  rec.omega = rep;
  rec.lambda = -2.0 * std::cos(rep);
  rec.strip = static_cast<int>(std::floor(rep.real() / kPi));
  if (rep.real() == 0.0) rec.strip = 0;
  rec.residual = std::abs(sin_ratio(rep) - target);
  const double frac = std::abs(rep.real() - kPi * std::round(rep.real() / kPi));
  rec.boundary = frac < 1e-9;
  rec.marker = marker;
  return rec;
}

}  // namespace

std::vector<BranchTrace> trace_branches(double r_over_2pi, int theta_steps, int max_strip) {
  if (theta_steps < 64) throw InvalidArgument("trace_branches: need theta_steps >= 64");
  if (!(r_over_2pi > 0.0)) throw InvalidArgument("trace_branches: r_over_2pi must be positive");

  // Schedule: uniform grid over [0, 2 pi] merged with the k pi/4 highlights.
  struct Stop { double theta; bool marker; };
  std::vector<Stop> schedule;
  for (int j = 0; j <= theta_steps; ++j)
    schedule.push_back({kTwoPi * j / theta_steps, false});
  for (int k = 0; k <= 7; ++k) {
    const double tm = k * (kPi / 4.0);
    bool found = false;
    for (auto& s : schedule)
      if (std::abs(s.theta - tm) <= 1e-12) { s.theta = tm; s.marker = true; found = true; break; }
    if (!found) schedule.push_back({tm, true});
  }
  std::sort(schedule.begin(), schedule.end(),
            [](const Stop& a, const Stop& b) { return a.theta < b.theta; });

  const DeltaModel model0(1.0, r_over_2pi * kTwoPi, 0.0);
  const std::vector<DeltaRoot> seeds = solve_all(model0, max_strip);
  const double exit_depth = auto_imax(model0.condition_target(), (max_strip + 1) * kPi) + 1.0;

  std::vector<BranchTrace> traces(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t bi) {
    BranchTrace& tr = traces[bi];
    tr.branch_id = static_cast<int>(bi);
    tr.r_over_2pi = r_over_2pi;
    cplx state = seeds[bi].omega;
    double last_step_dist = 0.05;
    tr.records.push_back(
        make_record(0.0, state, std::polar(r_over_2pi, 0.0), schedule.front().marker));
    for (std::size_t si = 1; si < schedule.size(); ++si) {
      double th_cur = schedule[si - 1].theta;
      const double th_target = schedule[si].theta;
      const double min_step = kTwoPi / 65536.0;
      bool collapsed = false;
      while (th_cur < th_target) {
        double step = th_target - th_cur;
        bool advanced = false;
        while (step >= min_step) {
          const double th_try = std::min(th_cur + step, th_target);
          const cplx tgt = std::polar(r_over_2pi, th_try);
          const auto root = newton_root(tgt, state);
          if (root && std::abs(*root - state) <= std::max(10.0 * last_step_dist, 0.1)) {
            last_step_dist = std::max(std::abs(*root - state), 1e-6);
            state = *root;
            th_cur = th_try;
            advanced = true;
            break;
          }
          step *= 0.5;
        }
        if (!advanced) { collapsed = true; break; }
      }
      if (collapsed) {
        tr.collapsed = true;  // branch singularity; terminate this branch
        break;
      }
      if (std::abs(state.imag()) > exit_depth) {
        tr.exited = true;
        break;
      }
      tr.records.push_back(make_record(th_target, state,
                                       std::polar(r_over_2pi, th_target),
                                       schedule[si].marker));
    }
  });
  return traces;
}

cplx eigenfunction(const DeltaModel& model, cplx omega, double x) {
  if (std::abs(delta_condition(omega, model)) > 1e-8)
    throw NotARoot("eigenfunction: omega does not solve the coupling condition");
  if (x == 0.0) return {1.0, 0.0};
  return model.coupling() * kernel(OmegaPoint(omega), model.b, x);
}

double growth_rate(const DeltaModel& model, cplx omega) {
  return (omega.real() - kPi) / model.b;
}

double rank_one_fourier_residual(const DeltaModel& model, cplx omega, double k) {
  if (std::abs(delta_condition(omega, model)) > 1e-8)
    throw NotARoot("rank_one_fourier_residual: omega does not solve the coupling condition");
  const cplx c = model.coupling();
  const cplx lambda = -2.0 * std::cos(omega);
  const double mult = symbol(k, model.b);
  const cplx psi_hat = c / (mult + 2.0 * std::cos(omega));
  return std::abs((mult - lambda) * psi_hat - c);
}

}  // namespace coshspec
