#include "unruh/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "unruh/dirac_field.hpp"

namespace unruh {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

void check_grid(const ParamGrid& g) {
  if (g.count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (g.count == 1 && g.start != g.stop) {
    throw std::invalid_argument("single-point grid requires start == stop");
  }
  if (!(g.start <= g.stop)) throw std::invalid_argument("grid start must be <= stop");
}

void check_spec(const SweepSpec& spec) {
  check_grid(spec.grid);
  if (spec.alpha_values.empty()) throw std::invalid_argument("no alpha values");
  for (double a : spec.alpha_values) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (spec.field_kind == FieldKind::dirac) {
    if (!(spec.grid.stop <= kQuarterPi)) {
      throw std::invalid_argument("dirac grid must stay within [0, pi/4]");
    }
  }
  if (!(spec.grid.start >= 0.0)) throw std::invalid_argument("grid start must be >= 0");
  if (!(spec.series_tol > 0.0)) throw std::invalid_argument("series_tol must be > 0");
}

// Single-point evaluation shared by sweep and the optimizer objectives.
CurvePoint evaluate(FieldKind kind, double alpha, double param, double series_tol,
                    const SeriesLimits& limits) {
  CurvePoint pt;
  pt.alpha = alpha;
  pt.param = param;
  if (kind == FieldKind::scalar) {
    const auto rep = scalar_coherence(alpha, ScalarFrame::from_r(param), series_tol, limits);
    pt.coherence = rep.value;
    pt.tail_guarantee = rep.tail_guarantee;
  } else if (param >= kQuarterPi) {
    // theta = pi/4 itself: the infinite-acceleration closed form.
    pt.coherence = dirac_limit_coherence(alpha);
    pt.tail_guarantee = 0.0;
  } else {
    pt.coherence = dirac_coherence(alpha, DiracFrame::from_theta(param)).value;
    pt.tail_guarantee = 0.0;
  }
  return pt;
}

}  // namespace

double ParamGrid::at(std::int64_t i) const {
  if (count == 1 || i == count - 1) return stop;
  return start + static_cast<double>(i) * (stop - start) / static_cast<double>(count - 1);
}

std::vector<CurvePoint> sweep(const SweepSpec& spec) {
  check_spec(spec);
  std::vector<CurvePoint> out;
  out.reserve(spec.alpha_values.size() * static_cast<std::size_t>(spec.grid.count));
  for (double alpha : spec.alpha_values) {
    for (std::int64_t i = 0; i < spec.grid.count; ++i) {
      out.push_back(evaluate(spec.field_kind, alpha, spec.grid.at(i), spec.series_tol,
                             spec.limits));
    }
  }
  return out;
}

MaximizeResult maximize_unimodal(const std::function<double(double)>& f, double lo,
                                 double hi, double tol_x, double scan_tol) {
  if (!(lo < hi)) throw std::invalid_argument("need lo < hi");
  if (!(tol_x > 0.0)) throw std::invalid_argument("tol_x must be > 0");

  // Coarse scan: verify a single peak and bracket it.
  constexpr int kScan = 64;
  std::array<double, kScan> xs{};
  std::array<double, kScan> vs{};
  for (int i = 0; i < kScan; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / (kScan - 1);
    vs[i] = f(xs[i]);
  }
  int peaks = 0;
  int best = 0;
  for (int i = 0; i < kScan; ++i) {
    if (vs[i] > vs[best]) best = i;
    const bool up = (i == 0) || vs[i] > vs[i - 1] + scan_tol;
    const bool down = (i == kScan - 1) || vs[i] > vs[i + 1] + scan_tol;
    if (up && down) ++peaks;
  }
  if (peaks > 1) {
    throw UnimodalityError("objective shows " + std::to_string(peaks) +
                           " separated local maxima on the coarse scan");
  }

  double a = xs[std::max(best - 1, 0)];
  double b = xs[std::min(best + 1, kScan - 1)];

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  std::int64_t iters = 0;
  while (b - a > tol_x) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    ++iters;
  }

  MaximizeResult res;
  res.x_star = fc > fd ? c : d;
  res.f_star = std::max(fc, fd);
  res.iterations = iters;
  return res;
}

RidgePoint maximize_alpha(FieldKind kind, double param, double tol_x, double series_tol,
                          const SeriesLimits& limits) {
  if (!(tol_x > 0.0)) throw std::invalid_argument("tol_x must be > 0");
  if (kind == FieldKind::dirac && !(param >= 0.0 && param <= kQuarterPi)) {
    throw std::invalid_argument("dirac parameter must lie in [0, pi/4]");
  }
  auto objective = [&](double alpha) {
    return evaluate(kind, alpha, param, series_tol, limits).coherence;
  };
  const auto res = maximize_unimodal(objective, 0.0, 1.0, tol_x);
  return RidgePoint{param, res.x_star, res.f_star};
}

std::vector<RidgePoint> ridge(const ParamGrid& theta_grid, double tol_x) {
  check_grid(theta_grid);
  if (!(theta_grid.start >= 0.0 && theta_grid.stop <= kQuarterPi)) {
    throw std::invalid_argument("ridge grid must stay within [0, pi/4]");
  }
  std::vector<RidgePoint> out;
  out.reserve(static_cast<std::size_t>(theta_grid.count));
  for (std::int64_t i = 0; i < theta_grid.count; ++i) {
    out.push_back(maximize_alpha(FieldKind::dirac, theta_grid.at(i), tol_x));
  }
  return out;
}

std::vector<LossPoint> loss_curve(const ParamGrid& alpha_grid) {
  check_grid(alpha_grid);
  if (!(alpha_grid.start >= 0.0 && alpha_grid.stop <= 1.0)) {
    throw std::invalid_argument("alpha grid must stay within [0, 1]");
  }
  std::vector<LossPoint> out;
  out.reserve(static_cast<std::size_t>(alpha_grid.count));
  const DiracFrame rest = DiracFrame::from_theta(0.0);
  for (std::int64_t i = 0; i < alpha_grid.count; ++i) {
    const double alpha = alpha_grid.at(i);
    LossPoint pt;
    pt.alpha = alpha;
    pt.c_at_zero = dirac_coherence(alpha, rest).value;
    pt.c_at_limit = dirac_limit_coherence(alpha);
    pt.delta = dirac_coherence_loss(alpha);
    out.push_back(pt);
  }
  return out;
}

}  // namespace unruh
