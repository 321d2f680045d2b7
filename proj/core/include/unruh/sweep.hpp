#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unruh/frames.hpp"
#include "unruh/scalar_field.hpp"

namespace unruh {

// Uniform grid over [start, stop]. The last point is exactly `stop`.
struct ParamGrid {
  double start = 0.0;
  double stop = 0.0;
  std::int64_t count = 0;

  double at(std::int64_t i) const;
};

struct SweepSpec {
  FieldKind field_kind = FieldKind::dirac;
  std::vector<double> alpha_values;
  ParamGrid grid;
  double series_tol = 1e-12;  // scalar field only
  SeriesLimits limits{};
};

struct CurvePoint {
  double alpha = 0.0;
  double param = 0.0;  // r or theta
  double coherence = 0.0;
  double tail_guarantee = 0.0;
};

struct RidgePoint {
  double param = 0.0;
  double alpha_star = 0.0;
  double coherence_max = 0.0;
};

struct LossPoint {
  double alpha = 0.0;
  double c_at_zero = 0.0;
  double c_at_limit = 0.0;
  double delta = 0.0;
};

// Raised when the coarse pre-scan finds more than one local maximum.
class UnimodalityError : public std::runtime_error {
 public:
  explicit UnimodalityError(const std::string& msg) : std::runtime_error(msg) {}
};

// One CurvePoint per (alpha, grid value), ordered by (alpha index, grid
// index). Deterministic: identical specs produce bit-identical output.
// For the Dirac field a grid value equal to pi/4 is evaluated with the
// infinite-acceleration closed form.
std::vector<CurvePoint> sweep(const SweepSpec& spec);

struct MaximizeResult {
  double x_star = 0.0;
  double f_star = 0.0;
  std::int64_t iterations = 0;
};

// Golden-section maximization on [lo, hi]. A 64-point pre-scan verifies
// unimodality (peaks must exceed their neighbors by more than scan_tol to
// count) and brackets the maximum.
MaximizeResult maximize_unimodal(const std::function<double(double)>& f, double lo,
                                 double hi, double tol_x, double scan_tol = 1e-9);

// Maximizes coherence over alpha in [0, 1] at fixed acceleration parameter.
// For the Dirac field, param == pi/4 routes to dirac_limit_coherence.
RidgePoint maximize_alpha(FieldKind kind, double param, double tol_x,
                          double series_tol = 1e-12, const SeriesLimits& limits = {});

// maximize_alpha for the Dirac field at every grid value.
std::vector<RidgePoint> ridge(const ParamGrid& theta_grid, double tol_x = 1e-8);

// Per-alpha coherence at theta = 0, at the infinite-acceleration limit, and
// the loss between them.
std::vector<LossPoint> loss_curve(const ParamGrid& alpha_grid);

}  // namespace unruh
