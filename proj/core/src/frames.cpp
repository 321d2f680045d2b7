#include "unruh/frames.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace unruh {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

// Builds a ScalarFrame from em = exp(-2r), keeping 1 - tanh^2 r accurate at
// large r (1 - t*t cancels catastrophically there).
ScalarFrame frame_from_em(double r, double em) {
  const double one_plus = 1.0 + em;
  const double t = (1.0 - em) / one_plus;
  if (!(t < 1.0)) {
    throw std::invalid_argument(
        "scalar acceleration parameter too large: tanh r rounds to 1 at r = " +
        std::to_string(r));
  }
  const double one_minus_t2 = 4.0 * em / (one_plus * one_plus);
  return ScalarFrame{r, t, 1.0 / one_minus_t2};
}

void check_params(const PhysicalParams& p) {
  if (!(p.acceleration >= 0.0)) throw std::invalid_argument("acceleration must be >= 0");
  if (!(p.wave_number > 0.0)) throw std::invalid_argument("wave number must be > 0");
  if (!(p.omega > 0.0)) throw std::invalid_argument("frequency must be > 0");
  if (!(p.light_speed > 0.0)) throw std::invalid_argument("light speed must be > 0");
}

}  // namespace

ScalarFrame ScalarFrame::from_r(double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("r must be >= 0");
  if (r == 0.0) return ScalarFrame{0.0, 0.0, 1.0};
  return frame_from_em(r, std::exp(-2.0 * r));
}

DiracFrame DiracFrame::from_theta(double theta) {
  if (!(theta >= 0.0) || !(theta < kQuarterPi)) {
    throw std::invalid_argument("theta must lie in [0, pi/4)");
  }
  const double s = std::sin(theta);
  const double sin2 = s * s;
  return DiracFrame{theta, 1.0 - sin2, sin2};
}

ScalarFrame scalar_frame_from_acceleration(const PhysicalParams& p) {
  check_params(p);
  if (p.acceleration == 0.0) return ScalarFrame{0.0, 0.0, 1.0};

  const double q = std::numbers::pi * p.wave_number * p.light_speed / p.acceleration;
  const double t = std::exp(-q);           // tanh r
  const double one_minus_t = -std::expm1(-q);
  if (!(t < 1.0)) {
    throw std::invalid_argument("acceleration too large: tanh r rounds to 1");
  }
  // r = artanh t = (ln(1+t) - ln(1-t)) / 2, with the stable 1 - t.
  const double r = 0.5 * (std::log1p(t) - std::log(one_minus_t));
  const double one_minus_t2 = one_minus_t * (1.0 + t);
  return ScalarFrame{r, t, 1.0 / one_minus_t2};
}

DiracFrame dirac_frame_from_acceleration(const PhysicalParams& p) {
  check_params(p);
  if (p.acceleration == 0.0) return DiracFrame{0.0, 1.0, 0.0};

  const double q = 2.0 * std::numbers::pi * p.omega * p.light_speed / p.acceleration;
  const double e = std::exp(-q);       // tan^2 theta
  const double sin2 = e / (1.0 + e);
  const double theta = std::atan(std::sqrt(e));
  return DiracFrame{theta, 1.0 - sin2, sin2};
}

double scalar_acceleration(const ScalarFrame& f, const PhysicalParams& units) {
  if (f.t <= 0.0) return 0.0;
  return -std::numbers::pi * units.wave_number * units.light_speed / std::log(f.t);
}

double dirac_acceleration(const DiracFrame& f, const PhysicalParams& units) {
  if (f.sin2 <= 0.0) return 0.0;
  // tan^2 theta = sin2 / cos2; a = 2 pi omega c / (-ln tan^2 theta).
  return -2.0 * std::numbers::pi * units.omega * units.light_speed /
         std::log(f.sin2 / f.cos2);
}

std::variant<ScalarFrame, DiracFrame> frame_from_parameter(double value, FieldKind kind) {
  if (kind == FieldKind::scalar) return ScalarFrame::from_r(value);
  return DiracFrame::from_theta(value);
}

}  // namespace unruh
