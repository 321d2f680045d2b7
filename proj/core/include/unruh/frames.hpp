#pragma once

#include <variant>

namespace unruh {

enum class FieldKind { scalar, dirac };

// Physical inputs. Natural units c = |k| = omega = 1 by default, so the
// exponent pi*|k|*c/a is just pi/a.
struct PhysicalParams {
  double acceleration = 0.0;
  double wave_number = 1.0;
  double omega = 1.0;
  double light_speed = 1.0;
};

// Bose-Einstein acceleration parameter r with cached tanh r and cosh^2 r.
// cosh2 is derived so that cosh2 * (1 - t)(1 + t) = 1 holds to rounding.
struct ScalarFrame {
  double r = 0.0;
  double t = 0.0;      // tanh r
  double cosh2 = 1.0;  // cosh^2 r

  static ScalarFrame from_r(double r);
};

// Fermi-Dirac acceleration angle theta in [0, pi/4), with cos2 + sin2 = 1
// exact by construction (cos2 stored as 1 - sin2).
struct DiracFrame {
  double theta = 0.0;
  double cos2 = 1.0;  // cos^2 theta
  double sin2 = 0.0;  // sin^2 theta

  static DiracFrame from_theta(double theta);
};

// tanh r = exp(-pi |k| c / a), extended by continuity to r = 0 at a = 0.
ScalarFrame scalar_frame_from_acceleration(const PhysicalParams& p);

// cos theta = (1 + exp(-2 pi omega c / a))^{-1/2}, theta in [0, pi/4).
DiracFrame dirac_frame_from_acceleration(const PhysicalParams& p);

// Inverses of the two conversions at the same unit parameters.
double scalar_acceleration(const ScalarFrame& f, const PhysicalParams& units);
double dirac_acceleration(const DiracFrame& f, const PhysicalParams& units);

// Builds a frame directly from the dimensionless parameter (r or theta),
// bypassing physical units. Throws on out-of-range values.
std::variant<ScalarFrame, DiracFrame> frame_from_parameter(double value, FieldKind kind);

}  // namespace unruh
