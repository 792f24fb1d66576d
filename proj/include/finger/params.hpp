#pragma once

#include <stdexcept>
#include <string>

namespace finger {

/// Geometric, inertial, spring and pulley constants of the two-link finger.
///
/// Angles are measured from the in-plane horizontal; gravity pulls the
/// links toward the theta = -pi/2 posture. Link COMs default to mid-length
/// and link inertias to those of a uniform rod.
struct FingerParams {
  double m1 = 0.05;
  double m2 = 0.04;
  double l1 = 0.06;
  double l2 = 0.04;
  double lc1 = 0.03;
  double lc2 = 0.02;
  double i1 = 0.05 * 0.06 * 0.06 / 12.0;
  double i2 = 0.04 * 0.04 * 0.04 / 12.0;
  double r1 = 0.01;   // proximal joint pulley radius
  double r2 = 0.008;  // distal joint pulley radius
  double k1s = 0.05;
  double k2s = 0.05;
  double grav = 9.81;

  /// Params for uniform rods: lc = l/2, i = m l^2 / 12. Other fields default.
  static FingerParams uniform_rods(double m1, double m2, double l1, double l2);

  bool operator==(const FingerParams&) const = default;
};

/// Slider mass plus DC-motor mechanical and electrical constants.
struct ActuatorParams {
  double j = 1.5e-4;    // rotor inertia
  double b = 0.03;      // viscous damping
  double ra = 0.01;     // actuator pulley radius
  double ms = 0.02;     // slider mass
  double l = 1e-3;      // armature inductance
  double rarm = 1.0;    // armature resistance
  double kt = 0.05;     // torque constant
  double kb = 0.05;     // back-emf constant

  bool operator==(const ActuatorParams&) const = default;
};

/// Thrown when a parameter set violates its invariants. `field` names the
/// offending member.
class InvalidParameter : public std::invalid_argument {
 public:
  InvalidParameter(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

void validate(const FingerParams& p);
void validate(const ActuatorParams& p);

}  // namespace finger
