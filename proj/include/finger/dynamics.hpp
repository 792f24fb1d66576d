#pragma once

#include <array>

#include <Eigen/Dense>

#include "finger/params.hpp"

namespace finger {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Row2 = Eigen::RowVector2d;

struct FullJointState {
  Vec2 theta = Vec2::Zero();
  Vec2 dtheta = Vec2::Zero();
};

/// Strict-feedback state: proximal angle, proximal rate, actuator torque.
struct ReducedState {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  std::array<double, 3> as_array() const { return {x1, x2, x3}; }
  static ReducedState from_array(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
  bool operator==(const ReducedState&) const = default;
};

/// Motor-side scalar plant  mpp * x1dd + cpp + gpp + kpp = tau_a.
/// cpp is the velocity torque (already multiplied by x2) and kpp the spring
/// torque (already multiplied by x1).
struct ReducedTerms {
  double mpp = 0.0;
  double cpp = 0.0;
  double gpp = 0.0;
  double kpp = 0.0;
};

/// ReducedTerms together with their closed-form partial derivatives.
struct ReducedPartials {
  ReducedTerms terms;
  double dmpp_dx1 = 0.0;
  double dcpp_dx1 = 0.0;
  double dcpp_dx2 = 0.0;
  double dgpp_dx1 = 0.0;
  double dkpp_dx1 = 0.0;
};

struct DriftGain {
  double f = 0.0;
  double g = 0.0;
};

// Two-link planar arm, theta2 measured relative to link 1.
Mat2 mass_matrix(const FingerParams& p, const Vec2& theta);
/// dM/dt along dtheta.
Mat2 mass_matrix_rate(const FingerParams& p, const Vec2& theta, const Vec2& dtheta);
/// Christoffel-symbol Coriolis matrix, so that dM/dt - 2C is skew-symmetric.
Mat2 coriolis_matrix(const FingerParams& p, const Vec2& theta, const Vec2& dtheta);
Vec2 gravity_vector(const FingerParams& p, const Vec2& theta);
Vec2 spring_torque(const FingerParams& p, const Vec2& theta);

/// Velocity constraint row A = [1, -r2/r1].
Row2 constraint_row(const FingerParams& p);
/// Null-space map D = [1; r1/r2], theta = D * theta1.
Vec2 reduction_vector(const FingerParams& p);
FullJointState expand_state(const FingerParams& p, double x1, double x2);

ReducedTerms reduced_terms(const FingerParams& fp, const ActuatorParams& ap, double x1, double x2);
ReducedPartials reduced_partials(const FingerParams& fp, const ActuatorParams& ap, double x1,
                                 double x2);
DriftGain drift_and_gain(const ReducedTerms& terms);

/// Open-loop vector field of the finger-slider-motor plant for voltage e_volt.
std::array<double, 3> state_derivative(const FingerParams& fp, const ActuatorParams& ap,
                                       const ReducedState& s, double e_volt);

/// f1 + f2, the only tendon quantity the constrained model determines.
double tendon_force_sum(const FingerParams& fp, double x1, double x2, double x1dd);

/// Multiplier of the constraint force A^T * lambda for a joint torque vector
/// tau. Solves the joint-space balance in the least-squares sense; it is exact
/// whenever tau carries the tendon force sum implied by the reduced model.
double lagrange_multiplier(const FingerParams& fp, double x1, double x2, double x1dd,
                           const Vec2& tau);

}  // namespace finger
