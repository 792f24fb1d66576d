#pragma once

#include "finger/dynamics.hpp"

namespace finger {

struct ControllerGains {
  double lambda_s = 3.4;  // error-surface slope
  double k1 = 28.0;
  double k2 = 40.0;

  bool operator==(const ControllerGains&) const = default;
};

void validate(const ControllerGains& g);

/// Desired proximal angle and its first three time derivatives.
struct ReferencePoint {
  double x1d = 0.0;
  double dx1d = 0.0;
  double ddx1d = 0.0;
  double dddx1d = 0.0;
};

struct ErrorSurface {
  double e = 0.0;
  double de = 0.0;
  double s = 0.0;
};

/// Everything the backstepping law computes in one evaluation.
struct ControlSignals {
  double e = 0.0;
  double de = 0.0;
  double s = 0.0;
  double x3d = 0.0;
  double dx3d = 0.0;
  double eta = 0.0;
  double u = 0.0;
  double e_volt = 0.0;
  double v = 0.0;
  double vdot = 0.0;
};

ErrorSurface error_surface(double x1, double x2, const ReferencePoint& ref,
                           const ControllerGains& gains);

/// Desired actuator torque that gives ds/dt = g*eta - k1*s.
/// Throws std::domain_error when g <= 0.
double virtual_control(double f, double g, const ReferencePoint& ref, double de, double s,
                       const ControllerGains& gains);

/// Total time derivative of the virtual control along the plant's vector
/// field, by the chain rule through the closed-form partials of the reduced
/// terms.
double virtual_control_rate(const FingerParams& fp, const ActuatorParams& ap,
                            const ReducedState& state, const ReferencePoint& ref,
                            const ControllerGains& gains);

double torque_loop(double dx3d, double eta, double g, double s, const ControllerGains& gains);

/// Voltage that cancels the armature dynamics so that dx3/dt = u.
double voltage_law(const ActuatorParams& ap, const FingerParams& fp, double x2, double x3,
                   double u);

double lyapunov(double s, double eta);
double lyapunov_rate(double s, double eta, const ControllerGains& gains);

ControlSignals control_step(const FingerParams& fp, const ActuatorParams& ap,
                            const ReducedState& state, const ReferencePoint& ref,
                            const ControllerGains& gains);

}  // namespace finger
