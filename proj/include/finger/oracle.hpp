#pragma once

// Energy-based reference computations used to cross-check the closed-form
// dynamics. Nothing here calls into dynamics.cpp: every quantity comes from
// link kinematics and central differences of kinetic/potential energy.

#include <Eigen/Dense>

#include "finger/params.hpp"

namespace finger::oracle {

struct LagrangianTerms {
  Eigen::Matrix2d mass;
  Eigen::Vector2d coriolis_torque;  // C(theta, dtheta) * dtheta
  Eigen::Vector2d gravity;
};

inline constexpr double kDefaultStep = 1e-6;
/// The reduced inertia is small, so the elimination oracle uses a
/// fourth-order stencil at a wider step to keep round-off out of x1''.
inline constexpr double kEliminationStep = 1e-4;

double kinetic_energy(const FingerParams& p, const Eigen::Vector2d& theta,
                      const Eigen::Vector2d& dtheta);
/// Gravitational potential only; springs are excluded.
double potential_energy(const FingerParams& p, const Eigen::Vector2d& theta);

LagrangianTerms lagrangian_oracle(const FingerParams& p, const Eigen::Vector2d& theta,
                                  const Eigen::Vector2d& dtheta, double h = kDefaultStep);

/// Proximal acceleration of the whole constrained mechanism (finger, slider,
/// rotor) from the one-coordinate Lagrangian obtained by substituting the
/// tendon constraint into the energies. tau_a is the motor torque.
double eliminated_acceleration(const FingerParams& fp, const ActuatorParams& ap, double x1,
                               double x2, double tau_a, double h = kEliminationStep);

/// Mechanical energy of the constrained mechanism (kinetic + gravity + springs).
double constrained_energy(const FingerParams& fp, const ActuatorParams& ap, double x1, double x2);

}  // namespace finger::oracle
