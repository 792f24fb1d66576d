#include "finger/oracle.hpp"

#include <cmath>

namespace finger::oracle {

using Eigen::Matrix2d;
using Eigen::Vector2d;

double kinetic_energy(const FingerParams& p, const Vector2d& theta, const Vector2d& dtheta) {
  const double a1 = theta(0);
  const double a12 = theta(0) + theta(1);
  const double w1 = dtheta(0);
  const double w12 = dtheta(0) + dtheta(1);

  const Vector2d v1 = p.lc1 * w1 * Vector2d(-std::sin(a1), std::cos(a1));
  const Vector2d v2 = p.l1 * w1 * Vector2d(-std::sin(a1), std::cos(a1)) +
                      p.lc2 * w12 * Vector2d(-std::sin(a12), std::cos(a12));
  return 0.5 * (p.m1 * v1.squaredNorm() + p.i1 * w1 * w1 + p.m2 * v2.squaredNorm() +
                p.i2 * w12 * w12);
}

double potential_energy(const FingerParams& p, const Vector2d& theta) {
  const double y1 = p.lc1 * std::sin(theta(0));
  const double y2 = p.l1 * std::sin(theta(0)) + p.lc2 * std::sin(theta(0) + theta(1));
  return p.grav * (p.m1 * y1 + p.m2 * y2);
}

namespace {

// T is quadratic in the rates, so polarization is exact at any rate step; a
// unit step keeps round-off at machine precision.
constexpr double kRateStep = 1.0;

// Hessian of T in the rates by four-point polarization.
Matrix2d rate_hessian(const FingerParams& p, const Vector2d& theta) {
  const double h = kRateStep;
  Matrix2d m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vector2d ei = Vector2d::Unit(i) * h;
      const Vector2d ej = Vector2d::Unit(j) * h;
      m(i, j) = (kinetic_energy(p, theta, ei + ej) - kinetic_energy(p, theta, ei - ej) -
                 kinetic_energy(p, theta, ej - ei) + kinetic_energy(p, theta, -ei - ej)) /
                (4.0 * h * h);
    }
  }
  return m;
}

}  // namespace

LagrangianTerms lagrangian_oracle(const FingerParams& p, const Vector2d& theta,
                                  const Vector2d& dtheta, double h) {
  LagrangianTerms out;
  out.mass = rate_hessian(p, theta);

  // C(theta, dtheta) dtheta = dM/dt dtheta - dT/dtheta
  const Matrix2d mdot =
      (rate_hessian(p, theta + h * dtheta) - rate_hessian(p, theta - h * dtheta)) /
      (2.0 * h);
  Vector2d dt_dtheta;
  Vector2d du_dtheta;
  for (int i = 0; i < 2; ++i) {
    const Vector2d step = Vector2d::Unit(i) * h;
    dt_dtheta(i) = (kinetic_energy(p, theta + step, dtheta) -
                    kinetic_energy(p, theta - step, dtheta)) /
                   (2.0 * h);
    du_dtheta(i) =
        (potential_energy(p, theta + step) - potential_energy(p, theta - step)) / (2.0 * h);
  }
  out.coriolis_torque = mdot * dtheta - dt_dtheta;
  out.gravity = du_dtheta;
  return out;
}

namespace {

struct Constrained {
  const FingerParams& fp;
  const ActuatorParams& ap;

  Vector2d joints(double q) const { return Vector2d(1.0, fp.r1 / fp.r2) * q; }

  double kinetic(double q, double dq) const {
    const double slider_rate = fp.r1 * dq;            // x = r1 theta1
    const double rotor_rate = fp.r1 / ap.ra * dq;     // phi = (r1/ra) theta1
    return kinetic_energy(fp, joints(q), joints(dq)) + 0.5 * ap.ms * slider_rate * slider_rate +
           0.5 * ap.j * rotor_rate * rotor_rate;
  }

  double potential(double q) const {
    const Vector2d th = joints(q);
    return potential_energy(fp, th) + 0.5 * fp.k1s * th(0) * th(0) +
           0.5 * fp.k2s * th(1) * th(1);
  }

  double inertia(double q) const { return kinetic(q, kRateStep) + kinetic(q, -kRateStep); }
};

// Fourth-order central difference.
template <class F>
double derivative(F&& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace

double eliminated_acceleration(const FingerParams& fp, const ActuatorParams& ap, double x1,
                               double x2, double tau_a, double h) {
  const Constrained sys{fp, ap};
  const double m = sys.inertia(x1);
  // dm/dt = dm/dq * dq/dt
  const double mdot = derivative([&](double q) { return sys.inertia(q); }, x1, h) * x2;
  const double dt_dq = derivative([&](double q) { return sys.kinetic(q, x2); }, x1, h);
  const double du_dq = derivative([&](double q) { return sys.potential(q); }, x1, h);

  // Virtual work of motor torque and rotor damping through phi = (r1/ra) q.
  const double gear = fp.r1 / ap.ra;
  const double generalized_force = gear * (tau_a - ap.b * gear * x2);
  return (generalized_force - (mdot * x2 - dt_dq) - du_dq) / m;
}

double constrained_energy(const FingerParams& fp, const ActuatorParams& ap, double x1,
                          double x2) {
  const Constrained sys{fp, ap};
  return sys.kinetic(x1, x2) + sys.potential(x1);
}

}  // namespace finger::oracle
