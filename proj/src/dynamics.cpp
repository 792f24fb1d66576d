#include "finger/dynamics.hpp"

#include <cmath>

namespace finger {

FingerParams FingerParams::uniform_rods(double m1, double m2, double l1, double l2) {
  FingerParams p;
  p.m1 = m1;
  p.m2 = m2;
  p.l1 = l1;
  p.l2 = l2;
  p.lc1 = l1 / 2.0;
  p.lc2 = l2 / 2.0;
  p.i1 = m1 * l1 * l1 / 12.0;
  p.i2 = m2 * l2 * l2 / 12.0;
  return p;
}

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw InvalidParameter(field, std::string(field) + ": " + what);
}

bool finite(double v) { return std::isfinite(v); }

// Coupling coefficient of the distal link, m2 * l1 * lc2.
double coupling(const FingerParams& p) { return p.m2 * p.l1 * p.lc2; }

Mat2 mass_matrix_dtheta2(const FingerParams& p, double theta2) {
  const double a = coupling(p) * std::sin(theta2);
  Mat2 dm;
  dm << -2.0 * a, -a, -a, 0.0;
  return dm;
}

// Coriolis matrix with the coefficient h supplied by the caller, so the same
// layout serves C and dC/dtheta2.
Mat2 coriolis_layout(double h, const Vec2& dtheta) {
  Mat2 c;
  c << h * dtheta(1), h * (dtheta(0) + dtheta(1)), -h * dtheta(0), 0.0;
  return c;
}

Mat2 gravity_jacobian(const FingerParams& p, const Vec2& theta) {
  const double s1 = std::sin(theta(0));
  const double s12 = std::sin(theta(0) + theta(1));
  const double distal = -p.m2 * p.lc2 * p.grav * s12;
  Mat2 jg;
  jg << -(p.m1 * p.lc1 + p.m2 * p.l1) * p.grav * s1 + distal, distal, distal, distal;
  return jg;
}

Mat2 stiffness(const FingerParams& p) {
  Mat2 k = Mat2::Zero();
  k(0, 0) = p.k1s;
  k(1, 1) = p.k2s;
  return k;
}

}  // namespace

void validate(const FingerParams& p) {
  const struct {
    const char* name;
    double value;
  } positive[] = {{"m1", p.m1},   {"m2", p.m2},   {"l1", p.l1}, {"l2", p.l2},
                  {"lc1", p.lc1}, {"lc2", p.lc2}, {"i1", p.i1}, {"i2", p.i2},
                  {"r1", p.r1},   {"r2", p.r2}};
  for (const auto& f : positive) require(finite(f.value) && f.value > 0.0, f.name, "must be > 0");
  require(finite(p.k1s) && p.k1s >= 0.0, "k1s", "must be >= 0");
  require(finite(p.k2s) && p.k2s >= 0.0, "k2s", "must be >= 0");
  require(finite(p.grav) && p.grav >= 0.0, "grav", "must be >= 0");
  require(p.lc1 <= p.l1, "lc1", "must not exceed l1");
  require(p.lc2 <= p.l2, "lc2", "must not exceed l2");
}

void validate(const ActuatorParams& p) {
  const struct {
    const char* name;
    double value;
  } positive[] = {{"j", p.j}, {"b", p.b},       {"ra", p.ra}, {"ms", p.ms},
                  {"l", p.l}, {"rarm", p.rarm}, {"kt", p.kt}, {"kb", p.kb}};
  for (const auto& f : positive) require(finite(f.value) && f.value > 0.0, f.name, "must be > 0");
}

Mat2 mass_matrix(const FingerParams& p, const Vec2& theta) {
  const double c2 = std::cos(theta(1));
  const double a = coupling(p);
  const double m22 = p.i2 + p.m2 * p.lc2 * p.lc2;
  const double m12 = m22 + a * c2;
  const double m11 = p.i1 + p.m1 * p.lc1 * p.lc1 + p.i2 +
                     p.m2 * (p.l1 * p.l1 + p.lc2 * p.lc2) + 2.0 * a * c2;
  Mat2 m;
  m << m11, m12, m12, m22;
  return m;
}

Mat2 mass_matrix_rate(const FingerParams& p, const Vec2& theta, const Vec2& dtheta) {
  return mass_matrix_dtheta2(p, theta(1)) * dtheta(1);
}

Mat2 coriolis_matrix(const FingerParams& p, const Vec2& theta, const Vec2& dtheta) {
  return coriolis_layout(-coupling(p) * std::sin(theta(1)), dtheta);
}

Vec2 gravity_vector(const FingerParams& p, const Vec2& theta) {
  const double c1 = std::cos(theta(0));
  const double c12 = std::cos(theta(0) + theta(1));
  const double distal = p.m2 * p.lc2 * p.grav * c12;
  return {(p.m1 * p.lc1 + p.m2 * p.l1) * p.grav * c1 + distal, distal};
}

Vec2 spring_torque(const FingerParams& p, const Vec2& theta) {
  return {p.k1s * theta(0), p.k2s * theta(1)};
}

Row2 constraint_row(const FingerParams& p) { return {1.0, -p.r2 / p.r1}; }

Vec2 reduction_vector(const FingerParams& p) { return {1.0, p.r1 / p.r2}; }

FullJointState expand_state(const FingerParams& p, double x1, double x2) {
  const Vec2 d = reduction_vector(p);
  return {d * x1, d * x2};
}

ReducedPartials reduced_partials(const FingerParams& fp, const ActuatorParams& ap, double x1,
                                 double x2) {
  const Vec2 d = reduction_vector(fp);
  const double ratio = d(1);
  const Vec2 theta = d * x1;
  const double s2 = std::sin(theta(1));
  const double c2 = std::cos(theta(1));
  const double a = coupling(fp);

  // Finger-side (joint pulley) projections.
  const double m_red = d.dot(mass_matrix(fp, theta) * d);
  const double dm_red = d.dot(mass_matrix_dtheta2(fp, theta(1)) * d) * ratio;
  // C is linear in the rates, so D^T C(theta, D x2) D x2 = x2^2 D^T C(theta, D) D.
  const double c_unit = d.dot(coriolis_layout(-a * s2, d) * d);
  const double dc_unit = d.dot(coriolis_layout(-a * c2, d) * d) * ratio;
  const double g_red = d.dot(gravity_vector(fp, theta));
  const double dg_red = d.dot(gravity_jacobian(fp, theta) * d);
  const double k_red = d.dot(stiffness(fp) * d);

  // Motor-side scaling: finger terms by ra/r1, rotor and slider by r1/ra.
  const double to_motor = ap.ra / fp.r1;
  const double from_motor = fp.r1 / ap.ra;

  ReducedPartials out;
  out.terms.mpp = to_motor * m_red + from_motor * (ap.j + ap.ms * ap.ra * ap.ra);
  out.terms.cpp = to_motor * c_unit * x2 * x2 + from_motor * ap.b * x2;
  out.terms.gpp = to_motor * g_red;
  out.terms.kpp = to_motor * k_red * x1;
  out.dmpp_dx1 = to_motor * dm_red;
  out.dcpp_dx1 = to_motor * dc_unit * x2 * x2;
  out.dcpp_dx2 = to_motor * 2.0 * c_unit * x2 + from_motor * ap.b;
  out.dgpp_dx1 = to_motor * dg_red;
  out.dkpp_dx1 = to_motor * k_red;
  return out;
}

ReducedTerms reduced_terms(const FingerParams& fp, const ActuatorParams& ap, double x1,
                           double x2) {
  return reduced_partials(fp, ap, x1, x2).terms;
}

DriftGain drift_and_gain(const ReducedTerms& terms) {
  return {(-terms.cpp - terms.gpp - terms.kpp) / terms.mpp, 1.0 / terms.mpp};
}

std::array<double, 3> state_derivative(const FingerParams& fp, const ActuatorParams& ap,
                                       const ReducedState& s, double e_volt) {
  const DriftGain fg = drift_and_gain(reduced_terms(fp, ap, s.x1, s.x2));
  const double dx3 = -(ap.rarm / ap.l) * s.x3 -
                     (ap.kt * ap.kb * fp.r1) / (ap.ra * ap.l) * s.x2 + (ap.kt / ap.l) * e_volt;
  return {s.x2, fg.f + fg.g * s.x3, dx3};
}

namespace {

// Joint-space left-hand side M theta_dd + C theta_d + G + K theta on the
// constraint manifold.
Vec2 joint_balance(const FingerParams& fp, double x1, double x2, double x1dd) {
  const Vec2 d = reduction_vector(fp);
  const FullJointState js = expand_state(fp, x1, x2);
  return mass_matrix(fp, js.theta) * d * x1dd +
         coriolis_matrix(fp, js.theta, js.dtheta) * js.dtheta + gravity_vector(fp, js.theta) +
         spring_torque(fp, js.theta);
}

}  // namespace

double tendon_force_sum(const FingerParams& fp, double x1, double x2, double x1dd) {
  return reduction_vector(fp).dot(joint_balance(fp, x1, x2, x1dd)) / fp.r1;
}

double lagrange_multiplier(const FingerParams& fp, double x1, double x2, double x1dd,
                           const Vec2& tau) {
  const Row2 a = constraint_row(fp);
  const Vec2 residual = joint_balance(fp, x1, x2, x1dd) - tau;
  return a.dot(residual) / a.squaredNorm();
}

}  // namespace finger
