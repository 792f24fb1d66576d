#include "finger/controller.hpp"

#include <cmath>
#include <stdexcept>

namespace finger {

void validate(const ControllerGains& g) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(g.lambda_s)) throw InvalidParameter("lambda", "lambda: must be > 0");
  if (!positive(g.k1)) throw InvalidParameter("k1", "k1: must be > 0");
  if (!positive(g.k2)) throw InvalidParameter("k2", "k2: must be > 0");
}

ErrorSurface error_surface(double x1, double x2, const ReferencePoint& ref,
                           const ControllerGains& gains) {
  const double e = x1 - ref.x1d;
  const double de = x2 - ref.dx1d;
  return {e, de, de + gains.lambda_s * e};
}

double virtual_control(double f, double g, const ReferencePoint& ref, double de, double s,
                       const ControllerGains& gains) {
  if (!(g > 0.0)) throw std::domain_error("virtual_control: input gain g must be positive");
  return (-f + ref.ddx1d - gains.lambda_s * de - gains.k1 * s) / g;
}

double virtual_control_rate(const FingerParams& fp, const ActuatorParams& ap,
                            const ReducedState& state, const ReferencePoint& ref,
                            const ControllerGains& gains) {
  // x3d = cpp + gpp + kpp + mpp * w  with  w = ddx1d - lambda*de - k1*s
  const ReducedPartials rp = reduced_partials(fp, ap, state.x1, state.x2);
  const ReducedTerms& t = rp.terms;
  const ErrorSurface es = error_surface(state.x1, state.x2, ref, gains);

  const double dx2 = (state.x3 - t.cpp - t.gpp - t.kpp) / t.mpp;
  const double dde = dx2 - ref.ddx1d;
  const double ds = dde + gains.lambda_s * es.de;
  const double w = ref.ddx1d - gains.lambda_s * es.de - gains.k1 * es.s;
  const double dw = ref.dddx1d - gains.lambda_s * dde - gains.k1 * ds;

  return rp.dcpp_dx1 * state.x2 + rp.dcpp_dx2 * dx2 + (rp.dgpp_dx1 + rp.dkpp_dx1) * state.x2 +
         rp.dmpp_dx1 * state.x2 * w + t.mpp * dw;
}

double torque_loop(double dx3d, double eta, double g, double s, const ControllerGains& gains) {
  return dx3d - gains.k2 * eta - g * s;
}

double voltage_law(const ActuatorParams& ap, const FingerParams& fp, double x2, double x3,
                   double u) {
  return (ap.l / ap.kt) *
         ((ap.rarm / ap.l) * x3 + (ap.kt * ap.kb * fp.r1) / (ap.ra * ap.l) * x2 + u);
}

double lyapunov(double s, double eta) { return 0.5 * (s * s + eta * eta); }

double lyapunov_rate(double s, double eta, const ControllerGains& gains) {
  return -gains.k1 * s * s - gains.k2 * eta * eta;
}

ControlSignals control_step(const FingerParams& fp, const ActuatorParams& ap,
                            const ReducedState& state, const ReferencePoint& ref,
                            const ControllerGains& gains) {
  const DriftGain fg = drift_and_gain(reduced_terms(fp, ap, state.x1, state.x2));
  const ErrorSurface es = error_surface(state.x1, state.x2, ref, gains);

  ControlSignals out;
  out.e = es.e;
  out.de = es.de;
  out.s = es.s;
  out.x3d = virtual_control(fg.f, fg.g, ref, es.de, es.s, gains);
  out.dx3d = virtual_control_rate(fp, ap, state, ref, gains);
  out.eta = state.x3 - out.x3d;
  out.u = torque_loop(out.dx3d, out.eta, fg.g, out.s, gains);
  out.e_volt = voltage_law(ap, fp, state.x2, state.x3, out.u);
  out.v = lyapunov(out.s, out.eta);
  out.vdot = lyapunov_rate(out.s, out.eta, gains);
  return out;
}

}  // namespace finger
