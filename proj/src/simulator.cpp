#include "finger/simulator.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace finger {

std::string_view to_string(ControllerMode mode) {
  return mode == ControllerMode::continuous ? "continuous" : "zero_order_hold";
}

std::optional<ControllerMode> controller_mode_from_string(std::string_view name) {
  if (name == "continuous") return ControllerMode::continuous;
  if (name == "zero_order_hold") return ControllerMode::zero_order_hold;
  return std::nullopt;
}

std::size_t SimConfig::record_count() const {
  return static_cast<std::size_t>(std::llround(t_end / dt)) + 1;
}

namespace {

template <class F>
void with_section(const char* section, F&& check) {
  try {
    check();
  } catch (const InvalidParameter& e) {
    const std::string key = std::string(section) + "." + e.field();
    throw InvalidParameter(key, key + ": " + e.what());
  }
}

}  // namespace

void validate(const SimConfig& c) {
  with_section("finger", [&] { validate(c.fp); });
  with_section("actuator", [&] { validate(c.ap); });
  with_section("controller", [&] { validate(c.gains); });
  with_section("traj", [&] { validate(c.traj); });

  if (!(std::isfinite(c.dt) && c.dt > 0.0)) throw InvalidParameter("sim.dt", "sim.dt: must be > 0");
  if (!(std::isfinite(c.t_end) && c.t_end >= 0.0))
    throw InvalidParameter("sim.t_end", "sim.t_end: must be >= 0");
  if (c.t_end > 0.0 && c.dt > c.t_end)
    throw InvalidParameter("sim.dt", "sim.dt: must not exceed sim.t_end");
  const double steps = c.t_end / c.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps))
    throw InvalidParameter("sim.t_end", "sim.t_end: must be an integer multiple of sim.dt");
  if (c.substeps < 1) throw InvalidParameter("sim.substeps", "sim.substeps: must be >= 1");
  if (!(std::isfinite(c.x0.x1) && std::isfinite(c.x0.x2) && std::isfinite(c.x0.x3)))
    throw InvalidParameter("sim.x1_0", "sim: initial state must be finite");
  if (!(std::isfinite(c.voltage_limit) && c.voltage_limit >= 0.0))
    throw InvalidParameter("controller.voltage_limit", "controller.voltage_limit: must be >= 0");
}

double applied_voltage(const SimConfig& config, double e_volt) {
  if (config.voltage_limit > 0.0)
    return std::clamp(e_volt, -config.voltage_limit, config.voltage_limit);
  return e_volt;
}

TraceRecord make_record(const SimConfig& config, double t, const ReducedState& state) {
  const ReferencePoint ref = sample(config.traj, t);
  const ControlSignals sig = control_step(config.fp, config.ap, state, ref, config.gains);

  TraceRecord r;
  r.t = t;
  r.x1 = state.x1;
  r.theta2 = config.fp.r1 / config.fp.r2 * state.x1;
  r.x2 = state.x2;
  r.x3 = state.x3;
  r.current = state.x3 / config.ap.kt;
  r.x1d = ref.x1d;
  r.dx1d = ref.dx1d;
  r.e = sig.e;
  r.s = sig.s;
  r.eta = sig.eta;
  r.x3d = sig.x3d;
  r.u = sig.u;
  r.e_volt = applied_voltage(config, sig.e_volt);
  r.v = sig.v;
  r.vdot = sig.vdot;
  return r;
}

namespace {

bool finite_state(const ReducedState& s) {
  return std::isfinite(s.x1) && std::isfinite(s.x2) && std::isfinite(s.x3);
}

ReducedState advance(const SimConfig& c, const ReducedState& state, double t, double h) {
  using State = std::array<double, 3>;
  if (c.controller_mode == ControllerMode::continuous) {
    auto closed_loop = [&c](double tau, const State& x) {
      const ReducedState rs = ReducedState::from_array(x);
      const ControlSignals sig = control_step(c.fp, c.ap, rs, sample(c.traj, tau), c.gains);
      return state_derivative(c.fp, c.ap, rs, applied_voltage(c, sig.e_volt));
    };
    return ReducedState::from_array(rk4_step(closed_loop, state.as_array(), t, h));
  }

  const ControlSignals held = control_step(c.fp, c.ap, state, sample(c.traj, t), c.gains);
  const double e_volt = applied_voltage(c, held.e_volt);
  auto open_loop = [&c, e_volt](double, const State& x) {
    return state_derivative(c.fp, c.ap, ReducedState::from_array(x), e_volt);
  };
  return ReducedState::from_array(rk4_step(open_loop, state.as_array(), t, h));
}

}  // namespace

Trace run(const SimConfig& config) {
  validate(config);
  const std::size_t n = config.record_count();
  const double h = config.dt / config.substeps;

  Trace trace;
  trace.reserve(n);
  ReducedState state = config.x0;
  trace.push_back(make_record(config, 0.0, state));

  for (std::size_t i = 1; i < n; ++i) {
    const double t0 = static_cast<double>(i - 1) * config.dt;
    for (int k = 0; k < config.substeps; ++k) {
      const double t = t0 + static_cast<double>(k) * h;
      try {
        state = advance(config, state, t, h);
      } catch (const NonFiniteStage& e) {
        throw SimulationDiverged(t, trace.back(),
                                 fmt::format("simulation diverged at t = {}: {}", t, e.what()));
      } catch (const std::domain_error& e) {
        throw SimulationDiverged(t, trace.back(),
                                 fmt::format("simulation diverged at t = {}: {}", t, e.what()));
      }
      if (!finite_state(state))
        throw SimulationDiverged(t + h, trace.back(),
                                 fmt::format("simulation diverged at t = {}: non-finite state",
                                             t + h));
    }
    trace.push_back(make_record(config, static_cast<double>(i) * config.dt, state));
  }
  return trace;
}

}  // namespace finger
