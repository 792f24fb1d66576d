#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "finger/controller.hpp"
#include "finger/trajectory.hpp"

namespace finger {

enum class ControllerMode { continuous, zero_order_hold };

std::string_view to_string(ControllerMode mode);
std::optional<ControllerMode> controller_mode_from_string(std::string_view name);

/// Closed-loop run description.
///
/// `dt` is the record interval. The plant is integrated with classical RK4
/// at h = dt / substeps; the default h = 1e-4 s resolves the ~1/M'' rad/s
/// rotation of the (s, eta) error pair, which RK4 cannot follow at h = 0.01.
struct SimConfig {
  double dt = 0.01;
  double t_end = 5.0;
  int substeps = 100;
  ReducedState x0{};
  FingerParams fp{};
  ActuatorParams ap{};
  ControllerGains gains{};
  TrajectorySpec traj{};
  ControllerMode controller_mode = ControllerMode::continuous;
  double voltage_limit = 0.0;  // |E| clamp in volts, 0 disables

  /// Number of records a run produces, round(t_end / dt) + 1.
  std::size_t record_count() const;

  bool operator==(const SimConfig&) const = default;
};

/// Throws InvalidParameter naming the offending `section.key`.
void validate(const SimConfig& config);

struct TraceRecord {
  double t = 0.0;
  double x1 = 0.0;
  double theta2 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double current = 0.0;
  double x1d = 0.0;
  double dx1d = 0.0;
  double e = 0.0;
  double s = 0.0;
  double eta = 0.0;
  double x3d = 0.0;
  double u = 0.0;
  double e_volt = 0.0;
  double v = 0.0;
  double vdot = 0.0;

  bool operator==(const TraceRecord&) const = default;
};

using Trace = std::vector<TraceRecord>;

class NonFiniteStage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SimulationDiverged : public std::runtime_error {
 public:
  SimulationDiverged(double t, TraceRecord last, const std::string& what)
      : std::runtime_error(what), t_(t), last_(last) {}
  double time() const noexcept { return t_; }
  const TraceRecord& last_record() const noexcept { return last_; }

 private:
  double t_;
  TraceRecord last_;
};

/// One classical RK4 step of dx/dt = deriv(t, x). Throws NonFiniteStage if
/// any stage slope is not finite.
template <std::size_t N, class Deriv>
std::array<double, N> rk4_step(Deriv&& deriv, const std::array<double, N>& x, double t,
                               double dt) {
  auto check = [](const std::array<double, N>& k, int stage) {
    for (double v : k)
      if (!std::isfinite(v))
        throw NonFiniteStage("rk4_step: non-finite slope at stage " + std::to_string(stage));
  };
  auto offset = [&x](const std::array<double, N>& k, double scale) {
    std::array<double, N> y;
    for (std::size_t i = 0; i < N; ++i) y[i] = x[i] + scale * k[i];
    return y;
  };

  const std::array<double, N> k1 = deriv(t, x);
  check(k1, 1);
  const std::array<double, N> k2 = deriv(t + 0.5 * dt, offset(k1, 0.5 * dt));
  check(k2, 2);
  const std::array<double, N> k3 = deriv(t + 0.5 * dt, offset(k2, 0.5 * dt));
  check(k3, 3);
  const std::array<double, N> k4 = deriv(t + dt, offset(k3, dt));
  check(k4, 4);

  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

/// Voltage actually applied to the plant, after the optional clamp.
double applied_voltage(const SimConfig& config, double e_volt);

TraceRecord make_record(const SimConfig& config, double t, const ReducedState& state);

/// Runs the closed loop from x0 to t_end. Deterministic: the same config
/// always yields a bit-identical trace. Throws SimulationDiverged on a
/// non-finite state.
Trace run(const SimConfig& config);

}  // namespace finger
