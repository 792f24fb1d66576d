#pragma once

#include <numbers>
#include <optional>
#include <string_view>

#include "finger/controller.hpp"

namespace finger {

enum class TrajectoryKind { step, cubic_poly, cubic_boundary };

std::string_view to_string(TrajectoryKind kind);
std::optional<TrajectoryKind> trajectory_kind_from_string(std::string_view name);

/// x1d(t) = a3 t^3 + a2 t^2 + a1 t + a0
struct CubicCoeffs {
  double a3 = 0.0;
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;

  bool operator==(const CubicCoeffs&) const = default;
};

struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::step;
  double amplitude = std::numbers::pi / 3.0;       // step, rad
  CubicCoeffs coeffs{-0.0021, 0.0314, 0.0, 0.0};   // cubic_poly
  double theta_start = 0.0;                        // cubic_boundary, rad
  double theta_end = std::numbers::pi / 3.0;       // cubic_boundary, rad
  double duration = 10.0;  // cubic domain end, s
  bool hold_after = true;  // clamp cubic references past `duration`

  bool operator==(const TrajectorySpec&) const = default;
};

void validate(const TrajectorySpec& spec);

/// Rest-to-rest cubic from theta_start to theta_end over duration.
/// Throws std::invalid_argument for duration <= 0.
CubicCoeffs cubic_from_boundary(double theta_start, double theta_end, double duration);

/// Reference value and analytic derivatives at t >= 0.
ReferencePoint sample(const TrajectorySpec& spec, double t);

}  // namespace finger
