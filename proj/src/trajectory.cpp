#include "finger/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace finger {

std::string_view to_string(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::step:
      return "step";
    case TrajectoryKind::cubic_poly:
      return "cubic_poly";
    case TrajectoryKind::cubic_boundary:
      return "cubic_boundary";
  }
  return "?";
}

std::optional<TrajectoryKind> trajectory_kind_from_string(std::string_view name) {
  if (name == "step") return TrajectoryKind::step;
  if (name == "cubic_poly") return TrajectoryKind::cubic_poly;
  if (name == "cubic_boundary") return TrajectoryKind::cubic_boundary;
  return std::nullopt;
}

void validate(const TrajectorySpec& spec) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(spec.amplitude)) throw InvalidParameter("amplitude", "amplitude: must be finite");
  if (!(finite(spec.coeffs.a3) && finite(spec.coeffs.a2) && finite(spec.coeffs.a1) &&
        finite(spec.coeffs.a0)))
    throw InvalidParameter("coeffs", "cubic coefficients must be finite");
  if (!finite(spec.theta_start) || !finite(spec.theta_end))
    throw InvalidParameter("theta_start", "boundary angles must be finite");
  if (!(finite(spec.duration) && spec.duration > 0.0))
    throw InvalidParameter("duration", "duration: must be > 0");
}

CubicCoeffs cubic_from_boundary(double theta_start, double theta_end, double duration) {
  if (!(duration > 0.0)) throw std::invalid_argument("cubic_from_boundary: duration must be > 0");
  const double delta = theta_end - theta_start;
  return {-2.0 * delta / (duration * duration * duration), 3.0 * delta / (duration * duration),
          0.0, theta_start};
}

namespace {

ReferencePoint eval_cubic(const CubicCoeffs& c, double t) {
  return {((c.a3 * t + c.a2) * t + c.a1) * t + c.a0, (3.0 * c.a3 * t + 2.0 * c.a2) * t + c.a1,
          6.0 * c.a3 * t + 2.0 * c.a2, 6.0 * c.a3};
}

ReferencePoint eval_held_cubic(const CubicCoeffs& c, double t, double end, bool hold) {
  if (hold && t > end) return {eval_cubic(c, end).x1d, 0.0, 0.0, 0.0};
  return eval_cubic(c, t);
}

}  // namespace

ReferencePoint sample(const TrajectorySpec& spec, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("sample: t must be >= 0");
  switch (spec.kind) {
    case TrajectoryKind::step:
      return {spec.amplitude, 0.0, 0.0, 0.0};
    case TrajectoryKind::cubic_poly:
      return eval_held_cubic(spec.coeffs, t, spec.duration, spec.hold_after);
    case TrajectoryKind::cubic_boundary:
      return eval_held_cubic(cubic_from_boundary(spec.theta_start, spec.theta_end, spec.duration),
                             t, spec.duration, spec.hold_after);
  }
  return {};
}

}  // namespace finger
