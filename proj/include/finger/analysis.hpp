#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "finger/controller.hpp"
#include "finger/simulator.hpp"

namespace finger {

struct StepMetrics {
  /// First time after which |x1 - amplitude| <= band*|amplitude| holds to the
  /// end of the trace; empty when the band is never permanently entered.
  std::optional<double> settling_time;
  double overshoot_pct = 0.0;
  double steady_state_error = 0.0;  // amplitude - x1 at the last record
  double band = 0.02;
};

struct TrackingMetrics {
  double max_abs_error = 0.0;
  double rms_error = 0.0;
  double window_start = 1.0;
};

struct LyapunovAudit {
  /// Record indices k with V[k] > V[k-1] + tolerance.
  std::vector<std::size_t> violations;
  double max_increase = 0.0;  // max(V[k] - V[k-1], 0)
  /// max |(V[k+1] - V[k-1]) / 2dt + k1 s[k]^2 + k2 eta[k]^2| over interior k.
  double max_rate_residual = 0.0;
  std::size_t worst_residual_index = 0;
  double dt = 0.0;
};

inline constexpr double kDefaultBand = 0.02;
inline constexpr double kDefaultTrackingWindow = 1.0;
inline constexpr double kMonotonicityTolerance = 1e-9;

/// Throws std::invalid_argument for an empty trace or zero amplitude.
StepMetrics step_metrics(std::span<const TraceRecord> trace, double amplitude,
                         double band = kDefaultBand);

/// Statistics of e = x1 - x1d over records with t >= window_start.
/// Throws std::invalid_argument when no record falls in the window.
TrackingMetrics tracking_metrics(std::span<const TraceRecord> trace,
                                 double window_start = kDefaultTrackingWindow);

/// Checks V is non-increasing and that its centered difference matches
/// -k1 s^2 - k2 eta^2, recomputed from the trace's s and eta columns.
/// Needs at least three uniformly spaced records.
LyapunovAudit lyapunov_audit(std::span<const TraceRecord> trace, const ControllerGains& gains,
                             double tolerance = kMonotonicityTolerance);

}  // namespace finger
