#include "finger/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace finger {

StepMetrics step_metrics(std::span<const TraceRecord> trace, double amplitude, double band) {
  if (trace.empty()) throw std::invalid_argument("step_metrics: empty trace");
  if (amplitude == 0.0) throw std::invalid_argument("step_metrics: amplitude must be non-zero");

  StepMetrics m;
  m.band = band;
  const double tol = band * std::abs(amplitude);
  const double sign = amplitude > 0.0 ? 1.0 : -1.0;

  // Walk backwards to the last sample outside the band.
  std::size_t first_settled = trace.size();
  for (std::size_t i = trace.size(); i-- > 0;) {
    if (std::abs(trace[i].x1 - amplitude) > tol) break;
    first_settled = i;
  }
  if (first_settled < trace.size()) m.settling_time = trace[first_settled].t;

  double peak_excess = 0.0;
  for (const auto& r : trace) peak_excess = std::max(peak_excess, sign * (r.x1 - amplitude));
  m.overshoot_pct = peak_excess / std::abs(amplitude) * 100.0;
  m.steady_state_error = amplitude - trace.back().x1;
  return m;
}

TrackingMetrics tracking_metrics(std::span<const TraceRecord> trace, double window_start) {
  TrackingMetrics m;
  m.window_start = window_start;
  double sum_sq = 0.0;
  std::size_t count = 0;
  for (const auto& r : trace) {
    if (r.t < window_start) continue;
    const double e = r.x1 - r.x1d;
    m.max_abs_error = std::max(m.max_abs_error, std::abs(e));
    sum_sq += e * e;
    ++count;
  }
  if (count == 0) throw std::invalid_argument("tracking_metrics: window_start beyond trace end");
  m.rms_error = std::sqrt(sum_sq / static_cast<double>(count));
  return m;
}

LyapunovAudit lyapunov_audit(std::span<const TraceRecord> trace, const ControllerGains& gains,
                             double tolerance) {
  if (trace.size() < 3) throw std::invalid_argument("lyapunov_audit: need at least 3 records");
  LyapunovAudit a;
  a.dt = trace[1].t - trace[0].t;

  for (std::size_t k = 1; k < trace.size(); ++k) {
    const double inc = trace[k].v - trace[k - 1].v;
    a.max_increase = std::max(a.max_increase, inc);
    if (inc > tolerance) a.violations.push_back(k);
  }

  for (std::size_t k = 1; k + 1 < trace.size(); ++k) {
    const double centered = (trace[k + 1].v - trace[k - 1].v) / (trace[k + 1].t - trace[k - 1].t);
    const double residual = std::abs(centered - lyapunov_rate(trace[k].s, trace[k].eta, gains));
    if (residual > a.max_rate_residual) {
      a.max_rate_residual = residual;
      a.worst_residual_index = k;
    }
  }
  return a;
}

}  // namespace finger
