#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finger/simulator.hpp"

namespace finger {

/// Result of one run in a batch. Exactly one of `trace` / `error` is set.
struct BatchOutcome {
  std::optional<Trace> trace;
  std::string error;
  bool diverged = false;

  bool ok() const { return trace.has_value(); }
};

/// Reference implementation: runs the configs one after another.
std::vector<BatchOutcome> run_batch_serial(std::span<const SimConfig> configs);

/// Runs the configs across OpenMP threads. Each run is independent and
/// deterministic, so the outcomes equal run_batch_serial bit for bit.
/// threads <= 0 uses the OpenMP default.
std::vector<BatchOutcome> run_batch_parallel(std::span<const SimConfig> configs, int threads = 0);

}  // namespace finger
