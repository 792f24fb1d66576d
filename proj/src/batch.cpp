#include "finger/batch.hpp"

#include <omp.h>

namespace finger {

namespace {

BatchOutcome run_one(const SimConfig& config) {
  BatchOutcome out;
  try {
    out.trace = run(config);
  } catch (const SimulationDiverged& e) {
    out.error = e.what();
    out.diverged = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

std::vector<BatchOutcome> run_batch_serial(std::span<const SimConfig> configs) {
  std::vector<BatchOutcome> outcomes(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) outcomes[i] = run_one(configs[i]);
  return outcomes;
}

std::vector<BatchOutcome> run_batch_parallel(std::span<const SimConfig> configs, int threads) {
  std::vector<BatchOutcome> outcomes(configs.size());
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::ptrdiff_t i = 0; i < n; ++i) outcomes[i] = run_one(configs[i]);

  return outcomes;
}

}  // namespace finger
