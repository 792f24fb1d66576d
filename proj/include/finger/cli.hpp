#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace finger::cli {

/// Process exit codes of the finger_sim subcommands.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfigError = 2,  // bad config, or missing/corrupt trace for metrics/plot
  kDiverged = 3,
  kIoError = 4,
};

struct RunManifest {
  std::string config_path;  // empty: built-in defaults (the 60 degree step experiment)
  std::filesystem::path out_dir;
  bool emit_plots = false;
  bool overwrite = false;
};

enum class MetricsKind { step, tracking };

struct MetricsOptions {
  std::string trace_path;
  MetricsKind kind = MetricsKind::step;
  std::filesystem::path out_dir;     // empty: next to the trace
  std::optional<double> amplitude;   // step target, rad; default: last x1d of the trace
  double band = 0.02;
  double window_start = 1.0;
};

struct SweepOptions {
  std::vector<std::string> config_paths;
  std::filesystem::path out_dir;
  bool overwrite = false;
  bool emit_plots = false;
  int threads = 0;
};

inline constexpr const char* kTraceFile = "trace.csv";
inline constexpr const char* kMetricsFile = "metrics.txt";

int cmd_simulate(const RunManifest& manifest, std::ostream& log, std::ostream& err);
int cmd_metrics(const MetricsOptions& options, std::ostream& log, std::ostream& err);
int cmd_plot(const std::string& trace_path, const std::filesystem::path& out_dir,
             std::ostream& log, std::ostream& err);
/// Runs each config in parallel into out_dir/<config stem>/. Returns the
/// most severe per-run exit code.
int cmd_sweep(const SweepOptions& options, std::ostream& log, std::ostream& err);

}  // namespace finger::cli
