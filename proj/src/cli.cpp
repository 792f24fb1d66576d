#include "finger/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <system_error>

#include <fmt/format.h>

#include "finger/analysis.hpp"
#include "finger/batch.hpp"
#include "finger/config.hpp"
#include "finger/plot.hpp"
#include "finger/trace_io.hpp"

namespace finger::cli {

namespace fs = std::filesystem;

namespace {

bool ensure_dir(const fs::path& dir, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err << fmt::format("error: cannot create output directory '{}': {}\n", dir.string(),
                       ec ? ec.message() : "not a directory");
    return false;
  }
  return true;
}

int write_trace(const Trace& trace, const fs::path& path, std::ostream& err) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out) write_trace_csv(out, trace);
  out.close();
  if (!out) {
    err << fmt::format("error: cannot write '{}'\n", path.string());
    return kIoError;
  }
  return kOk;
}

int emit_plots(const Trace& trace, const fs::path& dir, std::ostream& log, std::ostream& err) {
  try {
    for (const auto& p : plot::write_standard_figures(trace, dir)) log << "wrote " << p.string() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}

// Shared tail of simulate and sweep once a trace exists.
int store_run(const Trace& trace, const fs::path& out_dir, bool plots, std::ostream& log,
              std::ostream& err) {
  const fs::path trace_path = out_dir / kTraceFile;
  if (const int rc = write_trace(trace, trace_path, err); rc != kOk) return rc;
  log << fmt::format("wrote {} ({} records)\n", trace_path.string(), trace.size());
  return plots ? emit_plots(trace, out_dir, log, err) : kOk;
}

int refuse_overwrite(const fs::path& out_dir, std::ostream& err) {
  err << fmt::format("error: '{}' exists; pass --overwrite to replace it\n",
                     (out_dir / kTraceFile).string());
  return kIoError;
}

std::string divergence_message(const SimulationDiverged& e) {
  const TraceRecord& r = e.last_record();
  return fmt::format("error: {} (last record t = {}, x1 = {}, x2 = {}, x3 = {})", e.what(), r.t,
                     r.x1, r.x2, r.x3);
}

}  // namespace

int cmd_simulate(const RunManifest& manifest, std::ostream& log, std::ostream& err) {
  SimConfig config;
  try {
    config = manifest.config_path.empty() ? parse_config("") : load_config_file(manifest.config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  if (!ensure_dir(manifest.out_dir, err)) return kIoError;
  if (!manifest.overwrite && fs::exists(manifest.out_dir / kTraceFile))
    return refuse_overwrite(manifest.out_dir, err);

  Trace trace;
  try {
    trace = run(config);
  } catch (const SimulationDiverged& e) {
    err << divergence_message(e) << '\n';
    return kDiverged;
  }
  return store_run(trace, manifest.out_dir, manifest.emit_plots, log, err);
}

int cmd_metrics(const MetricsOptions& options, std::ostream& log, std::ostream& err) {
  Trace trace;
  try {
    trace = read_trace_file(options.trace_path);
  } catch (const TraceFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  if (trace.empty()) {
    err << fmt::format("error: trace '{}' has no records\n", options.trace_path);
    return kConfigError;
  }

  std::string report;
  try {
    if (options.kind == MetricsKind::step) {
      const double amplitude = options.amplitude.value_or(trace.back().x1d);
      report = format_report(step_metrics(trace, amplitude, options.band));
    } else {
      report = format_report(tracking_metrics(trace, options.window_start));
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  const fs::path dir =
      options.out_dir.empty() ? fs::path(options.trace_path).parent_path() : options.out_dir;
  if (!dir.empty() && !ensure_dir(dir, err)) return kIoError;
  const fs::path path = dir / kMetricsFile;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << report;
  out.close();
  if (!out) {
    err << fmt::format("error: cannot write '{}'\n", path.string());
    return kIoError;
  }
  log << report << fmt::format("wrote {}\n", path.string());
  return kOk;
}

int cmd_plot(const std::string& trace_path, const fs::path& out_dir, std::ostream& log,
             std::ostream& err) {
  Trace trace;
  try {
    trace = read_trace_file(trace_path);
  } catch (const TraceFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  if (trace.empty()) {
    err << fmt::format("error: trace '{}' has no records\n", trace_path);
    return kConfigError;
  }
  if (!ensure_dir(out_dir, err)) return kIoError;
  return emit_plots(trace, out_dir, log, err);
}

int cmd_sweep(const SweepOptions& options, std::ostream& log, std::ostream& err) {
  std::vector<SimConfig> configs;
  std::vector<fs::path> dirs;
  int worst = kOk;
  for (const auto& path : options.config_paths) {
    try {
      configs.push_back(load_config_file(path));
    } catch (const ConfigError& e) {
      err << fmt::format("config error in '{}': {}\n", path, e.what());
      return kConfigError;
    }
    fs::path dir = options.out_dir / fs::path(path).stem();
    if (std::find(dirs.begin(), dirs.end(), dir) != dirs.end()) {
      err << fmt::format("error: two configs map to output directory '{}'\n", dir.string());
      return kConfigError;
    }
    if (!ensure_dir(dir, err)) return kIoError;
    if (!options.overwrite && fs::exists(dir / kTraceFile)) return refuse_overwrite(dir, err);
    dirs.push_back(std::move(dir));
  }

  const auto outcomes = run_batch_parallel(configs, options.threads);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    int rc = kOk;
    if (outcomes[i].ok()) {
      rc = store_run(*outcomes[i].trace, dirs[i], options.emit_plots, log, err);
    } else {
      err << fmt::format("{}: {}\n", options.config_paths[i], outcomes[i].error);
      rc = outcomes[i].diverged ? kDiverged : kConfigError;
    }
    worst = std::max(worst, rc);
  }
  return worst;
}

}  // namespace finger::cli
