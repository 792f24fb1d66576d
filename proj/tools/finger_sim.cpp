// finger_sim: closed-loop simulation of the tendon-driven finger under the
// backstepping voltage controller.

#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "finger/cli.hpp"

int main(int argc, char** argv) {
  using namespace finger::cli;

  CLI::App app{"Tendon-driven finger backstepping simulator"};
  app.require_subcommand(1);

  RunManifest manifest;
  manifest.out_dir = "out";
  auto* simulate = app.add_subcommand("simulate", "Run a closed-loop simulation, write trace.csv");
  simulate->add_option("--config", manifest.config_path, "Config file (default: built-in step experiment)");
  simulate->add_option("--out", manifest.out_dir, "Output directory");
  simulate->add_flag("--overwrite", manifest.overwrite, "Replace an existing trace.csv");
  simulate->add_flag("--plot", manifest.emit_plots, "Also write the SVG figures");

  MetricsOptions metrics;
  std::string kind = "step";
  double amplitude_deg = 0.0;
  auto* metrics_cmd = app.add_subcommand("metrics", "Compute step or tracking metrics from a trace");
  metrics_cmd->add_option("--trace", metrics.trace_path, "trace.csv to analyse")->required();
  metrics_cmd->add_option("--kind", kind, "step or tracking")
      ->check(CLI::IsMember({"step", "tracking"}));
  metrics_cmd->add_option("--out", metrics.out_dir, "Directory for metrics.txt (default: trace dir)");
  auto* amp = metrics_cmd->add_option("--amplitude-deg", amplitude_deg,
                                      "Step target in degrees (default: final reference)");
  metrics_cmd->add_option("--band", metrics.band, "Settling band as a fraction of the step");
  metrics_cmd->add_option("--window", metrics.window_start, "Tracking metrics start time (s)");

  std::string plot_trace;
  std::filesystem::path plot_out = "out";
  auto* plot = app.add_subcommand("plot", "Write the five SVG figures for a trace");
  plot->add_option("--trace", plot_trace, "trace.csv to plot")->required();
  plot->add_option("--out", plot_out, "Output directory");

  SweepOptions sweep;
  sweep.out_dir = "out";
  auto* sweep_cmd = app.add_subcommand("sweep", "Run several configs in parallel");
  sweep_cmd->add_option("--config", sweep.config_paths, "Config files (one run each)")
      ->required();
  sweep_cmd->add_option("--out", sweep.out_dir, "Parent output directory");
  sweep_cmd->add_option("--threads", sweep.threads, "OpenMP threads (0: default)");
  sweep_cmd->add_flag("--overwrite", sweep.overwrite, "Replace existing traces");
  sweep_cmd->add_flag("--plot", sweep.emit_plots, "Also write the SVG figures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*simulate) return cmd_simulate(manifest, std::cout, std::cerr);
  if (*metrics_cmd) {
    metrics.kind = kind == "tracking" ? MetricsKind::tracking : MetricsKind::step;
    if (*amp) metrics.amplitude = amplitude_deg * std::numbers::pi / 180.0;
    return cmd_metrics(metrics, std::cout, std::cerr);
  }
  if (*plot) return cmd_plot(plot_trace, plot_out, std::cout, std::cerr);
  if (*sweep_cmd) return cmd_sweep(sweep, std::cout, std::cerr);
  return kUsage;
}
