#include "finger/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace finger::plot {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

struct Range {
  double lo;
  double hi;
};

// 1-2-5 tick spacing giving roughly `target` intervals.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  const double step = norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0;
  return step * mag;
}

Range padded(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi))) return {0.0, 1.0};
  if (hi - lo <= std::abs(hi) * 1e-12 + 1e-300) {
    const double pad = std::max(std::abs(hi) * 0.1, 1e-9);
    return {lo - pad, hi + pad};
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

template <class... Args>
void append(std::string& out, fmt::format_string<Args...> f, Args&&... args) {
  fmt::format_to(std::back_inserter(out), f, std::forward<Args>(args)...);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Figure& fig) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : fig.series) {
    for (double v : s.x)
      if (std::isfinite(v)) xmin = std::min(xmin, v), xmax = std::max(xmax, v);
    for (double v : s.y)
      if (std::isfinite(v)) ymin = std::min(ymin, v), ymax = std::max(ymax, v);
  }
  const Range xr = padded(xmin, xmax);
  const Range yr = padded(ymin, ymax);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string out;

  append(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
       "viewBox=\"0 0 {} {}\" font-family=\"sans-serif\" font-size=\"12\">\n",
       kWidth, kHeight, kWidth, kHeight);
  append(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  append(out, "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
       kWidth / 2, escape(fig.title));

  const double xstep = nice_step(xr.hi - xr.lo, 8);
  for (double t = std::ceil(xr.lo / xstep) * xstep; t <= xr.hi; t += xstep) {
    append(out, "<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"#ddd\"/>\n", px(t),
         kTop, kTop + ph);
    append(out, "<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{:.4g}</text>\n", px(t),
         kTop + ph + 18, std::abs(t) < xstep * 1e-9 ? 0.0 : t);
  }
  const double ystep = nice_step(yr.hi - yr.lo, 6);
  for (double v = std::ceil(yr.lo / ystep) * ystep; v <= yr.hi; v += ystep) {
    append(out, "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"#ddd\"/>\n", kLeft,
         py(v), kLeft + pw);
    append(out, "<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 6, py(v) + 4,
         std::abs(v) < ystep * 1e-9 ? 0.0 : v);
  }
  append(out, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
       kLeft, kTop, pw, ph);
  append(out, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", kLeft + pw / 2,
       kHeight - 18, escape(fig.x_label));
  append(out, "<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0})\">{1}"
       "</text>\n",
       kTop + ph / 2, escape(fig.y_label));

  for (std::size_t k = 0; k < fig.series.size(); ++k) {
    const Series& s = fig.series[k];
    append(out, "<polyline class=\"series\" data-name=\"{}\" fill=\"none\" stroke=\"{}\" "
         "stroke-width=\"1.5\" points=\"",
         escape(s.name), s.color);
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      append(out, "{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
    }
    append(out, "\"/>\n");
    const double ly = kTop + 16 + 16 * static_cast<double>(k);
    append(out, "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
         kLeft + pw - 150, ly - 4, kLeft + pw - 125, ly - 4, s.color);
    append(out, "<text x=\"{}\" y=\"{}\">{}</text>\n", kLeft + pw - 118, ly, escape(s.name));
  }
  append(out, "</svg>\n");
  return out;
}

std::vector<std::pair<std::string, Figure>> standard_figures(const Trace& trace) {
  constexpr double deg = 180.0 / std::numbers::pi;
  std::vector<double> t;
  std::vector<double> x1;
  std::vector<double> x1d;
  std::vector<double> e;
  std::vector<double> eta;
  std::vector<double> v;
  for (const auto& r : trace) {
    t.push_back(r.t);
    x1.push_back(r.x1 * deg);
    x1d.push_back(r.x1d * deg);
    e.push_back(r.e * deg);
    eta.push_back(r.eta);
    v.push_back(r.v);
  }
  const std::string time = "time (s)";
  std::vector<std::pair<std::string, Figure>> figs;
  figs.push_back({"fig3_step_response",
                  {"Proximal joint angle", time, "theta1 (deg)", {{"theta1", t, x1, "#1f77b4"}}}});
  figs.push_back({"fig4_angle_error",
                  {"Proximal joint angle error", time, "e (deg)", {{"e", t, e, "#d62728"}}}});
  figs.push_back({"fig5_virtual_control_error",
                  {"Virtual control error", time, "eta (N m)", {{"eta", t, eta, "#2ca02c"}}}});
  figs.push_back({"fig6_reference_tracking",
                  {"Reference vs actual proximal angle",
                   time,
                   "theta1 (deg)",
                   {{"reference", t, x1d, "#ff7f0e"}, {"actual", t, x1, "#1f77b4"}}}});
  figs.push_back({"fig7_lyapunov",
                  {"Lyapunov function V = (s^2 + eta^2)/2", time, "V", {{"V", t, v, "#9467bd"}}}});
  return figs;
}

std::vector<std::filesystem::path> write_standard_figures(const Trace& trace,
                                                          const std::filesystem::path& out_dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& [name, fig] : standard_figures(trace)) {
    const auto path = out_dir / (name + ".svg");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << render_svg(fig);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    paths.push_back(path);
  }
  return paths;
}

}  // namespace finger::plot
