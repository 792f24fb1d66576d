#include "finger/trace_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <string_view>

#include <fmt/format.h>

namespace finger {

namespace {

constexpr std::size_t kColumns = 16;

std::array<double TraceRecord::*, kColumns> columns() {
  return {&TraceRecord::t,   &TraceRecord::x1,     &TraceRecord::theta2, &TraceRecord::x2,
          &TraceRecord::x3,  &TraceRecord::current, &TraceRecord::x1d,   &TraceRecord::dx1d,
          &TraceRecord::e,   &TraceRecord::s,      &TraceRecord::eta,    &TraceRecord::x3d,
          &TraceRecord::u,   &TraceRecord::e_volt, &TraceRecord::v,      &TraceRecord::vdot};
}

}  // namespace

void write_trace_csv(std::ostream& out, const Trace& trace) {
  const auto cols = columns();
  std::string buf;
  buf.reserve(trace.size() * kColumns * 24 + 128);
  buf += kTraceHeader;
  buf += '\n';
  for (const auto& r : trace) {
    for (std::size_t c = 0; c < kColumns; ++c) {
      if (c > 0) buf += ',';
      fmt::format_to(std::back_inserter(buf), "{}", r.*cols[c]);
    }
    buf += '\n';
  }
  out << buf;
}

Trace read_trace_csv(std::istream& in) {
  const auto cols = columns();
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw TraceFormatError(1, "trace: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader) throw TraceFormatError(1, "trace: line 1: unexpected header");

  Trace trace;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    TraceRecord r;
    std::string_view rest(line);
    for (std::size_t c = 0; c < kColumns; ++c) {
      const auto comma = rest.find(',');
      const bool last = c + 1 == kColumns;
      if (last != (comma == std::string_view::npos))
        throw TraceFormatError(line_no, fmt::format("trace: line {}: expected {} columns",
                                                    line_no, kColumns));
      const std::string_view field = rest.substr(0, comma);
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        throw TraceFormatError(line_no, fmt::format("trace: line {}: bad number '{}'", line_no,
                                                    field));
      r.*cols[c] = value;
      if (!last) rest = rest.substr(comma + 1);
    }
    trace.push_back(r);
  }
  return trace;
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TraceFormatError(0, fmt::format("cannot read trace file '{}'", path));
  return read_trace_csv(in);
}

std::string format_report(const StepMetrics& m) {
  std::string out = "kind = step\n";
  if (m.settling_time) {
    fmt::format_to(std::back_inserter(out), "settled = true\nsettling_time_s = {}\n",
                   *m.settling_time);
  } else {
    out += "settled = false\nsettling_time_s = nan\n";
  }
  fmt::format_to(std::back_inserter(out),
                 "overshoot_pct = {:.3f}\nsteady_state_error_rad = {}\nband = {}\n",
                 m.overshoot_pct, m.steady_state_error, m.band);
  return out;
}

std::string format_report(const TrackingMetrics& m) {
  return fmt::format(
      "kind = tracking\nwindow_start_s = {}\nmax_abs_error_rad = {}\nrms_error_rad = {}\n"
      "max_abs_error_deg = {}\n",
      m.window_start, m.max_abs_error, m.rms_error, m.max_abs_error * 180.0 / std::numbers::pi);
}

}  // namespace finger
