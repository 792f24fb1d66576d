#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "finger/analysis.hpp"
#include "finger/simulator.hpp"

namespace finger {

/// Header of trace.csv, in TraceRecord field order.
inline constexpr const char* kTraceHeader =
    "t,x1,theta2,x2,x3,current,x1d,dx1d,e,s,eta,x3d,u,e_volt,v,vdot";

class TraceFormatError : public std::runtime_error {
 public:
  TraceFormatError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Values use the shortest decimal form that round-trips the double exactly.
void write_trace_csv(std::ostream& out, const Trace& trace);
Trace read_trace_csv(std::istream& in);
Trace read_trace_file(const std::string& path);

/// `key = value` report lines.
std::string format_report(const StepMetrics& m);
std::string format_report(const TrackingMetrics& m);

}  // namespace finger
