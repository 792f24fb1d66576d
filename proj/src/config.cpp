#include "finger/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

namespace finger {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct Entry {
  std::string value;
  std::size_t line;
};

using Entries = std::map<std::string, Entry, std::less<>>;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view canonical_section(std::string_view section) {
  return section == "trajectory" ? std::string_view("traj") : section;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& known_keys() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> keys = {
      {"finger",
       {"m1", "m2", "l1", "l2", "lc1", "lc2", "i1", "i2", "r1", "r2", "k1s", "k2s", "grav"}},
      {"actuator", {"j", "b", "ra", "ms", "l", "rarm", "kt", "kb"}},
      {"controller", {"lambda", "k1", "k2", "mode", "voltage_limit"}},
      {"traj",
       {"kind", "amplitude", "amplitude_deg", "a3", "a2", "a1", "a0", "theta_start",
        "theta_start_deg", "theta_end", "theta_end_deg", "duration", "hold_after"}},
      {"sim", {"dt", "t_end", "substeps", "x1_0", "x1_0_deg", "x2_0", "x3_0"}},
  };
  return keys;
}

bool is_known(std::string_view section, std::string_view key) {
  const auto it = known_keys().find(section);
  if (it == known_keys().end()) return false;
  for (const auto& k : it->second)
    if (k == key) return true;
  return false;
}

Entries tokenize(std::string_view text) {
  Entries entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(ConfigError::Kind::parse, line_no, "",
                        fmt::format("line {}: expected 'section.key = value'", line_no));
    const std::string_view lhs = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto dot = lhs.find('.');
    if (dot == std::string_view::npos || value.empty())
      throw ConfigError(ConfigError::Kind::parse, line_no, std::string(lhs),
                        fmt::format("line {}: expected 'section.key = value'", line_no));

    const std::string_view section = canonical_section(lhs.substr(0, dot));
    const std::string_view key = lhs.substr(dot + 1);
    const std::string full = fmt::format("{}.{}", section, key);
    if (!is_known(section, key))
      throw ConfigError(ConfigError::Kind::unknown_key, line_no, std::string(lhs),
                        fmt::format("line {}: unknown key '{}'", line_no, lhs));
    if (entries.contains(full))
      throw ConfigError(ConfigError::Kind::parse, line_no, full,
                        fmt::format("line {}: duplicate key '{}' (first set on line {})", line_no,
                                    full, entries.at(full).line));
    entries.emplace(full, Entry{std::string(value), line_no});
  }
  return entries;
}

class Reader {
 public:
  explicit Reader(Entries entries) : entries_(std::move(entries)) {}

  bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

  std::size_t line_of(std::string_view key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  void number(std::string_view key, double& out) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return;
    const std::string& v = it->second.value;
    const char* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end) bad(it, "a number");
  }

  void integer(std::string_view key, int& out) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return;
    const std::string& v = it->second.value;
    const char* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end) bad(it, "an integer");
  }

  void boolean(std::string_view key, bool& out) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return;
    const std::string& v = it->second.value;
    if (v == "true" || v == "1") {
      out = true;
    } else if (v == "false" || v == "0") {
      out = false;
    } else {
      bad(it, "true or false");
    }
  }

  // Angle given either as `key` (rad) or `key_deg`, never both.
  void angle(std::string_view key, double& out) const {
    const std::string deg_key = fmt::format("{}_deg", key);
    if (has(key) && has(deg_key))
      throw ConfigError(ConfigError::Kind::validation, line_of(deg_key), deg_key,
                        fmt::format("line {}: both {} and {} given", line_of(deg_key), key,
                                    deg_key));
    number(key, out);
    double deg = 0.0;
    if (has(deg_key)) {
      number(deg_key, deg);
      out = deg * kDegToRad;
    }
  }

  template <class F>
  void word(std::string_view key, F&& assign) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return;
    if (!assign(std::string_view(it->second.value))) bad(it, "one of the documented names");
  }

 private:
  [[noreturn]] void bad(Entries::const_iterator it, std::string_view expected) const {
    throw ConfigError(ConfigError::Kind::parse, it->second.line, it->first,
                      fmt::format("line {}: {} = '{}' is not {}", it->second.line, it->first,
                                  it->second.value, expected));
  }

  Entries entries_;
};

}  // namespace

SimConfig parse_config(std::string_view text) {
  const Reader in(tokenize(text));
  SimConfig c;

  FingerParams& fp = c.fp;
  in.number("finger.m1", fp.m1);
  in.number("finger.m2", fp.m2);
  in.number("finger.l1", fp.l1);
  in.number("finger.l2", fp.l2);
  fp.lc1 = fp.l1 / 2.0;
  fp.lc2 = fp.l2 / 2.0;
  fp.i1 = fp.m1 * fp.l1 * fp.l1 / 12.0;
  fp.i2 = fp.m2 * fp.l2 * fp.l2 / 12.0;
  in.number("finger.lc1", fp.lc1);
  in.number("finger.lc2", fp.lc2);
  in.number("finger.i1", fp.i1);
  in.number("finger.i2", fp.i2);
  in.number("finger.r1", fp.r1);
  in.number("finger.r2", fp.r2);
  in.number("finger.k1s", fp.k1s);
  in.number("finger.k2s", fp.k2s);
  in.number("finger.grav", fp.grav);

  ActuatorParams& ap = c.ap;
  in.number("actuator.j", ap.j);
  in.number("actuator.b", ap.b);
  in.number("actuator.ra", ap.ra);
  in.number("actuator.ms", ap.ms);
  in.number("actuator.l", ap.l);
  in.number("actuator.rarm", ap.rarm);
  in.number("actuator.kt", ap.kt);
  in.number("actuator.kb", ap.kb);

  in.number("controller.lambda", c.gains.lambda_s);
  in.number("controller.k1", c.gains.k1);
  in.number("controller.k2", c.gains.k2);
  in.word("controller.mode", [&](std::string_view v) {
    const auto mode = controller_mode_from_string(v);
    if (mode) c.controller_mode = *mode;
    return mode.has_value();
  });
  in.number("controller.voltage_limit", c.voltage_limit);

  TrajectorySpec& tr = c.traj;
  in.word("traj.kind", [&](std::string_view v) {
    const auto kind = trajectory_kind_from_string(v);
    if (kind) tr.kind = *kind;
    return kind.has_value();
  });
  in.angle("traj.amplitude", tr.amplitude);
  in.number("traj.a3", tr.coeffs.a3);
  in.number("traj.a2", tr.coeffs.a2);
  in.number("traj.a1", tr.coeffs.a1);
  in.number("traj.a0", tr.coeffs.a0);
  in.angle("traj.theta_start", tr.theta_start);
  in.angle("traj.theta_end", tr.theta_end);
  in.number("traj.duration", tr.duration);
  in.boolean("traj.hold_after", tr.hold_after);

  in.number("sim.dt", c.dt);
  in.number("sim.t_end", c.t_end);
  in.integer("sim.substeps", c.substeps);
  in.angle("sim.x1_0", c.x0.x1);
  in.number("sim.x2_0", c.x0.x2);
  in.number("sim.x3_0", c.x0.x3);

  try {
    validate(c);
  } catch (const InvalidParameter& e) {
    std::size_t line = in.line_of(e.field());
    if (line == 0) line = in.line_of(e.field() + "_deg");
    const std::string where = line > 0 ? fmt::format("line {}: ", line) : std::string{};
    throw ConfigError(ConfigError::Kind::validation, line, e.field(),
                      fmt::format("{}invalid value: {}", where, e.what()));
  }
  return c;
}

std::string serialize_config(const SimConfig& c) {
  std::string out;
  auto put = [&out](std::string_view key, auto value) {
    fmt::format_to(std::back_inserter(out), "{} = {}\n", key, value);
  };
  const FingerParams& fp = c.fp;
  put("finger.m1", fp.m1);
  put("finger.m2", fp.m2);
  put("finger.l1", fp.l1);
  put("finger.l2", fp.l2);
  put("finger.lc1", fp.lc1);
  put("finger.lc2", fp.lc2);
  put("finger.i1", fp.i1);
  put("finger.i2", fp.i2);
  put("finger.r1", fp.r1);
  put("finger.r2", fp.r2);
  put("finger.k1s", fp.k1s);
  put("finger.k2s", fp.k2s);
  put("finger.grav", fp.grav);
  const ActuatorParams& ap = c.ap;
  put("actuator.j", ap.j);
  put("actuator.b", ap.b);
  put("actuator.ra", ap.ra);
  put("actuator.ms", ap.ms);
  put("actuator.l", ap.l);
  put("actuator.rarm", ap.rarm);
  put("actuator.kt", ap.kt);
  put("actuator.kb", ap.kb);
  put("controller.lambda", c.gains.lambda_s);
  put("controller.k1", c.gains.k1);
  put("controller.k2", c.gains.k2);
  put("controller.mode", to_string(c.controller_mode));
  put("controller.voltage_limit", c.voltage_limit);
  const TrajectorySpec& tr = c.traj;
  put("traj.kind", to_string(tr.kind));
  put("traj.amplitude", tr.amplitude);
  put("traj.a3", tr.coeffs.a3);
  put("traj.a2", tr.coeffs.a2);
  put("traj.a1", tr.coeffs.a1);
  put("traj.a0", tr.coeffs.a0);
  put("traj.theta_start", tr.theta_start);
  put("traj.theta_end", tr.theta_end);
  put("traj.duration", tr.duration);
  put("traj.hold_after", tr.hold_after ? "true" : "false");
  put("sim.dt", c.dt);
  put("sim.t_end", c.t_end);
  put("sim.substeps", c.substeps);
  put("sim.x1_0", c.x0.x1);
  put("sim.x2_0", c.x0.x2);
  put("sim.x3_0", c.x0.x3);
  return out;
}

SimConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError(ConfigError::Kind::parse, 0, "",
                      fmt::format("cannot read config file '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace finger
