#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "finger/simulator.hpp"

namespace finger {

/// Config text format: one `section.key = value` per line, `#` starts a
/// comment. Sections are finger, actuator, controller, traj and sim; angles
/// also accept a `_deg` variant of their key. Missing keys take the defaults
/// of SimConfig, with link COM offsets and inertias derived from the given
/// lengths and masses unless set explicitly.
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { parse, unknown_key, validation };

  ConfigError(Kind kind, std::size_t line, std::string key, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line), key_(std::move(key)) {}

  Kind kind() const noexcept { return kind_; }
  /// 1-based line of the offending entry; 0 when it isn't tied to a line.
  std::size_t line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::string key_;
};

SimConfig parse_config(std::string_view text);

/// Writes every key explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(const SimConfig& config);

SimConfig load_config_file(const std::string& path);

}  // namespace finger
