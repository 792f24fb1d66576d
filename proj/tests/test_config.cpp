#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "finger/config.hpp"
#include "test_helpers.hpp"

using namespace finger;

namespace {

ConfigError parse_error(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected ConfigError");
  return ConfigError(ConfigError::Kind::parse, 0, "", "");
}

}  // namespace

TEST_CASE("empty text gives the defaults") {
  CHECK(parse_config("") == SimConfig{});
  CHECK(parse_config("# only a comment\n\n   \n") == SimConfig{});
}

TEST_CASE("step in degrees") {
  const SimConfig c = parse_config("traj.kind = step\ntraj.amplitude_deg = 60\n");
  CHECK(c.traj.kind == TrajectoryKind::step);
  CHECK(c.traj.amplitude == doctest::Approx(std::numbers::pi / 3).epsilon(1e-15));
}

TEST_CASE("trajectory section alias and inline comments") {
  const SimConfig c = parse_config(
      "trajectory.kind = cubic_poly   # polynomial reference\n"
      "trajectory.a3 = -0.002\n"
      "sim.t_end = 10\n");
  CHECK(c.traj.kind == TrajectoryKind::cubic_poly);
  CHECK(c.traj.coeffs.a3 == -0.002);
  CHECK(c.t_end == 10.0);
}

TEST_CASE("derived link quantities follow the given lengths") {
  const SimConfig c = parse_config("finger.l1 = 0.08\nfinger.m1 = 0.1\n");
  CHECK(c.fp.lc1 == doctest::Approx(0.04));
  CHECK(c.fp.i1 == doctest::Approx(0.1 * 0.08 * 0.08 / 12));
  const SimConfig d = parse_config("finger.l1 = 0.08\nfinger.lc1 = 0.05\n");
  CHECK(d.fp.lc1 == 0.05);
}

TEST_CASE("validation error names the key and line") {
  const ConfigError e = parse_error("sim.t_end = 2\nsim.dt = -1\n");
  CHECK(e.kind() == ConfigError::Kind::validation);
  CHECK(e.key() == "sim.dt");
  CHECK(e.line() == 2);
}

TEST_CASE("parse errors") {
  SUBCASE("unknown key") {
    const ConfigError e = parse_error("sim.dt = 0.01\nsim.bogus = 1\n");
    CHECK(e.kind() == ConfigError::Kind::unknown_key);
    CHECK(e.line() == 2);
  }
  SUBCASE("unknown section") {
    CHECK(parse_error("plant.m1 = 1\n").kind() == ConfigError::Kind::unknown_key);
  }
  SUBCASE("missing equals") {
    const ConfigError e = parse_error("\n\nsim.dt 0.01\n");
    CHECK(e.kind() == ConfigError::Kind::parse);
    CHECK(e.line() == 3);
  }
  SUBCASE("bad number") {
    const ConfigError e = parse_error("finger.m1 = 0.05kg\n");
    CHECK(e.kind() == ConfigError::Kind::parse);
    CHECK(e.key() == "finger.m1");
  }
  SUBCASE("bad integer") {
    CHECK(parse_error("sim.substeps = 1.5\n").key() == "sim.substeps");
  }
  SUBCASE("bad trajectory kind") {
    CHECK(parse_error("traj.kind = sine\n").key() == "traj.kind");
  }
  SUBCASE("bad boolean") {
    CHECK(parse_error("traj.hold_after = yes\n").key() == "traj.hold_after");
  }
  SUBCASE("duplicate key") {
    const ConfigError e = parse_error("sim.dt = 0.01\ntraj.kind = step\nsim.dt = 0.02\n");
    CHECK(e.line() == 3);
  }
  SUBCASE("alias duplicates count") {
    CHECK(parse_error("traj.a3 = 1\ntrajectory.a3 = 2\n").line() == 2);
  }
  SUBCASE("radians and degrees together") {
    const ConfigError e = parse_error("traj.amplitude = 1\ntraj.amplitude_deg = 60\n");
    CHECK(e.kind() == ConfigError::Kind::validation);
  }
}

TEST_CASE("serialize/parse round-trip") {
  SUBCASE("defaults") {
    const SimConfig c;
    CHECK(parse_config(serialize_config(c)) == c);
  }
  SUBCASE("random configs") {
    test::Gen gen(5);
    for (int i = 0; i < 50; ++i) {
      SimConfig c;
      c.fp = FingerParams::uniform_rods(gen.uniform(0.01, 0.1), gen.uniform(0.01, 0.1),
                                        gen.uniform(0.03, 0.1), gen.uniform(0.03, 0.1));
      c.fp.r2 = gen.uniform(0.005, 0.02);
      c.ap.j = gen.uniform(1e-5, 1e-3);
      c.gains = {gen.uniform(1, 10), gen.uniform(5, 50), gen.uniform(5, 50)};
      c.traj.kind = i % 3 == 0 ? TrajectoryKind::step
                    : i % 3 == 1 ? TrajectoryKind::cubic_poly
                                 : TrajectoryKind::cubic_boundary;
      c.traj.amplitude = gen.uniform(-1, 1);
      c.traj.coeffs.a3 = gen.uniform(-0.01, 0.01);
      c.traj.hold_after = i % 2 == 0;
      c.x0.x1 = gen.uniform(-0.1, 0.1);
      c.dt = 0.02;
      c.substeps = 1 + i;
      c.controller_mode = i % 2 ? ControllerMode::zero_order_hold : ControllerMode::continuous;
      c.voltage_limit = i % 4 == 0 ? 0.0 : gen.uniform(1, 50);
      CHECK(parse_config(serialize_config(c)) == c);
    }
  }
}

TEST_CASE("load_config_file") {
  const auto path = std::filesystem::temp_directory_path() / "finger_test_config.cfg";
  {
    std::ofstream(path) << "sim.t_end = 3\n";
  }
  CHECK(load_config_file(path.string()).t_end == 3.0);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_config_file(path.string()), ConfigError);
}
