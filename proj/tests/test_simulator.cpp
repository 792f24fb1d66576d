#include <doctest.h>

#include <cmath>
#include <numbers>

#include "finger/analysis.hpp"
#include "finger/simulator.hpp"

using namespace finger;

using State1 = std::array<double, 1>;

TEST_CASE("rk4_step") {
  SUBCASE("zero field leaves the state unchanged") {
    auto zero = [](double, const State1&) { return State1{0.0}; };
    CHECK(rk4_step(zero, State1{7.0}, 0.0, 0.1)[0] == 7.0);
  }

  SUBCASE("exponential growth, one step") {
    auto grow = [](double, const State1& x) { return x; };
    const double h = 0.01;
    const double x1 = rk4_step(grow, State1{1.0}, 0.0, h)[0];
    CHECK(x1 == doctest::Approx(1 + h + h * h / 2 + h * h * h / 6 + h * h * h * h / 24).epsilon(1e-15));
    CHECK(std::abs(x1 - std::exp(h)) < 1e-12);
  }

  SUBCASE("fourth-order global convergence") {
    auto decay = [](double, const State1& x) { return State1{-x[0]}; };
    auto global_error = [&](int n) {
      State1 x{1.0};
      const double h = 1.0 / n;
      for (int i = 0; i < n; ++i) x = rk4_step(decay, x, i * h, h);
      return std::abs(x[0] - std::exp(-1.0));
    };
    const double ratio = global_error(10) / global_error(20);
    CHECK(ratio > 15.0);
    CHECK(ratio < 17.0);
  }

  SUBCASE("non-finite stage is reported") {
    auto blow = [](double t, const State1&) { return State1{t > 0.0 ? INFINITY : 1.0}; };
    CHECK_THROWS_AS(rk4_step(blow, State1{0.0}, 0.0, 0.1), NonFiniteStage);
  }
}

TEST_CASE("config validation") {
  SimConfig c;
  CHECK_NOTHROW(validate(c));
  c.dt = -1.0;
  CHECK_THROWS_AS(validate(c), InvalidParameter);
  c = {};
  c.t_end = 0.015;
  CHECK_THROWS_AS(validate(c), InvalidParameter);
  c = {};
  c.substeps = 0;
  CHECK_THROWS_AS(validate(c), InvalidParameter);
  c = {};
  c.fp.r2 = 0.0;
  try {
    validate(c);
    FAIL("expected InvalidParameter");
  } catch (const InvalidParameter& e) {
    CHECK(e.field() == "finger.r2");
  }
}

TEST_CASE("run: zero horizon yields the initial record") {
  SimConfig c;
  c.t_end = 0.0;
  c.x0 = {0.1, 0.2, 0.03};
  const Trace tr = run(c);
  REQUIRE(tr.size() == 1);
  CHECK(tr[0].t == 0.0);
  CHECK(tr[0].x1 == 0.1);
  CHECK(tr[0].x2 == 0.2);
  CHECK(tr[0].x3 == 0.03);
}

TEST_CASE("run: default step experiment") {
  const SimConfig c;
  const Trace tr = run(c);
  REQUIRE(tr.size() == 501);

  SUBCASE("uniform record times") {
    for (std::size_t i = 0; i < tr.size(); ++i) CHECK(tr[i].t == static_cast<double>(i) * 0.01);
  }

  SUBCASE("converges to the target") {
    CHECK(std::abs(tr.back().e) < 1e-3);
    CHECK(std::abs(tr.back().x1 - std::numbers::pi / 3) < 1e-3);
  }

  SUBCASE("constraint and current columns are exact") {
    for (const auto& r : tr) {
      CHECK(r.theta2 == c.fp.r1 / c.fp.r2 * r.x1);
      CHECK(r.current == r.x3 / c.ap.kt);
    }
  }

  SUBCASE("V never increases") {
    for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr[i].v <= tr[i - 1].v + 1e-9);
  }

  SUBCASE("s and eta decay well below their peaks") {
    double peak_s = 0.0, peak_eta = 0.0;
    for (const auto& r : tr) {
      peak_s = std::max(peak_s, std::abs(r.s));
      peak_eta = std::max(peak_eta, std::abs(r.eta));
    }
    CHECK(std::abs(tr.back().s) < 1e-3 * peak_s);
    CHECK(std::abs(tr.back().eta) < 1e-3 * peak_eta);
  }

  SUBCASE("deterministic") {
    const Trace again = run(c);
    CHECK(again == tr);
  }
}

TEST_CASE("run: record interval robustness") {
  SimConfig a;
  SimConfig b;
  b.dt = 0.005;  // same substep count, so the RK4 step halves too
  const double x_a = run(a).back().x1;
  const double x_b = run(b).back().x1;
  CHECK(std::abs(x_a - x_b) < 1e-6);
}

TEST_CASE("run: divergence is reported, not clamped") {
  SimConfig c;
  c.substeps = 1;  // RK4 at h = 0.01 cannot follow the error-pair rotation
  try {
    run(c);
    FAIL("expected SimulationDiverged");
  } catch (const SimulationDiverged& e) {
    CHECK(e.time() > 0.0);
    CHECK(e.time() < c.t_end);
    CHECK(std::isfinite(e.last_record().x1));
  }
}

TEST_CASE("run: zero-order-hold mode") {
  SimConfig c;
  c.controller_mode = ControllerMode::zero_order_hold;
  c.substeps = 1000;
  c.t_end = 3.0;
  const Trace tr = run(c);
  CHECK(std::abs(tr.back().e) < 1e-3);
  const StepMetrics m = step_metrics(tr, c.traj.amplitude);
  CHECK(m.settling_time.has_value());
}

TEST_CASE("run: voltage clamp") {
  SimConfig c;
  c.voltage_limit = 30.0;
  c.t_end = 1.0;
  const Trace tr = run(c);
  for (const auto& r : tr) CHECK(std::abs(r.e_volt) <= 30.0);
}

TEST_CASE("controller mode names") {
  for (auto m : {ControllerMode::continuous, ControllerMode::zero_order_hold})
    CHECK(controller_mode_from_string(to_string(m)) == m);
  CHECK_FALSE(controller_mode_from_string("pid").has_value());
}
