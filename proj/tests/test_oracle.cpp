#include <doctest.h>

#include <numbers>

#include "finger/dynamics.hpp"
#include "finger/oracle.hpp"
#include "test_helpers.hpp"

using namespace finger;
using finger::test::Gen;
using finger::test::rel_err_vec;

TEST_CASE("oracle: no gravity gives no gravity torque") {
  FingerParams p;
  p.grav = 0.0;
  const auto o = oracle::lagrangian_oracle(p, Vec2(0.7, -0.3), Vec2(1.0, 2.0));
  CHECK(o.gravity.norm() < 1e-9);
}

TEST_CASE("oracle: no velocity gives no coriolis torque") {
  const auto o = oracle::lagrangian_oracle(FingerParams{}, Vec2(0.7, -0.3), Vec2::Zero());
  CHECK(o.coriolis_torque.norm() < 1e-8);
}

TEST_CASE("oracle agrees with the closed-form terms at random states") {
  const FingerParams p;
  Gen gen(21);
  for (int i = 0; i < 200; ++i) {
    const Vec2 th = gen.vec2(-std::numbers::pi, std::numbers::pi);
    const Vec2 dth = gen.vec2(-5.0, 5.0);
    const auto o = oracle::lagrangian_oracle(p, th, dth);
    CHECK((mass_matrix(p, th) - o.mass).norm() / o.mass.norm() < 1e-6);
    CHECK(rel_err_vec(Vec2(coriolis_matrix(p, th, dth) * dth), o.coriolis_torque, 1e-9) < 1e-6);
    CHECK(rel_err_vec(gravity_vector(p, th), o.gravity, 1e-9) < 1e-6);
  }
}

TEST_CASE("oracle differences converge at second order in the step") {
  const FingerParams p;
  const Vec2 th(0.4, 0.9);
  const Vec2 dth(2.0, -1.0);

  // Round-off is negligible at the default step.
  const auto a = oracle::lagrangian_oracle(p, th, dth, 1e-6);
  const auto b = oracle::lagrangian_oracle(p, th, dth, 2e-6);
  CHECK(rel_err_vec(b.coriolis_torque, a.coriolis_torque) < 1e-8);
  CHECK(rel_err_vec(b.gravity, a.gravity) < 1e-8);

  // Truncation dominates at a coarse step: successive differences shrink 4x.
  const double h = 1e-2;
  const auto o1 = oracle::lagrangian_oracle(p, th, dth, h);
  const auto o2 = oracle::lagrangian_oracle(p, th, dth, 2 * h);
  const auto o4 = oracle::lagrangian_oracle(p, th, dth, 4 * h);
  const double ratio_g = (o4.gravity - o2.gravity).norm() / (o2.gravity - o1.gravity).norm();
  const double ratio_c = (o4.coriolis_torque - o2.coriolis_torque).norm() /
                         (o2.coriolis_torque - o1.coriolis_torque).norm();
  CHECK(ratio_g == doctest::Approx(4.0).epsilon(0.05));
  CHECK(ratio_c == doctest::Approx(4.0).epsilon(0.05));
  // M is exact for a quadratic form regardless of the step.
  CHECK((o4.mass - o1.mass).norm() / o1.mass.norm() < 1e-12);
}

TEST_CASE("elimination oracle converges at fourth order in the step") {
  const FingerParams fp;
  const ActuatorParams ap;
  auto acc = [&](double h) { return oracle::eliminated_acceleration(fp, ap, 0.6, 1.5, 0.05, h); };
  const double d1 = acc(0.1) - acc(0.05);
  const double d2 = acc(0.2) - acc(0.1);
  CHECK(d2 / d1 == doctest::Approx(16.0).epsilon(0.05));
  CHECK(std::abs(acc(oracle::kEliminationStep) - acc(2 * oracle::kEliminationStep)) <
        1e-9 * std::abs(acc(oracle::kEliminationStep)));
}
