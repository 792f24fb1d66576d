#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace finger::test {

inline double rel_err(double actual, double expected, double floor = 1e-12) {
  return std::abs(actual - expected) / std::max(std::abs(expected), floor);
}

template <class A, class B>
double rel_err_vec(const A& actual, const B& expected, double floor = 1e-12) {
  return (actual - expected).norm() / std::max(expected.norm(), floor);
}

/// Seeded generator for the hand-rolled property tests.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  Eigen::Vector2d vec2(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace finger::test
