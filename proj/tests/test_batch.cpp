#include <doctest.h>

#include <vector>

#include "finger/batch.hpp"

using namespace finger;

namespace {

std::vector<SimConfig> gain_grid() {
  std::vector<SimConfig> out;
  for (double k1 : {10.0, 28.0}) {
    for (double k2 : {20.0, 40.0}) {
      SimConfig c;
      c.t_end = 0.5;
      c.gains.k1 = k1;
      c.gains.k2 = k2;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("parallel batch equals the serial reference") {
  const auto configs = gain_grid();
  const auto serial = run_batch_serial(configs);
  for (int threads : {1, 2, 4}) {
    const auto par = run_batch_parallel(configs, threads);
    REQUIRE(par.size() == serial.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      REQUIRE(par[i].ok());
      CHECK(*par[i].trace == *serial[i].trace);
    }
  }
}

TEST_CASE("a diverging run is captured without affecting the others") {
  auto configs = gain_grid();
  configs[1].substeps = 1;
  configs[1].t_end = 2.0;
  const auto out = run_batch_parallel(configs, 2);
  REQUIRE(out.size() == configs.size());
  CHECK_FALSE(out[1].ok());
  CHECK(out[1].diverged);
  CHECK_FALSE(out[1].error.empty());
  CHECK(out[0].ok());
  CHECK(out[2].ok());
  CHECK(out[3].ok());
}

TEST_CASE("an invalid config is captured as an error") {
  std::vector<SimConfig> configs(1);
  configs[0].dt = 0.0;
  const auto out = run_batch_serial(configs);
  CHECK_FALSE(out[0].ok());
  CHECK_FALSE(out[0].diverged);
  CHECK_FALSE(out[0].error.empty());
}

TEST_CASE("empty batch") {
  CHECK(run_batch_parallel({}).empty());
  CHECK(run_batch_serial({}).empty());
}
