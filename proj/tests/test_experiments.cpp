#include <set>

#include "doctest.h"
#include "neutralwalk/experiments.hpp"

using namespace neutralwalk;

namespace {

FleetConfig small_config(ModelKind model = ModelKind::Degenerate) {
  FleetConfig config;
  config.model = model;
  config.task_count = 6;
  config.fleet_size = 5;
  config.base_fleet_size = 5;
  config.capacity = 20;
  return config;
}

}  // namespace

TEST_CASE("a single-run batch equals the run itself with zero deviation") {
  const auto config = small_config();
  const auto aggregate = run_batch(config, 5.0, 200, 1, 9001, 1);

  Rng rng(derive_seed(9001, 0));
  const auto result = explore(config, 5.0, 200, rng);
  CHECK(aggregate.run_count == 1);
  CHECK(aggregate.nn_size.mean == doctest::Approx(static_cast<double>(nn_size(result))));
  CHECK(aggregate.nn_size.stddev == 0.0);
  CHECK(aggregate.nn_size.min == aggregate.nn_size.max);
  CHECK(aggregate.evolvability.mean ==
        doctest::Approx(static_cast<double>(evolvability(result))));
  CHECK(aggregate.evolvability.stddev == 0.0);
  REQUIRE(aggregate.mean_neutral_series.size() == result.series.size());
  CHECK(aggregate.mean_neutral_series.back() ==
        doctest::Approx(static_cast<double>(result.series.back().neutral_count)));
}

TEST_CASE("batches with the same master seed agree regardless of thread count") {
  const auto config = small_config();
  const auto serial = run_batch(config, 5.0, 150, 8, 555, 1);
  const auto parallel = run_batch(config, 5.0, 150, 8, 555, 4);
  CHECK(serial.nn_size.mean == parallel.nn_size.mean);
  CHECK(serial.nn_size.stddev == parallel.nn_size.stddev);
  CHECK(serial.evolvability.mean == parallel.evolvability.mean);
  CHECK(serial.mean_neutral_series == parallel.mean_neutral_series);
  CHECK(serial.mean_boundary_phenotype_series == parallel.mean_boundary_phenotype_series);
  CHECK(serial.mean_duplicate_series == parallel.mean_duplicate_series);

  const auto other = run_batch(config, 5.0, 150, 8, 556, 1);
  CHECK(other.mean_neutral_series != serial.mean_neutral_series);  // seed actually matters
}

TEST_CASE("per-run seeds are pairwise distinct") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) CHECK(seeds.insert(derive_seed(77, i)).second);
}

TEST_CASE("a one-size sweep reduces to run_batch") {
  auto base = small_config();
  const auto table = sweep_fleet_size(base, {ModelKind::Degenerate}, {base.fleet_size}, 5.0,
                                      150, 4, 321, 1);
  REQUIRE(table.size() == 1);
  const auto direct = run_batch(base, 5.0, 150, 4, derive_seed(321, 0), 1);
  CHECK(table[0].nn_size.mean == direct.nn_size.mean);
  CHECK(table[0].evolvability.mean == direct.evolvability.mean);
  CHECK(table[0].sweep_param == doctest::Approx(base.fleet_size));
}

TEST_CASE("a one-alpha sweep reduces to run_batch") {
  auto base = small_config();
  const auto table = sweep_alpha(base, {ModelKind::Degenerate}, {5.0}, 150, 4, 321, 1);
  REQUIRE(table.size() == 1);
  const auto direct = run_batch(base, 5.0, 150, 4, derive_seed(321, 0), 1);
  CHECK(table[0].nn_size.mean == direct.nn_size.mean);
  CHECK(table[0].evolvability.mean == direct.evolvability.mean);
}

TEST_CASE("both models of a sweep cell share the master seed (paired runs)") {
  auto base = small_config();
  const auto table = sweep_alpha(base, {ModelKind::Degenerate, ModelKind::Redundant}, {5.0},
                                 100, 3, 42, 1);
  REQUIRE(table.size() == 2);
  CHECK(table[0].master_seed == table[1].master_seed);
  CHECK(table[0].config.model == ModelKind::Degenerate);
  CHECK(table[1].config.model == ModelKind::Redundant);
}

TEST_CASE("sweep validation") {
  auto base = small_config();
  CHECK_THROWS_AS(sweep_fleet_size(base, {ModelKind::Degenerate}, {8, 6}, 5.0, 100, 2, 1, 1),
                  ConfigError);  // not ascending
  CHECK_THROWS_AS(sweep_fleet_size(base, {ModelKind::Degenerate}, {2}, 5.0, 100, 2, 1, 1),
                  ConfigError);  // below base fleet size
  CHECK_THROWS_AS(sweep_fleet_size(base, {ModelKind::Degenerate}, {40}, 5.0, 100, 2, 1, 1),
                  ConfigError);  // exceeds C(6,2)=15 distinct pairs
  CHECK_THROWS_AS(run_batch(base, 5.0, 100, 0, 1, 1), ConfigError);
}
