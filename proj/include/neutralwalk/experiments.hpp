#pragma once

#include <cstdint>
#include <vector>

#include "neutralwalk/explorer.hpp"

namespace neutralwalk {

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct RunAggregate {
  FleetConfig config;
  double alpha = 0.0;
  long long max_steps = 0;
  std::uint64_t master_seed = 0;
  double sweep_param = 0.0;  // varied quantity in a sweep (V or alpha)
  int run_count = 0;
  Stats nn_size;
  Stats evolvability;
  // Per-step means over runs; runs that stopped early hold their final value.
  std::vector<double> mean_neutral_series;
  std::vector<double> mean_boundary_phenotype_series;
  std::vector<double> mean_duplicate_series;
};

// 0 -> NEUTRALWALK_THREADS env var, falling back to hardware concurrency.
int resolve_thread_count(int requested, int runs);

// `runs` independent explorations seeded from (master_seed, run_index),
// executed on a worker pool; aggregation is keyed by run index so the result
// does not depend on completion order.
RunAggregate run_batch(const FleetConfig& config, double alpha, long long max_steps, int runs,
                       std::uint64_t master_seed, int threads = 0);

// One aggregate per (model, fleet size); both models of a cell share per-run
// seeds so contrasts are paired. base_fleet_size stays fixed, so added
// vehicles are excess capacity with zero initial allocation.
std::vector<RunAggregate> sweep_fleet_size(const FleetConfig& base_config,
                                           const std::vector<ModelKind>& models,
                                           const std::vector<int>& sizes, double alpha,
                                           long long max_steps, int runs,
                                           std::uint64_t master_seed, int threads = 0);

// One aggregate per (model, alpha), paired seeding as above.
std::vector<RunAggregate> sweep_alpha(const FleetConfig& base_config,
                                      const std::vector<ModelKind>& models,
                                      const std::vector<double>& alphas, long long max_steps,
                                      int runs, std::uint64_t master_seed, int threads = 0);

}  // namespace neutralwalk
