#include "neutralwalk/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

namespace neutralwalk {

namespace {

struct RunRecord {
  long long nn = 0;
  long long evolvability = 0;
  std::vector<SeriesRow> series;
};

Stats stats_of(const std::vector<long long>& values) {
  Stats s;
  if (values.empty()) return s;
  double sum = 0.0;
  s.min = s.max = static_cast<double>(values.front());
  for (const long long v : values) {
    sum += static_cast<double>(v);
    s.min = std::min(s.min, static_cast<double>(v));
    s.max = std::max(s.max, static_cast<double>(v));
  }
  s.mean = sum / values.size();
  double var = 0.0;
  for (const long long v : values) {
    const double d = v - s.mean;
    var += d * d;
  }
  s.stddev = std::sqrt(var / values.size());
  return s;
}

}  // namespace

int resolve_thread_count(int requested, int runs) {
  int threads = requested;
  if (threads <= 0) {
    if (const char* env = std::getenv("NEUTRALWALK_THREADS")) {
      threads = std::atoi(env);
    }
  }
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  return std::min(threads, std::max(runs, 1));
}

RunAggregate run_batch(const FleetConfig& config, double alpha, long long max_steps, int runs,
                       std::uint64_t master_seed, int threads) {
  if (runs < 1) throw ConfigError("runs must be >= 1");
  config.check();

  std::vector<RunRecord> records(runs);
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= runs || failed.load()) break;
      try {
        Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
        const ExplorationResult result = explore(config, alpha, max_steps, rng);
        records[i].nn = nn_size(result);
        records[i].evolvability = evolvability(result);
        records[i].series = result.series;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failure = "run " + std::to_string(i) + " (seed " +
                  std::to_string(derive_seed(master_seed, i)) + ") failed: " + e.what();
        failed.store(true);
      }
    }
  };

  const int thread_count = resolve_thread_count(threads, runs);
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw StructuralError(failure);

  RunAggregate aggregate;
  aggregate.config = config;
  aggregate.alpha = alpha;
  aggregate.max_steps = max_steps;
  aggregate.master_seed = master_seed;
  aggregate.run_count = runs;

  std::vector<long long> nn_values, evolvability_values;
  nn_values.reserve(runs);
  evolvability_values.reserve(runs);
  std::size_t rows = 0;
  for (const RunRecord& r : records) {
    nn_values.push_back(r.nn);
    evolvability_values.push_back(r.evolvability);
    rows = std::max(rows, r.series.size());
  }
  aggregate.nn_size = stats_of(nn_values);
  aggregate.evolvability = stats_of(evolvability_values);

  aggregate.mean_neutral_series.assign(rows, 0.0);
  aggregate.mean_boundary_phenotype_series.assign(rows, 0.0);
  aggregate.mean_duplicate_series.assign(rows, 0.0);
  for (const RunRecord& r : records) {
    for (std::size_t s = 0; s < rows; ++s) {
      const SeriesRow& row = r.series[std::min(s, r.series.size() - 1)];
      aggregate.mean_neutral_series[s] += static_cast<double>(row.neutral_count);
      aggregate.mean_boundary_phenotype_series[s] +=
          static_cast<double>(row.boundary_phenotype_count);
      aggregate.mean_duplicate_series[s] += static_cast<double>(row.duplicate_count);
    }
  }
  for (std::size_t s = 0; s < rows; ++s) {
    aggregate.mean_neutral_series[s] /= runs;
    aggregate.mean_boundary_phenotype_series[s] /= runs;
    aggregate.mean_duplicate_series[s] /= runs;
  }
  return aggregate;
}

std::vector<RunAggregate> sweep_fleet_size(const FleetConfig& base_config,
                                           const std::vector<ModelKind>& models,
                                           const std::vector<int>& sizes, double alpha,
                                           long long max_steps, int runs,
                                           std::uint64_t master_seed, int threads) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw ConfigError("sweep sizes must be ascending");
  }
  std::vector<RunAggregate> table;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] < base_config.base_fleet_size) {
      throw ConfigError("sweep size below base_fleet_size");
    }
    const std::uint64_t cell_seed = derive_seed(master_seed, static_cast<std::uint64_t>(k));
    for (const ModelKind model : models) {
      FleetConfig config = base_config;
      config.model = model;
      config.fleet_size = sizes[k];
      RunAggregate aggregate = run_batch(config, alpha, max_steps, runs, cell_seed, threads);
      aggregate.sweep_param = sizes[k];
      table.push_back(std::move(aggregate));
    }
  }
  return table;
}

std::vector<RunAggregate> sweep_alpha(const FleetConfig& base_config,
                                      const std::vector<ModelKind>& models,
                                      const std::vector<double>& alphas, long long max_steps,
                                      int runs, std::uint64_t master_seed, int threads) {
  if (!std::is_sorted(alphas.begin(), alphas.end())) {
    throw ConfigError("sweep alphas must be ascending");
  }
  std::vector<RunAggregate> table;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (alphas[k] < 0) throw ConfigError("alpha must be nonnegative");
    const std::uint64_t cell_seed = derive_seed(master_seed, static_cast<std::uint64_t>(k));
    for (const ModelKind model : models) {
      FleetConfig config = base_config;
      config.model = model;
      RunAggregate aggregate = run_batch(config, alphas[k], max_steps, runs, cell_seed, threads);
      aggregate.sweep_param = alphas[k];
      table.push_back(std::move(aggregate));
    }
  }
  return table;
}

}  // namespace neutralwalk
