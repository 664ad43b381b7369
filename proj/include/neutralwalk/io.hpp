#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "neutralwalk/experiments.hpp"
#include "neutralwalk/explorer.hpp"

namespace neutralwalk {

// All "no flags" invocations are reproducible with this seed.
inline constexpr std::uint64_t kDefaultSeed = 20000u;

// Full experiment setup: reference defaults plus sweep grids.
struct ExperimentSetup {
  FleetConfig fleet;
  double alpha = 5.0;
  long long max_steps = 20000;
  int runs = 50;
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> sweep_sizes = {32, 36, 40, 44, 48};
  std::vector<double> sweep_alphas = {0.0, 2.0, 5.0, 10.0};
};

std::string model_name(ModelKind model);
ModelKind parse_model(const std::string& name);
std::string mutation_name(MutationMode mode);
MutationMode parse_mutation(const std::string& name);
std::string init_scheme_name(InitScheme scheme);
InitScheme parse_init_scheme(const std::string& name);

// Key-value config file (key = value, '#' comments). Missing keys keep the
// defaults above; unknown keys and malformed values raise ConfigError.
ExperimentSetup parse_config(const std::filesystem::path& path);

// Inverse of parse_config for the documented schema.
std::string config_text(const ExperimentSetup& setup);

// Locale-independent; floats printed with 6 significant digits.
std::string format_double(double v);

// Writes content to path atomically (temp file + rename); single trailing newline.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// series.csv, edges.csv, summary.json for a single exploration.
void write_explore_outputs(const ExplorationResult& result, const FleetConfig& config,
                           double alpha, long long max_steps, std::uint64_t seed,
                           const std::filesystem::path& out_dir);

// sweep.csv, summary.json and per-aggregate mean series. A single aggregate
// writes series.csv; multi-model/multi-cell tables write series_<model>[_<param>].csv.
void write_batch_outputs(const std::vector<RunAggregate>& aggregates,
                         const std::string& param_name, const std::filesystem::path& out_dir);

// Runs the bundled small-instance fixtures; prints one line per check.
// Returns true iff everything passed.
bool oracle_check(std::ostream& out);

}  // namespace neutralwalk
