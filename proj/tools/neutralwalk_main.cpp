#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "neutralwalk/io.hpp"

namespace {

using namespace neutralwalk;

struct CliOptions {
  std::string config_path;
  std::string model = "both";
  std::uint64_t seed = kDefaultSeed;
  long long steps = -1;
  int runs = -1;
  double alpha = -1.0;
  int fleet_size = -1;
  std::string out_dir = "out";
  std::string mutation;
  std::string init;
  int capacity = -1;
  std::vector<int> sizes;
  std::vector<double> alphas;
};

void add_shared_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config_path, "key=value config file");
  cmd->add_option("--model", opt.model, "redundant | degenerate | both")
      ->check(CLI::IsMember({"redundant", "degenerate", "both"}));
  cmd->add_option("--seed", opt.seed, "master random seed");
  cmd->add_option("--steps", opt.steps, "walk steps per run");
  cmd->add_option("--runs", opt.runs, "runs per batch");
  cmd->add_option("--alpha", opt.alpha, "neutrality threshold in percent");
  cmd->add_option("--fleet-size", opt.fleet_size, "number of vehicles");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--mutation", opt.mutation, "replace | delete")
      ->check(CLI::IsMember({"replace", "delete"}));
  cmd->add_option("--init", opt.init, "uniform | full")
      ->check(CLI::IsMember({"uniform", "full"}));
  cmd->add_option("--capacity", opt.capacity, "per-vehicle task capacity");
}

ExperimentSetup resolve_setup(const CliOptions& opt, CLI::App* cmd) {
  ExperimentSetup setup;
  if (!opt.config_path.empty()) setup = parse_config(opt.config_path);
  if (cmd->count("--seed")) setup.seed = opt.seed;
  if (opt.steps >= 0) setup.max_steps = opt.steps;
  if (opt.runs >= 0) setup.runs = opt.runs;
  if (opt.alpha >= 0) setup.alpha = opt.alpha;
  if (opt.fleet_size >= 0) {
    setup.fleet.fleet_size = opt.fleet_size;
    setup.fleet.base_fleet_size = std::min(setup.fleet.base_fleet_size, opt.fleet_size);
  }
  if (!opt.mutation.empty()) setup.fleet.mutation_mode = parse_mutation(opt.mutation);
  if (!opt.init.empty()) setup.fleet.init_scheme = parse_init_scheme(opt.init);
  if (opt.capacity >= 0) setup.fleet.capacity = opt.capacity;
  if (!opt.sizes.empty()) setup.sweep_sizes = opt.sizes;
  if (!opt.alphas.empty()) setup.sweep_alphas = opt.alphas;
  return setup;
}

std::vector<ModelKind> resolve_models(const std::string& model) {
  if (model == "both") return {ModelKind::Degenerate, ModelKind::Redundant};
  return {parse_model(model)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neutral-network explorer for the transportation-fleet model"};
  app.require_subcommand(1);

  CliOptions opt;
  auto* explore_cmd = app.add_subcommand("explore", "single neutral-network walk");
  auto* batch_cmd = app.add_subcommand("batch", "multi-run averaged experiment");
  auto* sweep_size_cmd = app.add_subcommand("sweep-size", "fleet-size sweep");
  auto* sweep_alpha_cmd = app.add_subcommand("sweep-alpha", "neutrality-threshold sweep");
  auto* oracle_cmd = app.add_subcommand("oracle-check", "run the bundled fixture self-checks");
  for (auto* cmd : {explore_cmd, batch_cmd, sweep_size_cmd, sweep_alpha_cmd}) {
    add_shared_flags(cmd, opt);
  }
  sweep_size_cmd->add_option("--sizes", opt.sizes, "fleet sizes to sweep");
  sweep_alpha_cmd->add_option("--alphas", opt.alphas, "alpha values to sweep");

  CLI11_PARSE(app, argc, argv);

  try {
    if (oracle_cmd->parsed()) {
      return oracle_check(std::cout) ? 0 : 1;
    }

    if (explore_cmd->parsed()) {
      ExperimentSetup setup = resolve_setup(opt, explore_cmd);
      if (opt.model != "both") setup.fleet.model = parse_model(opt.model);
      Rng rng(setup.seed);
      const ExplorationResult result =
          explore(setup.fleet, setup.alpha, setup.max_steps, rng);
      write_explore_outputs(result, setup.fleet, setup.alpha, setup.max_steps, setup.seed,
                            opt.out_dir);
      std::cout << "nn_size=" << nn_size(result) << " evolvability=" << evolvability(result)
                << " steps=" << result.steps_executed << " -> " << opt.out_dir << "\n";
      return 0;
    }

    if (batch_cmd->parsed()) {
      const ExperimentSetup setup = resolve_setup(opt, batch_cmd);
      std::vector<RunAggregate> aggregates;
      for (const ModelKind model : resolve_models(opt.model)) {
        FleetConfig config = setup.fleet;
        config.model = model;
        RunAggregate a =
            run_batch(config, setup.alpha, setup.max_steps, setup.runs, setup.seed);
        a.sweep_param = setup.alpha;
        std::cout << model_name(model) << ": nn_size mean=" << a.nn_size.mean
                  << " evolvability mean=" << a.evolvability.mean << "\n";
        aggregates.push_back(std::move(a));
      }
      write_batch_outputs(aggregates, "alpha", opt.out_dir);
      return 0;
    }

    if (sweep_size_cmd->parsed()) {
      const ExperimentSetup setup = resolve_setup(opt, sweep_size_cmd);
      const auto table =
          sweep_fleet_size(setup.fleet, resolve_models(opt.model), setup.sweep_sizes,
                           setup.alpha, setup.max_steps, setup.runs, setup.seed);
      write_batch_outputs(table, "fleet_size", opt.out_dir);
      std::cout << "wrote " << table.size() << " sweep cells -> " << opt.out_dir << "\n";
      return 0;
    }

    if (sweep_alpha_cmd->parsed()) {
      const ExperimentSetup setup = resolve_setup(opt, sweep_alpha_cmd);
      const auto table = sweep_alpha(setup.fleet, resolve_models(opt.model), setup.sweep_alphas,
                                     setup.max_steps, setup.runs, setup.seed);
      write_batch_outputs(table, "alpha", opt.out_dir);
      std::cout << "wrote " << table.size() << " sweep cells -> " << opt.out_dir << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
