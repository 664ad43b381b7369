#include "neutralwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace neutralwalk {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

long long parse_ll(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
  }
}

double parse_dbl(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
  }
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// Rounded to the printed 6-significant-digit form so files and JSON agree.
double rounded6(double v) { return std::stod(format_double(v)); }

ordered_json stats_json(const Stats& s) {
  return ordered_json{{"mean", rounded6(s.mean)},
                      {"std", rounded6(s.stddev)},
                      {"min", rounded6(s.min)},
                      {"max", rounded6(s.max)}};
}

std::string series_csv(const std::vector<SeriesRow>& series) {
  std::string out = "step,nn_size,unique_boundary_phenotypes,duplicates\n";
  for (const SeriesRow& row : series) {
    out += std::to_string(row.step);
    out += ',';
    out += std::to_string(row.neutral_count);
    out += ',';
    out += std::to_string(row.boundary_phenotype_count);
    out += ',';
    out += std::to_string(row.duplicate_count);
    out += '\n';
  }
  return out;
}

std::string mean_series_csv(const RunAggregate& aggregate) {
  std::string out = "step,nn_size,unique_boundary_phenotypes,duplicates\n";
  for (std::size_t s = 0; s < aggregate.mean_neutral_series.size(); ++s) {
    out += std::to_string(s);
    out += ',';
    out += format_double(aggregate.mean_neutral_series[s]);
    out += ',';
    out += format_double(aggregate.mean_boundary_phenotype_series[s]);
    out += ',';
    out += format_double(aggregate.mean_duplicate_series[s]);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string model_name(ModelKind model) {
  return model == ModelKind::Redundant ? "redundant" : "degenerate";
}

ModelKind parse_model(const std::string& name) {
  if (name == "redundant") return ModelKind::Redundant;
  if (name == "degenerate") return ModelKind::Degenerate;
  throw ConfigError("unknown model '" + name + "' (expected redundant or degenerate)");
}

std::string mutation_name(MutationMode mode) {
  return mode == MutationMode::TypeReplacement ? "replace" : "delete";
}

MutationMode parse_mutation(const std::string& name) {
  if (name == "replace") return MutationMode::TypeReplacement;
  if (name == "delete") return MutationMode::Deletion;
  throw ConfigError("unknown mutation mode '" + name + "' (expected replace or delete)");
}

std::string init_scheme_name(InitScheme scheme) {
  return scheme == InitScheme::Uniform ? "uniform" : "full";
}

InitScheme parse_init_scheme(const std::string& name) {
  if (name == "uniform") return InitScheme::Uniform;
  if (name == "full") return InitScheme::Full;
  throw ConfigError("unknown init scheme '" + name + "' (expected uniform or full)");
}

ExperimentSetup parse_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file: " + path.string());

  ExperimentSetup setup;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "task_count") {
      setup.fleet.task_count = static_cast<int>(parse_ll(key, value));
    } else if (key == "fleet_size") {
      setup.fleet.fleet_size = static_cast<int>(parse_ll(key, value));
    } else if (key == "base_fleet_size") {
      setup.fleet.base_fleet_size = static_cast<int>(parse_ll(key, value));
    } else if (key == "capacity") {
      setup.fleet.capacity = static_cast<int>(parse_ll(key, value));
    } else if (key == "init_state_max") {
      setup.fleet.init_state_max = static_cast<int>(parse_ll(key, value));
    } else if (key == "model") {
      setup.fleet.model = parse_model(value);
    } else if (key == "mutation") {
      setup.fleet.mutation_mode = parse_mutation(value);
    } else if (key == "init") {
      setup.fleet.init_scheme = parse_init_scheme(value);
    } else if (key == "degenerate_init") {
      if (value == "random") {
        setup.fleet.degenerate_init = DegenerateInit::RandomDistinct;
      } else if (value == "double_ring") {
        setup.fleet.degenerate_init = DegenerateInit::DoubleRing;
      } else {
        throw ConfigError("config key 'degenerate_init': expected random or double_ring");
      }
    } else if (key == "alpha") {
      setup.alpha = parse_dbl(key, value);
      if (setup.alpha < 0) throw ConfigError("config key 'alpha': must be nonnegative");
    } else if (key == "max_steps") {
      setup.max_steps = parse_ll(key, value);
      if (setup.max_steps < 1) throw ConfigError("config key 'max_steps': must be >= 1");
    } else if (key == "runs") {
      setup.runs = static_cast<int>(parse_ll(key, value));
      if (setup.runs < 1) throw ConfigError("config key 'runs': must be >= 1");
    } else if (key == "seed") {
      setup.seed = static_cast<std::uint64_t>(parse_ll(key, value));
    } else if (key == "sweep_sizes") {
      setup.sweep_sizes.clear();
      for (const auto& item : split_list(value)) {
        setup.sweep_sizes.push_back(static_cast<int>(parse_ll(key, item)));
      }
    } else if (key == "sweep_alphas") {
      setup.sweep_alphas.clear();
      for (const auto& item : split_list(value)) {
        setup.sweep_alphas.push_back(parse_dbl(key, item));
      }
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  setup.fleet.check();
  return setup;
}

std::string config_text(const ExperimentSetup& setup) {
  std::string out;
  auto kv = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  kv("model", model_name(setup.fleet.model));
  kv("task_count", std::to_string(setup.fleet.task_count));
  kv("fleet_size", std::to_string(setup.fleet.fleet_size));
  kv("base_fleet_size", std::to_string(setup.fleet.base_fleet_size));
  kv("capacity", std::to_string(setup.fleet.capacity));
  kv("init_state_max", std::to_string(setup.fleet.init_state_max));
  kv("init", init_scheme_name(setup.fleet.init_scheme));
  kv("mutation", mutation_name(setup.fleet.mutation_mode));
  kv("degenerate_init", setup.fleet.degenerate_init == DegenerateInit::RandomDistinct
                            ? "random"
                            : "double_ring");
  kv("alpha", format_double(setup.alpha));
  kv("max_steps", std::to_string(setup.max_steps));
  kv("runs", std::to_string(setup.runs));
  kv("seed", std::to_string(setup.seed));
  std::string sizes;
  for (const int v : setup.sweep_sizes) {
    if (!sizes.empty()) sizes += ',';
    sizes += std::to_string(v);
  }
  kv("sweep_sizes", sizes);
  std::string alphas;
  for (const double a : setup.sweep_alphas) {
    if (!alphas.empty()) alphas += ',';
    alphas += format_double(a);
  }
  kv("sweep_alphas", alphas);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write " + tmp.string());
    file << content;
    if (!content.empty() && content.back() != '\n') file << '\n';
    file.flush();
    if (!file) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string());
}

void write_explore_outputs(const ExplorationResult& result, const FleetConfig& config,
                           double alpha, long long max_steps, std::uint64_t seed,
                           const std::filesystem::path& out_dir) {
  atomic_write(out_dir / "series.csv", series_csv(result.series));

  std::string edges = "src_id,dst_id,target_class\n";
  for (const Edge& e : result.edges) {
    edges += std::to_string(e.src);
    edges += ',';
    edges += std::to_string(e.dst);
    edges += ',';
    edges += result.node(e.dst).cls == NodeClass::Neutral ? "neutral" : "boundary";
    edges += '\n';
  }
  atomic_write(out_dir / "edges.csv", edges);

  Rng topo_rng(splitmix64(seed ^ 0x746f706fULL));
  const TopologyReport topology = topology_metrics(result, 1000, topo_rng);

  ordered_json summary;
  summary["model"] = model_name(config.model);
  summary["task_count"] = config.task_count;
  summary["fleet_size"] = config.fleet_size;
  summary["alpha"] = rounded6(alpha);
  summary["max_steps"] = max_steps;
  summary["seed"] = seed;
  summary["nn_size"] = nn_size(result);
  summary["evolvability"] = evolvability(result);
  summary["steps_executed"] = result.steps_executed;
  summary["degree_average"] = rounded6(topology.degree_average);
  if (topology.path_length_average) {
    summary["path_length_average"] = rounded6(*topology.path_length_average);
  } else {
    summary["path_length_average"] = nullptr;
  }
  atomic_write(out_dir / "summary.json", summary.dump(2));
}

void write_batch_outputs(const std::vector<RunAggregate>& aggregates,
                         const std::string& param_name, const std::filesystem::path& out_dir) {
  std::string sweep = "model," + param_name +
                      ",nn_size_mean,nn_size_std,nn_size_min,nn_size_max,"
                      "evolvability_mean,evolvability_std,evolvability_min,evolvability_max\n";
  ordered_json summary = ordered_json::array();
  for (const RunAggregate& a : aggregates) {
    sweep += model_name(a.config.model);
    sweep += ',';
    sweep += format_double(a.sweep_param);
    for (const Stats* s : {&a.nn_size, &a.evolvability}) {
      sweep += ',';
      sweep += format_double(s->mean);
      sweep += ',';
      sweep += format_double(s->stddev);
      sweep += ',';
      sweep += format_double(s->min);
      sweep += ',';
      sweep += format_double(s->max);
    }
    sweep += '\n';

    ordered_json entry;
    entry["model"] = model_name(a.config.model);
    entry[param_name] = rounded6(a.sweep_param);
    entry["task_count"] = a.config.task_count;
    entry["fleet_size"] = a.config.fleet_size;
    entry["alpha"] = rounded6(a.alpha);
    entry["max_steps"] = a.max_steps;
    entry["seed"] = a.master_seed;
    entry["runs"] = a.run_count;
    entry["nn_size"] = stats_json(a.nn_size);
    entry["evolvability"] = stats_json(a.evolvability);
    summary.push_back(std::move(entry));

    std::filesystem::path series_path;
    if (aggregates.size() == 1) {
      series_path = out_dir / "series.csv";
    } else {
      series_path = out_dir / ("series_" + model_name(a.config.model) + "_" +
                               format_double(a.sweep_param) + ".csv");
    }
    atomic_write(series_path, mean_series_csv(a));
  }
  atomic_write(out_dir / "sweep.csv", sweep);
  atomic_write(out_dir / "summary.json", summary.dump(2));
}

}  // namespace neutralwalk
