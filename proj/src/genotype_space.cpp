#include "neutralwalk/genotype_space.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace neutralwalk {

void FleetConfig::check() const {
  if (task_count < 2) throw ConfigError("task_count must be >= 2");
  if (fleet_size < 1) throw ConfigError("fleet_size must be >= 1");
  if (base_fleet_size < 1 || base_fleet_size > fleet_size) {
    throw ConfigError("base_fleet_size must be in [1, fleet_size]");
  }
  if (init_state_max < 0) throw ConfigError("init_state_max must be >= 0");
  if (init_scheme == InitScheme::Uniform && capacity < 2 * init_state_max) {
    throw ConfigError("capacity must be >= 2 * init_state_max for feasible initialization");
  }
  if (capacity < 1) throw ConfigError("capacity must be >= 1");
  if (model == ModelKind::Redundant && task_count % 2 != 0) {
    throw ConfigError("redundant model requires an even task_count");
  }
  if (model == ModelKind::Degenerate && fleet_size > pair_count(task_count)) {
    throw ConfigError("degenerate model requires fleet_size <= C(task_count, 2)");
  }
}

std::vector<CapabilityPair> catalog_types(int task_count) {
  std::vector<CapabilityPair> catalog;
  catalog.reserve(task_count / 2);
  for (int j = 0; j + 1 < task_count; j += 2) catalog.push_back({j, j + 1});
  return catalog;
}

std::vector<CapabilityPair> all_pairs(int task_count) {
  std::vector<CapabilityPair> pairs;
  pairs.reserve(pair_count(task_count));
  for (int a = 0; a < task_count; ++a) {
    for (int b = a + 1; b < task_count; ++b) pairs.push_back({a, b});
  }
  return pairs;
}

Genotype init_redundant(const FleetConfig& config) {
  config.check();
  if (config.model != ModelKind::Redundant) throw ConfigError("config model is not Redundant");
  const auto catalog = catalog_types(config.task_count);
  Genotype genotype;
  genotype.task_count = config.task_count;
  genotype.capacity = config.capacity;
  genotype.vehicles.resize(config.fleet_size);
  for (int i = 0; i < config.fleet_size; ++i) {
    genotype.vehicles[i] = catalog[i % catalog.size()];
  }
  return genotype;
}

Genotype init_degenerate(const FleetConfig& config, Rng& rng) {
  config.check();
  if (config.model != ModelKind::Degenerate) throw ConfigError("config model is not Degenerate");
  Genotype genotype;
  genotype.task_count = config.task_count;
  genotype.capacity = config.capacity;
  genotype.vehicles.resize(config.fleet_size);

  if (config.degenerate_init == DegenerateInit::RandomDistinct) {
    auto pool = all_pairs(config.task_count);
    // Partial Fisher-Yates: the first fleet_size slots become the sample.
    for (int i = 0; i < config.fleet_size; ++i) {
      const auto j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      genotype.vehicles[i] = pool[i];
    }
  } else {
    const int t = config.task_count;
    std::vector<CapabilityPair> ring;
    std::set<CapabilityPair> seen;
    auto push = [&](int a, int b) {
      const auto pair = make_capability_pair(a, b);
      if (seen.insert(pair).second) ring.push_back(pair);
    };
    for (int j = 0; j < t; ++j) push(j, (j + 1) % t);
    for (int j = 0; j < t; ++j) push(j, (j + 2) % t);
    if (static_cast<int>(ring.size()) < config.fleet_size) {
      throw ConfigError("double-ring initializer supports at most " +
                        std::to_string(ring.size()) + " vehicles for task_count " +
                        std::to_string(t));
    }
    for (int i = 0; i < config.fleet_size; ++i) genotype.vehicles[i] = ring[i];
  }
  return genotype;
}

Genotype init_genotype(const FleetConfig& config, Rng& rng) {
  return config.model == ModelKind::Redundant ? init_redundant(config)
                                              : init_degenerate(config, rng);
}

Allocation init_allocation(const Genotype& genotype, const FleetConfig& config, Rng& rng) {
  config.check();
  Allocation allocation;
  allocation.states.resize(genotype.vehicles.size());
  for (int i = 0; i < genotype.fleet_size(); ++i) {
    if (i >= config.base_fleet_size || !genotype.vehicles[i]) continue;
    if (config.init_scheme == InitScheme::Uniform) {
      allocation.states[i].count_a = rng.uniform_int(0, config.init_state_max);
      allocation.states[i].count_b = rng.uniform_int(0, config.init_state_max);
    } else {
      allocation.states[i].count_a = rng.uniform_int(0, config.capacity);
      allocation.states[i].count_b = config.capacity - allocation.states[i].count_a;
    }
  }
  return allocation;
}

std::vector<CapabilityPair> admissible_replacements(ModelKind model, const Genotype& genotype,
                                                    int vehicle) {
  if (vehicle < 0 || vehicle >= genotype.fleet_size()) {
    throw StructuralError("vehicle index out of range");
  }
  const auto& current = genotype.vehicles[vehicle];
  std::vector<CapabilityPair> result;
  if (model == ModelKind::Redundant) {
    for (const auto& pair : catalog_types(genotype.task_count)) {
      if (!current || pair != *current) result.push_back(pair);
    }
  } else {
    std::set<CapabilityPair> present;
    for (const auto& pair : genotype.vehicles) {
      if (pair) present.insert(*pair);
    }
    for (const auto& pair : all_pairs(genotype.task_count)) {
      if (!present.count(pair)) result.push_back(pair);
    }
  }
  return result;
}

bool check_constraints(ModelKind model, const Genotype& genotype) {
  if (model == ModelKind::Redundant) {
    const auto catalog = catalog_types(genotype.task_count);
    for (const auto& pair : genotype.vehicles) {
      if (pair && std::find(catalog.begin(), catalog.end(), *pair) == catalog.end()) return false;
    }
  } else {
    std::set<CapabilityPair> seen;
    for (const auto& pair : genotype.vehicles) {
      if (pair && !seen.insert(*pair).second) return false;
    }
  }
  return true;
}

namespace {

bool vehicle_mutable(const Genotype& genotype, ModelKind model, MutationMode mode, int vehicle) {
  if (mode == MutationMode::Deletion) return genotype.vehicles[vehicle].has_value();
  if (model == ModelKind::Degenerate) {
    // The admissible set is the unused-pair pool, identical for every vehicle.
    long long present = 0;
    for (const auto& pair : genotype.vehicles) present += pair.has_value() ? 1 : 0;
    return present < pair_count(genotype.task_count);
  }
  const int types = genotype.task_count / 2;
  return types >= 2 || !genotype.vehicles[vehicle].has_value();
}

}  // namespace

bool has_mutable_vehicle(const Genotype& genotype, ModelKind model, MutationMode mode) {
  for (int v = 0; v < genotype.fleet_size(); ++v) {
    if (vehicle_mutable(genotype, model, mode, v)) return true;
  }
  return false;
}

std::optional<Mutant> mutate(const Genotype& genotype, const Allocation& allocation,
                             ModelKind model, MutationMode mode, Rng& rng) {
  if (allocation.states.size() != genotype.vehicles.size()) {
    throw StructuralError("allocation/genotype fleet sizes differ");
  }
  if (!has_mutable_vehicle(genotype, model, mode)) return std::nullopt;

  // Uniform vehicle choice with rejection of unmutable vehicles.
  for (;;) {
    const int v = static_cast<int>(rng.below(genotype.vehicles.size()));
    if (!vehicle_mutable(genotype, model, mode, v)) continue;
    Mutant mutant{genotype, allocation, v};
    if (mode == MutationMode::Deletion) {
      mutant.genotype.vehicles[v].reset();
    } else {
      const auto options = admissible_replacements(model, genotype, v);
      mutant.genotype.vehicles[v] = options[rng.below(options.size())];
    }
    mutant.allocation.states[v] = VehicleState{};
    return mutant;
  }
}

}  // namespace neutralwalk
