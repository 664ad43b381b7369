#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "neutralwalk/core_model.hpp"
#include "neutralwalk/rng.hpp"

namespace neutralwalk {

enum class ModelKind { Redundant, Degenerate };
enum class MutationMode { TypeReplacement, Deletion };
enum class DegenerateInit { RandomDistinct, DoubleRing };

// Uniform: each base vehicle draws both counts independently from
// [0, init_state_max], leaving slack capacity on average.
// Full: each base vehicle draws a split (x, capacity - x), so every base
// vehicle starts exactly at capacity and the fleet has zero initial slack.
enum class InitScheme { Uniform, Full };

struct FleetConfig {
  int task_count = 16;
  int fleet_size = 32;
  int base_fleet_size = 32;  // vehicles that receive an initial allocation
  int capacity = 20;
  ModelKind model = ModelKind::Degenerate;
  MutationMode mutation_mode = MutationMode::TypeReplacement;
  int init_state_max = 10;
  InitScheme init_scheme = InitScheme::Uniform;
  DegenerateInit degenerate_init = DegenerateInit::RandomDistinct;

  // Throws ConfigError on any violated constraint.
  void check() const;
};

inline long long pair_count(int task_count) {
  return static_cast<long long>(task_count) * (task_count - 1) / 2;
}

// Disjoint consecutive pairs {(0,1),(2,3),...}; the redundant type catalog.
std::vector<CapabilityPair> catalog_types(int task_count);

// All C(T,2) normalized pairs in lexicographic order.
std::vector<CapabilityPair> all_pairs(int task_count);

// Round-robin over the catalog; subset sizes differ by at most one.
Genotype init_redundant(const FleetConfig& config);

// RandomDistinct: uniform sample of distinct pairs. DoubleRing: deterministic
// (j, j+1) then (j, j+2) rings, deduplicated, truncated to fleet_size.
Genotype init_degenerate(const FleetConfig& config, Rng& rng);

// Dispatch on config.model.
Genotype init_genotype(const FleetConfig& config, Rng& rng);

// Vehicles below base_fleet_size get counts per the configured InitScheme;
// excess vehicles and null vehicles get zeros.
Allocation init_allocation(const Genotype& genotype, const FleetConfig& config, Rng& rng);

// Pairs the vehicle may mutate into, sorted. Redundant: catalog minus the
// current pair. Degenerate: all pairs minus every pair present in the fleet.
std::vector<CapabilityPair> admissible_replacements(ModelKind model, const Genotype& genotype,
                                                    int vehicle);

bool check_constraints(ModelKind model, const Genotype& genotype);

struct Mutant {
  Genotype genotype;
  Allocation allocation;
  int vehicle = -1;  // which vehicle changed
};

// One landscape edge: a uniformly chosen mutable vehicle is replaced
// (TypeReplacement, uniform over its admissible set) or nulled (Deletion);
// its allocation row resets to zero. Empty when no vehicle can mutate.
std::optional<Mutant> mutate(const Genotype& genotype, const Allocation& allocation,
                             ModelKind model, MutationMode mode, Rng& rng);

// True iff mutate() could produce an edge from this genotype.
bool has_mutable_vehicle(const Genotype& genotype, ModelKind model, MutationMode mode);

}  // namespace neutralwalk
