#pragma once

#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "neutralwalk/adaptation.hpp"
#include "neutralwalk/core_model.hpp"
#include "neutralwalk/genotype_space.hpp"
#include "neutralwalk/rng.hpp"

namespace neutralwalk {

enum class NodeClass { Neutral, Boundary };

// One fitness-landscape node: the genotype plus its adapted state.
struct FleetNode {
  int id = 0;
  Genotype genotype;
  Allocation allocation;
  TraitVector phenotype;
  FitnessValue fitness;
  NodeClass cls = NodeClass::Neutral;
};

struct Edge {
  int src = 0;
  int dst = 0;

  bool operator==(const Edge&) const = default;
};

// Cumulative discovery counts after each step.
struct SeriesRow {
  long long step = 0;
  long long neutral_count = 0;
  long long boundary_phenotype_count = 0;
  long long duplicate_count = 0;

  bool operator==(const SeriesRow&) const = default;
};

struct ExplorationResult {
  std::vector<FleetNode> nodes;  // id-indexed; neutral and boundary mixed
  std::unordered_map<CanonicalKey, int> index;
  std::vector<int> neutral_ids;
  std::vector<Edge> edges;
  std::vector<SeriesRow> series;
  TraitVector environment;
  FitnessValue threshold;
  long long steps_executed = 0;

  const FleetNode& node(int id) const { return nodes[id]; }
};

struct InitialFleet {
  Genotype genotype;
  Allocation allocation;
};

InitialFleet make_initial_fleet(const FleetConfig& config, Rng& rng);

// Random-walk discovery of the neutral network and its 1-neighborhood.
// The environment is fixed to the initial fleet's phenotype, so node 0 is
// neutral with fitness 0. Each step draws a neutral node uniformly, mutates
// it, adapts the mutant, and stores it unless its canonical key is already
// known (duplicates consume the step and re-record the edge).
ExplorationResult explore(const FleetConfig& config, double alpha, long long max_steps, Rng& rng,
                          int max_sweeps = kDefaultMaxSweeps);

// Same walk from an explicitly given initial fleet.
ExplorationResult explore_from(const FleetConfig& config, const InitialFleet& initial,
                               double alpha, long long max_steps, Rng& rng,
                               int max_sweeps = kDefaultMaxSweeps);

inline constexpr long long kExhaustiveGuard = 100000;

// Complete BFS over the mutate relation from the same initial node; test
// oracle for instances small enough to enumerate. Boundary nodes are reached
// but never expanded. Refuses to run past max_nodes.
ExplorationResult exhaustive_explore(const FleetConfig& config, const InitialFleet& initial,
                                     double alpha, long long max_nodes = kExhaustiveGuard,
                                     int max_sweeps = kDefaultMaxSweeps);

// Count of distinct phenotypes among boundary nodes.
long long evolvability(const ExplorationResult& result);

long long nn_size(const ExplorationResult& result);

// The per-step discovery table (step, neutral count, unique boundary phenotypes).
const std::vector<SeriesRow>& innovation_series(const ExplorationResult& result);

struct TopologyReport {
  long long node_count = 0;
  long long edge_count = 0;  // unique neutral-neutral edges
  double degree_average = 0.0;
  std::optional<double> path_length_average;
  long long sample_pairs = 0;
};

// Degree statistics over the neutral subgraph; average shortest-path length
// estimated over sample_pairs random neutral node pairs.
TopologyReport topology_metrics(const ExplorationResult& result, long long sample_pairs, Rng& rng);

}  // namespace neutralwalk
