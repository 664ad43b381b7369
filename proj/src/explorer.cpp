#include "neutralwalk/explorer.hpp"

#include <cassert>
#include <deque>
#include <queue>
#include <unordered_set>

namespace neutralwalk {

namespace {

struct WalkState {
  ExplorationResult result;
  std::set<TraitVector> boundary_phenotypes;
  long long duplicates = 0;
};

// Stores a freshly classified node; returns its id.
int store_node(WalkState& walk, Genotype genotype, Allocation allocation, TraitVector phenotype,
               FitnessValue fit, CanonicalKey key) {
  const int id = static_cast<int>(walk.result.nodes.size());
  const NodeClass cls =
      is_neutral(fit, walk.result.threshold) ? NodeClass::Neutral : NodeClass::Boundary;
  if (cls == NodeClass::Neutral) {
    walk.result.neutral_ids.push_back(id);
  } else {
    walk.boundary_phenotypes.insert(phenotype);
  }
  walk.result.index.emplace(std::move(key), id);
  walk.result.nodes.push_back(FleetNode{id, std::move(genotype), std::move(allocation),
                                        std::move(phenotype), fit, cls});
  return id;
}

WalkState init_walk(const FleetConfig& config, const InitialFleet& initial, double alpha) {
  config.check();
  if (const auto violations = validate(initial.genotype, initial.allocation);
      !violations.empty()) {
    throw StructuralError("invalid initial fleet: " + violations.front().rule);
  }
  WalkState walk;
  walk.result.environment = compute_phenotype(initial.genotype, initial.allocation);
  walk.result.threshold = neutrality_threshold(walk.result.environment, alpha);
  TraitVector phenotype = walk.result.environment;
  const FitnessValue fit = fitness(phenotype, walk.result.environment);
  store_node(walk, initial.genotype, initial.allocation, std::move(phenotype), fit,
             canonical_form(initial.genotype));
  return walk;
}

void push_series(WalkState& walk, long long step) {
  walk.result.series.push_back(
      SeriesRow{step, static_cast<long long>(walk.result.neutral_ids.size()),
                static_cast<long long>(walk.boundary_phenotypes.size()), walk.duplicates});
}

}  // namespace

InitialFleet make_initial_fleet(const FleetConfig& config, Rng& rng) {
  Genotype genotype = init_genotype(config, rng);
  Allocation allocation = init_allocation(genotype, config, rng);
  return {std::move(genotype), std::move(allocation)};
}

ExplorationResult explore(const FleetConfig& config, double alpha, long long max_steps, Rng& rng,
                          int max_sweeps) {
  const InitialFleet initial = make_initial_fleet(config, rng);
  return explore_from(config, initial, alpha, max_steps, rng, max_sweeps);
}

ExplorationResult explore_from(const FleetConfig& config, const InitialFleet& initial,
                               double alpha, long long max_steps, Rng& rng, int max_sweeps) {
  if (max_steps < 1) throw ConfigError("max_steps must be >= 1");
  WalkState walk = init_walk(config, initial, alpha);
  push_series(walk, 0);

  // Exhaustion is a property of the genotype alone, so it is computed when a
  // neutral node is inserted; the walk stops once no neutral node can mutate.
  long long mutable_count =
      has_mutable_vehicle(initial.genotype, config.model, config.mutation_mode) ? 1 : 0;

  for (long long step = 1; step <= max_steps; ++step) {
    if (mutable_count == 0) break;
    walk.result.steps_executed = step;

    const int src =
        walk.result.neutral_ids[rng.below(walk.result.neutral_ids.size())];
    const FleetNode& source = walk.result.nodes[src];
    auto mutant = mutate(source.genotype, source.allocation, config.model, config.mutation_mode,
                         rng);
    if (!mutant) {
      // Unreachable given the insertion-time exhaustion bookkeeping; the step
      // still counts and nothing is stored.
      push_series(walk, step);
      continue;
    }

    CanonicalKey key = canonical_form(mutant->genotype);
    if (const auto it = walk.result.index.find(key); it != walk.result.index.end()) {
      ++walk.duplicates;
      walk.result.edges.push_back(Edge{src, it->second});
    } else {
      assert(check_constraints(config.model, mutant->genotype));
      auto outcome =
          adapt(mutant->genotype, std::move(mutant->allocation), walk.result.environment,
                max_sweeps);
      TraitVector phenotype = compute_phenotype(mutant->genotype, outcome.allocation);
      const int id = store_node(walk, std::move(mutant->genotype), std::move(outcome.allocation),
                                std::move(phenotype), outcome.fitness, std::move(key));
      walk.result.edges.push_back(Edge{src, id});
      if (walk.result.nodes[id].cls == NodeClass::Neutral &&
          has_mutable_vehicle(walk.result.nodes[id].genotype, config.model,
                              config.mutation_mode)) {
        ++mutable_count;
      }
    }
    push_series(walk, step);
  }
  return std::move(walk.result);
}

ExplorationResult exhaustive_explore(const FleetConfig& config, const InitialFleet& initial,
                                     double alpha, long long max_nodes, int max_sweeps) {
  WalkState walk = init_walk(config, initial, alpha);
  push_series(walk, 0);
  std::deque<int> frontier{0};

  while (!frontier.empty()) {
    const int src = frontier.front();
    frontier.pop_front();

    // Enumerate every admissible single-vehicle change deterministically.
    const int fleet = walk.result.nodes[src].genotype.fleet_size();
    for (int v = 0; v < fleet; ++v) {
      std::vector<std::optional<CapabilityPair>> replacements;
      if (config.mutation_mode == MutationMode::Deletion) {
        if (walk.result.nodes[src].genotype.vehicles[v]) replacements.push_back(std::nullopt);
      } else {
        for (const auto& pair :
             admissible_replacements(config.model, walk.result.nodes[src].genotype, v)) {
          replacements.push_back(pair);
        }
      }
      for (const auto& replacement : replacements) {
        Genotype child = walk.result.nodes[src].genotype;
        child.vehicles[v] = replacement;
        CanonicalKey key = canonical_form(child);
        if (const auto it = walk.result.index.find(key); it != walk.result.index.end()) {
          walk.result.edges.push_back(Edge{src, it->second});
          continue;
        }
        Allocation start = walk.result.nodes[src].allocation;
        start.states[v] = VehicleState{};
        auto outcome = adapt(child, std::move(start), walk.result.environment, max_sweeps);
        TraitVector phenotype = compute_phenotype(child, outcome.allocation);
        const int id = store_node(walk, std::move(child), std::move(outcome.allocation),
                                  std::move(phenotype), outcome.fitness, std::move(key));
        walk.result.edges.push_back(Edge{src, id});
        if (walk.result.nodes[id].cls == NodeClass::Neutral) frontier.push_back(id);
        if (static_cast<long long>(walk.result.nodes.size()) > max_nodes) {
          throw ConfigError("exhaustive_explore: node guard exceeded");
        }
      }
    }
  }
  return std::move(walk.result);
}

long long evolvability(const ExplorationResult& result) {
  std::set<TraitVector> phenotypes;
  for (const auto& node : result.nodes) {
    if (node.cls == NodeClass::Boundary) phenotypes.insert(node.phenotype);
  }
  return static_cast<long long>(phenotypes.size());
}

long long nn_size(const ExplorationResult& result) {
  return static_cast<long long>(result.neutral_ids.size());
}

const std::vector<SeriesRow>& innovation_series(const ExplorationResult& result) {
  return result.series;
}

TopologyReport topology_metrics(const ExplorationResult& result, long long sample_pairs,
                                Rng& rng) {
  // Compact the neutral nodes and keep unique undirected neutral-neutral edges.
  std::vector<int> compact(result.nodes.size(), -1);
  for (std::size_t i = 0; i < result.neutral_ids.size(); ++i) {
    compact[result.neutral_ids[i]] = static_cast<int>(i);
  }
  const long long n = static_cast<long long>(result.neutral_ids.size());
  std::set<std::pair<int, int>> unique_edges;
  for (const Edge& e : result.edges) {
    const int a = compact[e.src], b = compact[e.dst];
    if (a < 0 || b < 0 || a == b) continue;
    unique_edges.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::vector<int>> adjacency(n);
  for (const auto& [a, b] : unique_edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }

  TopologyReport report;
  report.node_count = n;
  report.edge_count = static_cast<long long>(unique_edges.size());
  report.degree_average = n > 0 ? 2.0 * report.edge_count / n : 0.0;

  if (n >= 2 && sample_pairs > 0) {
    double total = 0.0;
    long long counted = 0;
    std::vector<int> dist(n);
    for (long long s = 0; s < sample_pairs; ++s) {
      const int u = static_cast<int>(rng.below(n));
      int v = static_cast<int>(rng.below(n - 1));
      if (v >= u) ++v;
      std::fill(dist.begin(), dist.end(), -1);
      std::queue<int> q;
      dist[u] = 0;
      q.push(u);
      while (!q.empty() && dist[v] < 0) {
        const int x = q.front();
        q.pop();
        for (const int y : adjacency[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push(y);
          }
        }
      }
      if (dist[v] < 0) {
        throw StructuralError("neutral network is not connected");
      }
      total += dist[v];
      ++counted;
    }
    report.path_length_average = total / counted;
    report.sample_pairs = counted;
  }
  return report;
}

}  // namespace neutralwalk
