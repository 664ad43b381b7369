#include <algorithm>
#include <ostream>
#include <set>

#include "neutralwalk/io.hpp"

namespace neutralwalk {

namespace {

// Exhaustive allocation search; the independent optimum for tiny instances.
long long brute_best_penalty(const Genotype& genotype, const TraitVector& environment) {
  long long best = -1;
  TraitVector phenotype(genotype.task_count, 0);
  auto recurse = [&](auto&& self, int vehicle) -> void {
    if (vehicle == genotype.fleet_size()) {
      long long penalty = 0;
      for (int j = 0; j < genotype.task_count; ++j) {
        if (phenotype[j] > environment[j]) continue;
        const long long d = environment[j] - phenotype[j];
        penalty += d * d;
      }
      if (best < 0 || penalty < best) best = penalty;
      return;
    }
    const auto& pair = genotype.vehicles[vehicle];
    if (!pair) {
      self(self, vehicle + 1);
      return;
    }
    for (int a = 0; a <= genotype.capacity; ++a) {
      for (int b = 0; a + b <= genotype.capacity; ++b) {
        phenotype[pair->task_a] += a;
        phenotype[pair->task_b] += b;
        self(self, vehicle + 1);
        phenotype[pair->task_a] -= a;
        phenotype[pair->task_b] -= b;
      }
    }
  };
  recurse(recurse, 0);
  return best;
}

std::set<CanonicalKey> keys_of(const ExplorationResult& result, NodeClass cls) {
  std::set<CanonicalKey> keys;
  for (const auto& node : result.nodes) {
    if (node.cls == cls) keys.insert(canonical_form(node.genotype));
  }
  return keys;
}

bool walk_matches_oracle(const FleetConfig& config, const InitialFleet& initial, double alpha,
                         std::uint64_t walk_seed, std::ostream& out, const std::string& name) {
  const ExplorationResult oracle = exhaustive_explore(config, initial, alpha);
  const long long steps = 50 * static_cast<long long>(oracle.nodes.size());
  Rng rng(walk_seed);
  const ExplorationResult walk = explore_from(config, initial, alpha, steps, rng);

  const bool ok = keys_of(walk, NodeClass::Neutral) == keys_of(oracle, NodeClass::Neutral) &&
                  keys_of(walk, NodeClass::Boundary) == keys_of(oracle, NodeClass::Boundary) &&
                  nn_size(walk) == nn_size(oracle) &&
                  evolvability(walk) == evolvability(oracle);
  out << (ok ? "PASS" : "FAIL") << " " << name << ": walk(" << steps
      << " steps) vs BFS, nn=" << nn_size(oracle) << " evolvability=" << evolvability(oracle)
      << "\n";
  return ok;
}

}  // namespace

bool oracle_check(std::ostream& out) {
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS" : "FAIL") << " " << name << "\n";
    all_ok = all_ok && ok;
  };

  // Fitness formula against an independent direct evaluation, 3 tasks, {0..4}^3.
  {
    bool ok = true;
    TraitVector p(3), e(3);
    for (int i = 0; i < 125 && ok; ++i) {
      p = {i % 5, (i / 5) % 5, (i / 25) % 5};
      for (int k = 0; k < 125 && ok; ++k) {
        e = {k % 5, (k / 5) % 5, (k / 25) % 5};
        long long direct = 0;
        for (int j = 0; j < 3; ++j) {
          direct += p[j] > e[j] ? 0 : (e[j] - p[j]) * (e[j] - p[j]);
        }
        ok = fitness(p, e).scaled == -direct * FitnessValue::kScale;
      }
    }
    check("fitness-vs-direct-eval", ok);
  }

  // Greedy adaptation against exhaustive allocation search.
  {
    Genotype g{{make_capability_pair(0, 1)}, 2, 20};
    const TraitVector env{3, 2};
    const auto outcome = adapt(g, Allocation{{VehicleState{}}}, env);
    check("adapt-single-vehicle",
          brute_best_penalty(g, env) == 0 && outcome.fitness.penalty() == 0 &&
              outcome.allocation.states[0] == VehicleState{3, 2} && outcome.converged);
  }
  {
    Genotype g{{make_capability_pair(0, 1), make_capability_pair(1, 2)}, 3, 4};
    const TraitVector env{2, 6, 2};
    const auto outcome = adapt(g, Allocation{{VehicleState{}, VehicleState{}}}, env);
    // Frozen greedy trajectory endpoint; the exhaustive optimum is also 2.
    check("adapt-two-vehicle",
          brute_best_penalty(g, env) == 2 && outcome.fitness.penalty() == 2 &&
              outcome.allocation.states[0] == VehicleState{2, 2} &&
              outcome.allocation.states[1] == VehicleState{3, 1} && outcome.converged);
  }

  // Degenerate T=4, V=2 fixture: [(0,1),(1,2)], environment (2,2,2,0).
  FleetConfig degenerate;
  degenerate.task_count = 4;
  degenerate.fleet_size = 2;
  degenerate.base_fleet_size = 2;
  degenerate.capacity = 20;
  degenerate.model = ModelKind::Degenerate;
  degenerate.degenerate_init = DegenerateInit::DoubleRing;
  const InitialFleet degenerate_initial{
      Genotype{{make_capability_pair(0, 1), make_capability_pair(1, 2)}, 4, 20},
      Allocation{{VehicleState{2, 1}, VehicleState{1, 2}}}};
  all_ok &= walk_matches_oracle(degenerate, degenerate_initial, 5.0, 1701, out,
                                "walk-vs-bfs-degenerate-T4V2");
  all_ok &= walk_matches_oracle(degenerate, degenerate_initial, 0.0, 1702, out,
                                "walk-vs-bfs-degenerate-T4V2-alpha0");

  // With alpha = 0 the neutral network must contain only exactly-optimal fleets.
  {
    const ExplorationResult strict = exhaustive_explore(degenerate, degenerate_initial, 0.0);
    bool ok = true;
    for (const int id : strict.neutral_ids) ok = ok && strict.node(id).fitness.penalty() == 0;
    check("alpha0-neutral-is-optimal", ok);
  }

  // Redundant T=4, V=3 fixture: catalog {(0,1),(2,3)}, environment (3,3,2,2).
  FleetConfig redundant;
  redundant.task_count = 4;
  redundant.fleet_size = 3;
  redundant.base_fleet_size = 3;
  redundant.capacity = 20;
  redundant.model = ModelKind::Redundant;
  const InitialFleet redundant_initial{
      Genotype{{make_capability_pair(0, 1), make_capability_pair(2, 3),
                make_capability_pair(0, 1)},
               4, 20},
      Allocation{{VehicleState{2, 2}, VehicleState{2, 2}, VehicleState{1, 1}}}};
  all_ok &= walk_matches_oracle(redundant, redundant_initial, 5.0, 1703, out,
                                "walk-vs-bfs-redundant-T4V3");

  return all_ok;
}

}  // namespace neutralwalk
