#include "neutralwalk/adaptation.hpp"

namespace neutralwalk {

namespace {

inline long long shortfall_sq(TaskCount p, TaskCount e) {
  if (p > e) return 0;
  const long long d = e - p;
  return d * d;
}

}  // namespace

std::vector<Move> candidate_moves(const Genotype& genotype, const Allocation& allocation,
                                  int vehicle) {
  if (vehicle < 0 || vehicle >= genotype.fleet_size()) {
    throw StructuralError("vehicle index out of range");
  }
  std::vector<Move> moves;
  if (!genotype.vehicles[vehicle]) return moves;
  const VehicleState& st = allocation.states[vehicle];
  const bool room = st.total() < genotype.capacity;
  if (room) moves.push_back({0, +1});
  if (st.count_a > 0) moves.push_back({0, -1});
  if (room) moves.push_back({1, +1});
  if (st.count_b > 0) moves.push_back({1, -1});
  return moves;
}

AdaptationOutcome adapt(const Genotype& genotype, Allocation allocation,
                        const TraitVector& environment, int max_sweeps,
                        const AdaptObserver& observer) {
  if (max_sweeps < 1) throw ConfigError("max_sweeps must be >= 1");
  if (static_cast<int>(environment.size()) != genotype.task_count) {
    throw StructuralError("environment length differs from task count");
  }
  if (const auto violations = validate(genotype, allocation); !violations.empty()) {
    throw StructuralError("invalid allocation: vehicle " +
                          std::to_string(violations.front().vehicle) + ": " +
                          violations.front().rule);
  }

  TraitVector phenotype = compute_phenotype(genotype, allocation);
  long long penalty = 0;
  for (std::size_t j = 0; j < phenotype.size(); ++j) {
    penalty += shortfall_sq(phenotype[j], environment[j]);
  }

  const int fleet = genotype.fleet_size();
  int sweeps = 0;
  bool converged = false;
  while (sweeps < max_sweeps) {
    ++sweeps;
    bool accepted_any = false;
    for (int v = 0; v < fleet; ++v) {
      const auto& pair = genotype.vehicles[v];
      if (!pair) continue;
      VehicleState& st = allocation.states[v];
      const bool room = st.total() < genotype.capacity;

      // Only the affected task's shortfall changes, so each move is O(1).
      long long best_gain = 0;
      int best_slot = -1, best_delta = 0;
      auto consider = [&](int slot, int delta) {
        const int j = slot == 0 ? pair->task_a : pair->task_b;
        const long long gain =
            shortfall_sq(phenotype[j], environment[j]) - shortfall_sq(phenotype[j] + delta, environment[j]);
        if (gain > best_gain) {
          best_gain = gain;
          best_slot = slot;
          best_delta = delta;
        }
      };
      if (room) consider(0, +1);
      if (st.count_a > 0) consider(0, -1);
      if (room) consider(1, +1);
      if (st.count_b > 0) consider(1, -1);

      if (best_slot >= 0) {
        const int j = best_slot == 0 ? pair->task_a : pair->task_b;
        (best_slot == 0 ? st.count_a : st.count_b) += best_delta;
        phenotype[j] += best_delta;
        penalty -= best_gain;
        accepted_any = true;
        if (observer) observer(allocation, FitnessValue::from_penalty(penalty));
      }
    }
    if (!accepted_any) {
      converged = true;
      break;
    }
  }

  return {std::move(allocation), FitnessValue::from_penalty(penalty), sweeps, converged};
}

}  // namespace neutralwalk
