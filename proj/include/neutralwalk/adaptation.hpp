#pragma once

#include <functional>
#include <vector>

#include "neutralwalk/core_model.hpp"

namespace neutralwalk {

// Single-unit change to one vehicle's state: slot 0 = task_a, slot 1 = task_b.
struct Move {
  int slot = 0;
  int delta = 0;

  bool operator==(const Move&) const = default;
};

// Feasible moves for one vehicle, in evaluation order
// (task_a before task_b, +1 before -1). Null vehicles have none.
std::vector<Move> candidate_moves(const Genotype& genotype, const Allocation& allocation,
                                  int vehicle);

struct AdaptationOutcome {
  Allocation allocation;
  FitnessValue fitness;
  int sweeps_used = 0;
  bool converged = false;
};

// Invoked after every accepted move with the updated allocation and fitness.
using AdaptObserver = std::function<void(const Allocation&, FitnessValue)>;

inline constexpr int kDefaultMaxSweeps = 1000;

// Ordered asynchronous greedy reallocation: full sweeps over vehicles in index
// order; per vehicle, the single best strictly-improving move is applied before
// moving on. Stops when a sweep accepts nothing (converged) or at max_sweeps.
AdaptationOutcome adapt(const Genotype& genotype, Allocation allocation,
                        const TraitVector& environment, int max_sweeps = kDefaultMaxSweeps,
                        const AdaptObserver& observer = {});

}  // namespace neutralwalk
