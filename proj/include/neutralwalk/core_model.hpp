#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neutralwalk/errors.hpp"

namespace neutralwalk {

using TaskCount = long long;

// The two distinct task types one vehicle can handle. Normalized: task_a < task_b.
struct CapabilityPair {
  int task_a = 0;
  int task_b = 0;

  auto operator<=>(const CapabilityPair&) const = default;
};

// Throws StructuralError unless x != y; returns the ordered pair.
CapabilityPair make_capability_pair(int x, int y);

// The fleet's changeable design: one optional capability pair per vehicle.
// A disengaged entry is a null vehicle (deleted / not suited to any task).
struct Genotype {
  std::vector<std::optional<CapabilityPair>> vehicles;
  int task_count = 0;  // T
  int capacity = 0;    // lambda: max total tasks per vehicle

  int fleet_size() const { return static_cast<int>(vehicles.size()); }
};

// Per-vehicle task counts, aligned with the vehicle's (task_a, task_b).
struct VehicleState {
  int count_a = 0;
  int count_b = 0;

  auto operator<=>(const VehicleState&) const = default;
  int total() const { return count_a + count_b; }
};

struct Allocation {
  std::vector<VehicleState> states;

  bool operator==(const Allocation&) const = default;
};

// Per-task-type counts: a phenotype (readiness) or an environment (demand).
using TraitVector = std::vector<TaskCount>;

// Fitness is a negated sum of integer squared shortfalls, held exactly as a
// scaled integer so the neutrality comparison never touches floating point.
// scaled = fitness * kScale; the threshold -(alpha/100)*sum(e^2) is an exact
// multiple of 1/kScale whenever alpha has at most two decimals.
struct FitnessValue {
  static constexpr long long kScale = 10000;

  long long scaled = 0;

  static FitnessValue from_penalty(long long penalty) { return {-penalty * kScale}; }
  double value() const { return static_cast<double>(scaled) / kScale; }
  long long penalty() const { return -scaled / kScale; }

  auto operator<=>(const FitnessValue&) const = default;
};

// Order-independent genotype identity: the multiset of capability pairs.
using CanonicalKey = std::string;

struct Violation {
  int vehicle = -1;  // -1: whole-structure violation
  std::string rule;
};

// T^P_j = sum of allocated counts for task j over vehicles capable of j.
TraitVector compute_phenotype(const Genotype& genotype, const Allocation& allocation);

// F = -sum_j theta_j, theta_j = 0 if p_j > e_j else (p_j - e_j)^2.
FitnessValue fitness(const TraitVector& phenotype, const TraitVector& environment);

// Neutrality budget: -(alpha/100) * sum_j e_j^2 (alpha percent of the
// worst-case penalty of a fleet prepared for nothing).
FitnessValue neutrality_threshold(const TraitVector& environment, double alpha_percent);

// Inclusive: a fleet exactly on the threshold is neutral.
bool is_neutral(FitnessValue f, FitnessValue threshold);

// Stable byte-comparable key, invariant under vehicle permutation.
CanonicalKey canonical_form(const Genotype& genotype);

// Empty iff every invariant holds; otherwise one entry per broken rule.
std::vector<Violation> validate(const Genotype& genotype, const Allocation& allocation);

}  // namespace neutralwalk
