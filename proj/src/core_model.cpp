#include "neutralwalk/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace neutralwalk {

CapabilityPair make_capability_pair(int x, int y) {
  if (x == y) throw StructuralError("capability pair must name two distinct task types");
  if (x > y) std::swap(x, y);
  if (x < 0) throw StructuralError("capability pair task index must be nonnegative");
  return {x, y};
}

TraitVector compute_phenotype(const Genotype& genotype, const Allocation& allocation) {
  if (allocation.states.size() != genotype.vehicles.size()) {
    throw StructuralError("allocation/genotype fleet sizes differ");
  }
  TraitVector phenotype(genotype.task_count, 0);
  for (std::size_t i = 0; i < genotype.vehicles.size(); ++i) {
    const auto& pair = genotype.vehicles[i];
    if (!pair) continue;
    phenotype[pair->task_a] += allocation.states[i].count_a;
    phenotype[pair->task_b] += allocation.states[i].count_b;
  }
  return phenotype;
}

FitnessValue fitness(const TraitVector& phenotype, const TraitVector& environment) {
  if (phenotype.size() != environment.size()) {
    throw StructuralError("phenotype/environment lengths differ");
  }
  long long penalty = 0;
  for (std::size_t j = 0; j < phenotype.size(); ++j) {
    if (phenotype[j] > environment[j]) continue;
    const long long d = environment[j] - phenotype[j];
    penalty += d * d;
  }
  return FitnessValue::from_penalty(penalty);
}

FitnessValue neutrality_threshold(const TraitVector& environment, double alpha_percent) {
  if (alpha_percent < 0) throw ConfigError("alpha must be nonnegative");
  // alpha in hundredths of a percent keeps the comparison in integers.
  const long long alpha_cpct = std::llround(alpha_percent * 100.0);
  long long demand_sq = 0;
  for (const TaskCount e : environment) demand_sq += e * e;
  return FitnessValue{-alpha_cpct * demand_sq};
}

bool is_neutral(FitnessValue f, FitnessValue threshold) {
  return f.scaled >= threshold.scaled;
}

CanonicalKey canonical_form(const Genotype& genotype) {
  auto sorted = genotype.vehicles;
  std::sort(sorted.begin(), sorted.end(),
            [](const std::optional<CapabilityPair>& a, const std::optional<CapabilityPair>& b) {
              if (a.has_value() != b.has_value()) return a.has_value();  // nulls last
              if (!a) return false;
              return *a < *b;
            });
  CanonicalKey key;
  key.reserve(sorted.size() * 6);
  for (const auto& pair : sorted) {
    if (pair) {
      key += std::to_string(pair->task_a);
      key += ',';
      key += std::to_string(pair->task_b);
    } else {
      key += '-';
    }
    key += ';';
  }
  return key;
}

std::vector<Violation> validate(const Genotype& genotype, const Allocation& allocation) {
  std::vector<Violation> violations;
  if (allocation.states.size() != genotype.vehicles.size()) {
    violations.push_back({-1, "allocation/genotype fleet sizes differ"});
    return violations;
  }
  if (genotype.task_count < 2) violations.push_back({-1, "task_count must be >= 2"});
  if (genotype.vehicles.empty()) violations.push_back({-1, "fleet must have at least one vehicle"});
  for (std::size_t i = 0; i < genotype.vehicles.size(); ++i) {
    const int v = static_cast<int>(i);
    const auto& pair = genotype.vehicles[i];
    const auto& st = allocation.states[i];
    if (pair) {
      if (pair->task_a < 0 || pair->task_b >= genotype.task_count) {
        violations.push_back({v, "capability task index out of range"});
      }
      if (pair->task_a >= pair->task_b) {
        violations.push_back({v, "capability pair not normalized (task_a < task_b)"});
      }
    } else if (st.count_a != 0 || st.count_b != 0) {
      violations.push_back({v, "null vehicle must carry zero allocation"});
    }
    if (st.count_a < 0 || st.count_b < 0) {
      violations.push_back({v, "allocation counts must be nonnegative"});
    }
    if (st.total() > genotype.capacity) {
      violations.push_back({v, "allocation exceeds vehicle capacity"});
    }
  }
  return violations;
}

}  // namespace neutralwalk
