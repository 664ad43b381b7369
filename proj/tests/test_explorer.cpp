#include <queue>
#include <set>

#include "doctest.h"
#include "neutralwalk/explorer.hpp"

using namespace neutralwalk;

namespace {

FleetConfig config_for(ModelKind model, int tasks, int fleet, int capacity = 20) {
  FleetConfig config;
  config.model = model;
  config.task_count = tasks;
  config.fleet_size = fleet;
  config.base_fleet_size = fleet;
  config.capacity = capacity;
  return config;
}

// Degenerate T=4 fixture: [(0,1),(1,2)] with environment (2,2,2,0).
InitialFleet degenerate_fixture() {
  return {Genotype{{make_capability_pair(0, 1), make_capability_pair(1, 2)}, 4, 20},
          Allocation{{VehicleState{2, 1}, VehicleState{1, 2}}}};
}

std::set<CanonicalKey> keys_of(const ExplorationResult& result, NodeClass cls) {
  std::set<CanonicalKey> keys;
  for (const auto& node : result.nodes) {
    if (node.cls == cls) keys.insert(canonical_form(node.genotype));
  }
  return keys;
}

ExplorationResult star_result(int leaves) {
  // Synthetic star: node 0 neutral hub, `leaves` neutral leaves.
  ExplorationResult result;
  result.environment = {1};
  result.threshold = neutrality_threshold(result.environment, 100.0);
  for (int id = 0; id <= leaves; ++id) {
    FleetNode node;
    node.id = id;
    node.genotype = Genotype{{make_capability_pair(0, 1)}, 2, 20};
    node.cls = NodeClass::Neutral;
    result.nodes.push_back(node);
    result.neutral_ids.push_back(id);
    if (id > 0) result.edges.push_back(Edge{0, id});
  }
  return result;
}

}  // namespace

TEST_CASE("explore on a fleet with no admissible mutation keeps only node 0") {
  const auto config = config_for(ModelKind::Redundant, 2, 2);
  Rng rng(4);
  const auto result = explore(config, 5.0, 1, rng);
  CHECK(result.nodes.size() == 1);
  CHECK(nn_size(result) == 1);
  CHECK(result.steps_executed < 1);
  CHECK(result.node(0).cls == NodeClass::Neutral);
  CHECK(result.node(0).fitness.penalty() == 0);
  REQUIRE(result.series.size() == 1);
  CHECK(result.series[0] == SeriesRow{0, 1, 0, 0});
}

TEST_CASE("a huge alpha makes every reachable genotype neutral") {
  const auto config = config_for(ModelKind::Degenerate, 5, 3);
  Rng rng(8);
  const auto result = explore(config, 1e6, 500, rng);
  CHECK(nn_size(result) > 1);
  for (const auto& node : result.nodes) CHECK(node.cls == NodeClass::Neutral);
  CHECK(evolvability(result) == 0);
}

TEST_CASE("walk saturates to the exhaustive neutral network on the small fixture") {
  const auto config = config_for(ModelKind::Degenerate, 4, 2);
  const auto initial = degenerate_fixture();
  const auto oracle = exhaustive_explore(config, initial, 5.0);
  REQUIRE(oracle.nodes.size() >= 2);

  Rng rng(12);
  const long long steps = 50 * static_cast<long long>(oracle.nodes.size());
  const auto walk = explore_from(config, initial, 5.0, steps, rng);

  CHECK(keys_of(walk, NodeClass::Neutral) == keys_of(oracle, NodeClass::Neutral));
  CHECK(keys_of(walk, NodeClass::Boundary) == keys_of(oracle, NodeClass::Boundary));
  CHECK(nn_size(walk) == nn_size(oracle));
  CHECK(evolvability(walk) == evolvability(oracle));
}

TEST_CASE("a shorter walk discovers a subset of the exhaustive sets") {
  const auto config = config_for(ModelKind::Degenerate, 4, 2);
  const auto initial = degenerate_fixture();
  const auto oracle = exhaustive_explore(config, initial, 5.0);
  const auto oracle_neutral = keys_of(oracle, NodeClass::Neutral);
  const auto oracle_boundary = keys_of(oracle, NodeClass::Boundary);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const auto walk = explore_from(config, initial, 5.0, 5, rng);
    for (const auto& key : keys_of(walk, NodeClass::Neutral)) CHECK(oracle_neutral.count(key));
    for (const auto& key : keys_of(walk, NodeClass::Boundary)) CHECK(oracle_boundary.count(key));
  }
}

TEST_CASE("alpha=0 admits only exactly-optimal genotypes") {
  const auto config = config_for(ModelKind::Degenerate, 4, 2);
  const auto result = exhaustive_explore(config, degenerate_fixture(), 0.0);
  for (const int id : result.neutral_ids) CHECK(result.node(id).fitness.penalty() == 0);
}

TEST_CASE("exhaustive_explore enumerates the redundant composition space") {
  const auto config = config_for(ModelKind::Redundant, 4, 3);
  // Catalog {(0,1),(2,3)}: 2^3 ordered assignments, 4 canonical multisets.
  const InitialFleet initial{
      Genotype{{make_capability_pair(0, 1), make_capability_pair(2, 3),
                make_capability_pair(0, 1)},
               4, 20},
      Allocation{{VehicleState{2, 2}, VehicleState{2, 2}, VehicleState{1, 1}}}};
  const auto result = exhaustive_explore(config, initial, 5.0);
  CHECK(result.nodes.size() == 4);
  CHECK(nn_size(result) == 2);  // both tasks pairs covered: (2,1) and (1,2)
}

TEST_CASE("exhaustive_explore refuses to run past the node guard") {
  const auto config = config_for(ModelKind::Degenerate, 4, 2);
  CHECK_THROWS_AS(exhaustive_explore(config, degenerate_fixture(), 5.0, 3), ConfigError);
}

TEST_CASE("evolvability counts distinct boundary phenotypes") {
  ExplorationResult result = star_result(2);
  CHECK(evolvability(result) == 0);  // empty boundary set

  auto add_boundary = [&result](TraitVector phenotype) {
    FleetNode node;
    node.id = static_cast<int>(result.nodes.size());
    node.cls = NodeClass::Boundary;
    node.phenotype = std::move(phenotype);
    result.nodes.push_back(std::move(node));
  };
  add_boundary({1, 2});
  add_boundary({1, 2});
  add_boundary({3, 0});
  CHECK(evolvability(result) == 2);
  add_boundary({0, 9});
  CHECK(evolvability(result) == 3);
}

TEST_CASE("innovation series starts at (0,1,0) and is monotone") {
  const auto config = config_for(ModelKind::Degenerate, 6, 4);
  Rng rng(77);
  const auto result = explore(config, 5.0, 300, rng);
  const auto& series = innovation_series(result);
  REQUIRE_FALSE(series.empty());
  CHECK(series[0] == SeriesRow{0, 1, 0, 0});
  for (std::size_t s = 1; s < series.size(); ++s) {
    CHECK(series[s].neutral_count >= series[s - 1].neutral_count);
    CHECK(series[s].boundary_phenotype_count >= series[s - 1].boundary_phenotype_count);
    CHECK(series[s].duplicate_count >= series[s - 1].duplicate_count);
    CHECK(series[s].step == static_cast<long long>(s));
  }
  CHECK(series.back().neutral_count == nn_size(result));
  CHECK(series.back().boundary_phenotype_count == evolvability(result));
}

TEST_CASE("stored nodes reproduce their fitness and class when re-adapted") {
  const auto config = config_for(ModelKind::Degenerate, 5, 3);
  Rng rng(55);
  const auto result = explore(config, 5.0, 300, rng);
  for (const auto& node : result.nodes) {
    CHECK(node.phenotype == compute_phenotype(node.genotype, node.allocation));
    const auto outcome = adapt(node.genotype, node.allocation, result.environment);
    CHECK(outcome.fitness == node.fitness);
    CHECK((node.cls == NodeClass::Neutral) == is_neutral(node.fitness, result.threshold));
  }
}

TEST_CASE("exploration is deterministic for a fixed seed") {
  const auto config = config_for(ModelKind::Degenerate, 6, 5);
  auto run = [&config] {
    Rng rng(424242);
    return explore(config, 5.0, 400, rng);
  };
  const auto a = run();
  const auto b = run();
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    CHECK(canonical_form(a.nodes[i].genotype) == canonical_form(b.nodes[i].genotype));
    CHECK(a.nodes[i].allocation == b.nodes[i].allocation);
    CHECK(a.nodes[i].fitness == b.nodes[i].fitness);
  }
  CHECK(a.edges == b.edges);
  CHECK(a.series == b.series);
  CHECK(a.environment == b.environment);
}

TEST_CASE("every neutral node reaches node 0 through neutral edges") {
  const auto config = config_for(ModelKind::Degenerate, 6, 4);
  Rng rng(99);
  const auto result = explore(config, 5.0, 500, rng);

  std::set<int> neutral(result.neutral_ids.begin(), result.neutral_ids.end());
  std::vector<std::vector<int>> adjacency(result.nodes.size());
  for (const Edge& e : result.edges) {
    if (neutral.count(e.src) && neutral.count(e.dst)) {
      adjacency[e.src].push_back(e.dst);
      adjacency[e.dst].push_back(e.src);
    }
  }
  std::set<int> reached{0};
  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const int v : adjacency[u]) {
      if (reached.insert(v).second) frontier.push(v);
    }
  }
  for (const int id : result.neutral_ids) CHECK(reached.count(id));

  // Boundary nodes are never expanded.
  for (const Edge& e : result.edges) CHECK(result.node(e.src).cls == NodeClass::Neutral);
}

TEST_CASE("topology metrics on simple graphs") {
  SUBCASE("two nodes, one edge") {
    auto result = star_result(1);
    Rng rng(1);
    const auto report = topology_metrics(result, 50, rng);
    CHECK(report.node_count == 2);
    CHECK(report.edge_count == 1);
    CHECK(report.degree_average == doctest::Approx(1.0));
    REQUIRE(report.path_length_average.has_value());
    CHECK(*report.path_length_average == doctest::Approx(1.0));
  }
  SUBCASE("star of k+1 nodes") {
    const int k = 6;
    auto result = star_result(k);
    Rng rng(2);
    const auto report = topology_metrics(result, 200, rng);
    CHECK(report.edge_count == k);
    CHECK(report.degree_average == doctest::Approx(2.0 * k / (k + 1)));
  }
  SUBCASE("single node has no path length") {
    auto result = star_result(0);
    Rng rng(3);
    const auto report = topology_metrics(result, 10, rng);
    CHECK_FALSE(report.path_length_average.has_value());
  }
}

TEST_CASE("sampled path length matches the all-pairs average on the fixture") {
  const auto config = config_for(ModelKind::Degenerate, 4, 2);
  const auto result = exhaustive_explore(config, degenerate_fixture(), 5.0);
  REQUIRE(nn_size(result) >= 2);

  // All-pairs BFS oracle over the unique neutral-neutral edges.
  std::vector<int> neutral = result.neutral_ids;
  std::set<int> neutral_set(neutral.begin(), neutral.end());
  std::set<std::pair<int, int>> unique_edges;
  for (const Edge& e : result.edges) {
    if (e.src != e.dst && neutral_set.count(e.src) && neutral_set.count(e.dst)) {
      unique_edges.insert({std::min(e.src, e.dst), std::max(e.src, e.dst)});
    }
  }
  std::vector<std::vector<int>> adjacency(result.nodes.size());
  for (const auto& [a, b] : unique_edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  double total = 0.0;
  long long pairs = 0;
  for (const int u : neutral) {
    std::vector<int> dist(result.nodes.size(), -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (const int y : adjacency[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    for (const int v : neutral) {
      if (v == u) continue;
      REQUIRE(dist[v] > 0);
      total += dist[v];
      ++pairs;
    }
  }
  const double exact = total / pairs;

  Rng rng(7);
  const auto report = topology_metrics(result, 20000, rng);
  REQUIRE(report.path_length_average.has_value());
  CHECK(*report.path_length_average == doctest::Approx(exact).epsilon(0.05));
}
