#include "doctest.h"

#include <map>

#include "hideseek/analysis.h"
#include "hideseek/oracle.h"
#include "support.h"

using namespace hideseek;

namespace {

std::map<NodeId, Rational> as_map(const Distribution& dist) {
  std::map<NodeId, Rational> m;
  for (const Weighted& w : dist) m[w.node] += w.probability;
  return m;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("every policy returns a distribution on the frontier") {
    Rng rng(51);
    for (int i = 0; i < 400; ++i) {
      Graph g = i % 3 ? hideseek::testing::random_single_cycle(rng, 3, 11) : random_tree(8, rng);
      Observation obs = hideseek::testing::random_observation(g, rng);
      if (obs.complete()) continue;
      int d = std::uniform_int_distribution<int>(1, 4)(rng);
      for (const std::string& id : strategy_ids()) {
        SeekingStrategy strategy = make_strategy(id, d);
        for (const StrategyComponent& c : strategy.components()) {
          Distribution dist = c.policy->next(obs);
          CHECK_NOTHROW(check_distribution(obs, dist));
          CHECK(total_probability(dist) == 1);
          for (const Weighted& w : dist) {
            CHECK(obs.frontier().contains(w.node));
            CHECK(w.probability > 0);
          }
        }
      }
    }
  }

  TEST_CASE("bounded and adjusted dfs coincide with dfs on trees") {
    Rng rng(52);
    for (int i = 0; i < 300; ++i) {
      Graph g = random_tree(std::uniform_int_distribution<int>(2, 9)(rng), rng);
      Observation obs = hideseek::testing::random_observation(g, rng);
      if (obs.complete()) continue;
      CHECK(as_map(adfs_next(obs)) == as_map(dfs_next(obs)));
      CHECK(as_map(dfs_d_next(obs, g.num_nodes())) == as_map(dfs_next(obs)));
    }
  }

  TEST_CASE("bounded dfs on trees visits everything within d first") {
    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
      Graph g = random_tree(std::uniform_int_distribution<int>(3, 9)(rng), rng);
      int d = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<int> dist = bfs_distances(g, 0);
      int near = 0;
      for (NodeId v : g.nodes()) near += dist[static_cast<std::size_t>(v)] <= d ? 1 : 0;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng run(seed * 977 + static_cast<std::uint64_t>(i));
        Episode e = execute(BoundedDfsPolicy(d), g, run);
        for (int k = 0; k < near; ++k) CHECK(dist[static_cast<std::size_t>(e.sequence[static_cast<std::size_t>(k)])] <= d);
      }
    }
  }

  TEST_CASE("tree formula matches the oracle on random trees") {
    Rng rng(54);
    for (int i = 0; i < 60; ++i) {
      Graph g = random_tree(std::uniform_int_distribution<int>(2, 10)(rng), rng);
      VisitOrderTable table = enumerate_visit_order(make_strategy("dfs", 1), g);
      for (NodeId t : g.nodes()) CHECK(table.expected_pos(t) == lemma1_expected_steps(g, 0, t));
    }
  }

  TEST_CASE("pairwise sum equals the expected position under the oracle for dfs") {
    Rng rng(55);
    for (int i = 0; i < 40; ++i) {
      Graph g = random_tree(std::uniform_int_distribution<int>(3, 9)(rng), rng);
      VisitOrderTable table = enumerate_visit_order(make_strategy("dfs", 1), g);
      for (NodeId t : g.nodes()) {
        if (t == kSource || g.degree(t) != 1) continue;
        CHECK(expected_pos_from_pairwise(TableStrategy::kDfs, g, 0, t, 1).total == table.expected_pos(t));
      }
    }
  }

  TEST_CASE("visit order law is a probability law") {
    Rng rng(56);
    for (int i = 0; i < 25; ++i) {
      Graph g = hideseek::testing::random_single_cycle(rng, 3, 7);
      for (const std::string& id : strategy_ids()) {
        SeekingStrategy strategy = make_strategy(id, 2);
        Rational total;
        for (const auto& [seq, p] : hideseek::testing::sequence_law(*strategy.components().front().policy, g)) {
          CHECK(seq.size() == static_cast<std::size_t>(g.num_nodes()));
          total += p;
        }
        CHECK(total == 1);
      }
    }
  }
}
