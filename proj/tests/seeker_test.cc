#include "doctest.h"

#include <map>
#include <set>

#include "hideseek/hider.h"
#include "hideseek/seeker.h"
#include "support.h"

using namespace hideseek;
using hideseek::testing::graph;

namespace {

Observation walk(const Graph& g, std::initializer_list<NodeId> order) {
  Observation obs = Observation::initial(g);
  for (NodeId v : order) obs.advance(g, v);
  return obs;
}

std::map<NodeId, Rational> as_map(const Distribution& dist) {
  std::map<NodeId, Rational> m;
  for (const Weighted& w : dist) m[w.node] += w.probability;
  return m;
}

}  // namespace

TEST_SUITE("seeker") {
  TEST_CASE("observation tracks the closed subgraph") {
    Graph g = graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});
    Observation obs = walk(g, {1});
    CHECK(obs.frontier() == (NodeSet::of(2) | NodeSet::of(3)));
    CHECK(obs.view().nodes() == NodeSet::first(4));
    CHECK_FALSE(obs.view().has_node(4));
    CHECK_THROWS_AS(obs.advance(g, 4), Error);
    CHECK_THROWS_AS(Observation({0, 4}, g, 5), Error);
  }

  TEST_CASE("dfs on a star is uniform over the leaves") {
    auto m = as_map(dfs_next(Observation::initial(hideseek::testing::star(4))));
    REQUIRE(m.size() == 3);
    for (const auto& [v, p] : m) CHECK(p == make_rational(1, 3));
  }

  TEST_CASE("dfs on a line prefix is forced") {
    Graph g = hideseek::testing::line(5);
    auto m = as_map(dfs_next(walk(g, {1, 2})));
    REQUIRE(m.size() == 1);
    CHECK(m[3] == 1);
  }

  TEST_CASE("dfs on a palm after the trunk") {
    Graph g = palm_tree(10, 3);
    auto m = as_map(dfs_next(walk(g, {1, 2})));
    CHECK(m.size() == 7);
    for (const auto& [v, p] : m) {
      CHECK(palm_crown(10, 3).contains(v));
      CHECK(p == make_rational(1, 7));
    }
  }

  TEST_CASE("dfs backtracks to the latest visited node with open neighbours") {
    Graph g = graph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
    auto m = as_map(dfs_next(walk(g, {1, 3})));
    CHECK(m.size() == 1);
    CHECK(m[4] == 1);
    CHECK(dfs_active(walk(g, {1, 3, 4})).node == 0);
  }

  TEST_CASE("bounded dfs defers nodes beyond the bound") {
    // Source on a 5-cycle 0-1-2-3-4, tail 0-5-6. With d=1 the seeker first
    // finishes both cycle neighbours of the source before going deep.
    Graph g = graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}});
    auto m = as_map(dfs_d_next(walk(g, {1}), 1));
    for (const auto& [v, p] : m) CHECK(v != 2);
  }

  TEST_CASE("bounded dfs with bound n matches dfs everywhere") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      Graph g = hideseek::testing::random_single_cycle(rng, 4, 9);
      Observation obs = hideseek::testing::random_observation(g, rng);
      if (obs.complete()) continue;
      CHECK(as_map(dfs_d_next(obs, g.num_nodes())) == as_map(dfs_next(obs)));
    }
  }

  TEST_CASE("adjusted dfs prioritises the single-path tail after closing the cycle") {
    // Example 1 shape with n=7, d=2: tail 0-1-2, cycle 0-3-4-5-6-0.
    Instance ex = example1_graph(7, 2);
    Observation obs = walk(ex.graph, {3, 4, 5, 6});
    ActiveChoice a = adfs_active(obs);
    CHECK(a.rule == 1);
    CHECK(a.node == 0);
    auto m = as_map(adfs_next(obs));
    CHECK(m.size() == 1);
    CHECK(m[1] == 1);
  }

  TEST_CASE("adjusted dfs on triangle plus tail follows the first rule once the cycle is seen") {
    // Triangle 0-1-2 with tail 2-3 and 0-4.
    Graph g = graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 4}});
    Observation obs = walk(g, {1, 2});
    ActiveChoice a = adfs_active(obs);
    CHECK(a.rule == 1);
    CHECK(a.node == 0);
    CHECK(as_map(adfs_next(obs)) == std::map<NodeId, Rational>{{4, Rational(1)}});
  }

  TEST_CASE("sigma_star weights") {
    SeekingStrategy s = sigma_star(3);
    Rational total;
    for (const StrategyComponent& c : s.components()) total += c.weight;
    CHECK(total == 1);
    REQUIRE(s.components().size() == 3);
    CHECK(s.components()[0].weight == make_rational(3, 8));
    CHECK(s.components()[1].weight == make_rational(3, 8));
    CHECK(s.components()[2].weight == make_rational(1, 4));
    CHECK_THROWS_AS(sigma_star(0), Error);
  }

  TEST_CASE("line yields a unique sequence") {
    Graph g = hideseek::testing::line(4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      CHECK(execute(DfsPolicy(), g, rng).sequence == std::vector<NodeId>{0, 1, 2, 3});
    }
  }

  TEST_CASE("star leaf orders are equally likely") {
    auto law = hideseek::testing::sequence_law(DfsPolicy(), hideseek::testing::star(4));
    CHECK(law.size() == 6);
    for (const auto& [seq, p] : law) CHECK(p == make_rational(1, 6));
  }

  TEST_CASE("palm(5,2) crown positions") {
    auto law = hideseek::testing::sequence_law(DfsPolicy(), palm_tree(5, 2));
    CHECK(law.size() == 6);
    std::set<int> positions;
    for (const auto& [seq, p] : law) {
      CHECK(seq[0] == 0);
      CHECK(seq[1] == 1);
      positions.insert(static_cast<int>(std::find(seq.begin(), seq.end(), 4) - seq.begin()));
    }
    CHECK(positions == std::set<int>{2, 3, 4});
  }

  TEST_CASE("policy contract violations are reported") {
    class Rogue final : public SeekerPolicy {
     public:
      std::string id() const override { return "rogue"; }
      Distribution next(const Observation&) const override { return {{3, Rational(1)}}; }
    };
    Rng rng(1);
    CHECK_THROWS_AS(execute(Rogue(), hideseek::testing::line(4), rng), Error);
    Observation obs = Observation::initial(hideseek::testing::star(4));
    CHECK_THROWS_AS(check_distribution(obs, {{1, make_rational(1, 2)}}), Error);
  }

  TEST_CASE("strategy ids resolve") {
    for (const std::string& id : strategy_ids()) CHECK_NOTHROW(make_strategy(id, 2));
    CHECK_THROWS_AS(make_strategy("nope", 2), Error);
    CHECK(policy_battery(2).size() >= 6);
  }

  TEST_CASE("exact sampling follows the distribution") {
    Distribution dist{{1, make_rational(1, 4)}, {2, make_rational(3, 4)}};
    Rng rng(5);
    int ones = 0;
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) ones += sample(dist, rng) == 1 ? 1 : 0;
    CHECK(ones == doctest::Approx(draws / 4.0).epsilon(0.05));
  }
}
