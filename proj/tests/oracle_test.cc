#include "doctest.h"

#include "hideseek/analysis.h"
#include "hideseek/hider.h"
#include "hideseek/oracle.h"
#include "support.h"

using namespace hideseek;

TEST_SUITE("oracle") {
  TEST_CASE("spec instances") {
    CHECK(exact_expected_pos(make_strategy("dfs", 1), hideseek::testing::star(4), 1) == 2);
    Instance ex = example1_graph(7, 2);
    CHECK(exact_expected_pos(make_strategy("dfs", 2), ex.graph, ex.target) == make_rational(14, 3));
    for (const SeekingStrategy& s : policy_battery(2)) {
      CHECK_MESSAGE(exact_expected_pos(s, palm_crown_mixed(5, 2)) == 3, s.id());
    }
  }

  TEST_CASE("palm invariance for named policies") {
    CHECK(exact_expected_pos(make_strategy("lowest_label", 1), palm_crown_mixed(6, 2)) == make_rational(7, 2));
    for (const SeekingStrategy& s : policy_battery(1)) {
      CHECK(exact_expected_pos(s, palm_crown_mixed(6, 5)) == 5);
    }
    CHECK(exact_expected_pos(sigma_star(3), palm_crown_mixed(8, 3)) == 5);
  }

  TEST_CASE("bounded dfs on example 1 reaches the target after 2d steps") {
    Instance ex = example1_graph(10, 3);
    CHECK(exact_expected_pos(make_strategy("dfs_d", 3), ex.graph, ex.target) == 6);
  }

  TEST_CASE("sigma_star is the weighted sum of its components") {
    Instance ex = example1_graph(10, 3);
    Rational mix = make_rational(3, 8) * exact_expected_pos(make_strategy("dfs", 3), ex.graph, ex.target) +
                   make_rational(3, 8) * exact_expected_pos(make_strategy("adfs", 3), ex.graph, ex.target) +
                   make_rational(1, 4) * exact_expected_pos(make_strategy("dfs_d", 3), ex.graph, ex.target);
    CHECK(exact_expected_pos(sigma_star(3), ex.graph, ex.target) == mix);
  }

  TEST_CASE("memoised enumeration matches brute force") {
    Rng rng(21);
    for (int i = 0; i < 30; ++i) {
      Graph g = i % 2 ? random_tree(6, rng) : hideseek::testing::random_single_cycle(rng, 4, 6);
      for (const std::string& id : strategy_ids()) {
        SeekingStrategy s = make_strategy(id, 2);
        VisitOrderTable table = enumerate_visit_order(s, g);
        for (NodeId h : g.nodes()) {
          CHECK_MESSAGE(table.expected_pos(h) == hideseek::testing::brute_expected_pos(s, g, h), id);
        }
      }
    }
  }

  TEST_CASE("memoised and naive keys agree") {
    Rng rng(22);
    EnumerationOptions naive;
    naive.naive = true;
    for (int i = 0; i < 20; ++i) {
      Graph g = hideseek::testing::random_single_cycle(rng, 4, 7);
      for (const std::string& id : strategy_ids()) {
        SeekingStrategy s = make_strategy(id, 2);
        VisitOrderTable fast = enumerate_visit_order(s, g);
        VisitOrderTable slow = enumerate_visit_order(s, g, naive);
        for (NodeId t : g.nodes()) {
          for (NodeId v : g.nodes()) CHECK(fast.visit_prob(v, t) == slow.visit_prob(v, t));
        }
      }
    }
  }

  TEST_CASE("arrival mass and complementarity") {
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
      Graph g = hideseek::testing::random_single_cycle(rng, 4, 9);
      VisitOrderTable table = enumerate_visit_order(sigma_star(2), g);
      for (NodeId v : g.nodes()) {
        if (v != kSource) CHECK(table.arrival_mass(v) == 1);
        for (NodeId t : g.nodes()) {
          if (v != t) CHECK(table.visit_prob(v, t) + table.visit_prob(t, v) == 1);
        }
      }
    }
  }

  TEST_CASE("guards") {
    EnumerationOptions tight;
    tight.max_states = 2;
    CHECK_THROWS_AS(enumerate_visit_order(make_strategy("uniform_frontier", 1), hideseek::testing::star(8), tight),
                    Error);
    EnumerationOptions naive;
    naive.naive = true;
    CHECK_THROWS_AS(enumerate_visit_order(make_strategy("dfs", 1), hideseek::testing::line(13), naive), Error);
    CHECK_THROWS_AS(best_response_hider(9, BenefitFunction::step(2), make_strategy("dfs", 1)), Error);
  }

  TEST_CASE("best response on five nodes") {
    BestResponse line = best_response_hider(5, BenefitFunction::step(4), make_strategy("dfs", 1));
    CHECK(line.payoff == 4);
    CHECK(line.candidates == 125 * 5);
    BestResponse flat = best_response_hider(5, BenefitFunction::step(10), make_strategy("dfs", 1));
    CHECK(flat.payoff == 4);
    CHECK(bfs_distances(flat.graph, 0)[static_cast<std::size_t>(flat.node)] == 4);
    BestResponse palm = best_response_hider(5, BenefitFunction::step(2), make_strategy("dfs", 1));
    CHECK(palm.payoff == 3);
  }
}
