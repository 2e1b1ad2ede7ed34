#include "doctest.h"

#include "hideseek/analysis.h"
#include "hideseek/hider.h"
#include "hideseek/oracle.h"
#include "support.h"

using namespace hideseek;
using hideseek::testing::graph;

TEST_SUITE("analysis") {
  TEST_CASE("tree formula examples") {
    CHECK(lemma1_expected_steps(hideseek::testing::star(4), 0, 2) == 2);
    CHECK(lemma1_expected_steps(hideseek::testing::line(4), 0, 3) == 3);
    CHECK(lemma1_expected_steps(hideseek::testing::line(4), 0, 1) == 1);
    CHECK_THROWS_AS(lemma1_expected_steps(hideseek::testing::cycle(4), 0, 2), Error);
  }

  TEST_CASE("palm value") {
    CHECK(palm_value(10, 3) == 6);
    CHECK(palm_value(5, 4) == 4);
    CHECK(palm_value(2, 1) == 1);
    CHECK_THROWS_AS(palm_value(5, 5), Error);
  }

  TEST_CASE("hider payoff") {
    CHECK(hider_payoff(BenefitFunction::step(3), 3, 10) == 6);
    CHECK(hider_payoff(BenefitFunction::step(3), 4, 10) == 0);
    CHECK(hider_payoff(BenefitFunction::parse("geometric:0.9"), 1, 10) == make_rational(9, 2));
  }

  TEST_CASE("sigma_star bound") {
    CHECK(prop1_bound(16, 3) == make_rational(43, 4));
    CHECK(prop1_bound(16, 1) == make_rational(73, 8));
    Instance ex = example1_graph(10, 3);
    CHECK(exact_expected_pos(sigma_star(3), ex.graph, ex.target) <= prop1_bound(10, 3));
  }

  TEST_CASE("dfs tables on the example 1 instance") {
    Instance ex = example1_graph(10, 3);
    for (NodeId v = 4; v < 10; ++v) {
      PairwiseCaseResult r = xvt(TableStrategy::kDfs, ex.graph, 0, ex.target, v, 3);
      CHECK(r.probability == make_rational(2, 3));
      CHECK(r.label == "dfs.t_entrance.v_double");
    }
  }

  TEST_CASE("adjusted dfs table for a two-path node off the cycle") {
    // Square 0-1-2-3 with a pendant 4 on the antipode 2 and a tail 0-5.
    Graph g = graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {0, 5}});
    PairwiseCaseResult r = xvt(TableStrategy::kAdfs, g, 0, 5, 4, 1);
    CHECK(r.probability == make_rational(1, 3));
    CHECK(r.label == "adfs.t_entrance.v_behind");
  }

  TEST_CASE("sigma_star table with both nodes on the cycle") {
    Graph g = hideseek::testing::cycle(6);
    PairwiseCaseResult r = xvt(TableStrategy::kSigmaStar, g, 0, 1, 5, 2);
    CHECK(r.probability == make_rational(1, 2));
    CHECK(r.label == "sigma_star.t_cycle.v_cycle");
  }

  TEST_CASE("dfs table on trees is one half") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
      Graph g = random_tree(7, rng);
      PairwiseTables tables(g, 0, 1);
      for (NodeId t : g.nodes()) {
        for (NodeId v : g.nodes()) {
          if (tables.precondition_failure(TableStrategy::kDfs, t, v)) continue;
          CHECK(tables.xvt(TableStrategy::kDfs, t, v).probability == make_rational(1, 2));
        }
      }
    }
  }

  TEST_CASE("preconditions name the failed clause") {
    Graph g = hideseek::testing::line(4);
    PairwiseTables tables(g, 0, 2);
    CHECK(tables.precondition_failure(TableStrategy::kDfs, 3, 1) == "v_not_on_every_path_to_t");
    CHECK(tables.precondition_failure(TableStrategy::kDfs, 3, 3) == "v_distinct_from_t");
    CHECK(tables.precondition_failure(TableStrategy::kDfs, 1, 3) == "t_leaf_or_on_cycle");
    CHECK(tables.precondition_failure(TableStrategy::kDfsD, 3, 2).has_value());
    try {
      tables.xvt(TableStrategy::kDfs, 3, 1);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kPreconditionViolated);
      CHECK(std::string(e.what()).find("v_not_on_every_path_to_t") != std::string::npos);
    }
    Graph two = graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK_THROWS_AS(PairwiseTables(two, 0, 2), Error);
  }

  TEST_CASE("expected position from pairwise terms") {
    CHECK(expected_pos_from_pairwise(TableStrategy::kDfs, palm_tree(10, 3), 0, 9, 1).total == 6);
    Instance ex1 = example1_graph(10, 3);
    CHECK(expected_pos_from_pairwise(TableStrategy::kDfs, ex1.graph, 0, ex1.target, 3).total == 7);
    Instance ex2 = example2_graph(17, 5);
    CHECK(expected_pos_from_pairwise(TableStrategy::kDfsD, ex2.graph, 0, ex2.target, 5).total ==
          make_rational(35, 3));
    PairwiseSum sum = expected_pos_from_pairwise(TableStrategy::kDfs, hideseek::testing::line(4), 0, 3, 1);
    for (const PairwiseTerm& term : sum.terms) CHECK(term.label == "must_pass");
  }

  TEST_CASE("table values stay in the universe") {
    for (TableStrategy s : kTableStrategies) CHECK_FALSE(table_rows(s).empty());
    CHECK(in_table_universe(make_rational(13, 24)));
    CHECK_FALSE(in_table_universe(make_rational(1, 5)));
  }
}
