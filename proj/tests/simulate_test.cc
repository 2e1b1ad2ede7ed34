#include "doctest.h"

#include <cstdlib>

#include "hideseek/hider.h"
#include "hideseek/oracle.h"
#include "hideseek/parallel.h"
#include "hideseek/simulate.h"
#include "support.h"

using namespace hideseek;

TEST_SUITE("simulate") {
  TEST_CASE("line end is always at position 3") {
    SeekingStrategy dfs = make_strategy("dfs", 1);
    for (std::uint64_t i = 0; i < 50; ++i) CHECK(run_episode(dfs, hideseek::testing::line(4), 3, 7, i) == 3);
  }

  TEST_CASE("palm crown positions stay in the crown range") {
    SeekingStrategy dfs = make_strategy("dfs", 1);
    for (std::uint64_t i = 0; i < 200; ++i) {
      int pos = run_episode(dfs, palm_tree(5, 2), 4, 9, i);
      CHECK(pos >= 2);
      CHECK(pos <= 4);
    }
  }

  TEST_CASE("episodes are reproducible") {
    SeekingStrategy s = sigma_star(2);
    Graph g = example1_graph(12, 4).graph;
    for (std::uint64_t i = 0; i < 20; ++i) CHECK(run_episode(s, g, 4, 99, i) == run_episode(s, g, 4, 99, i));
  }

  TEST_CASE("results do not depend on the worker count") {
    SeekingStrategy s = sigma_star(2);
    HiderStrategy h = palm_crown_mixed(8, 3);
    MonteCarloResult one = monte_carlo(s, h, 3000, 5, 1);
    MonteCarloResult four = monte_carlo(s, h, 3000, 5, 4);
    CHECK(one.sum == four.sum);
    CHECK(one.sum_squares == four.sum_squares);
    CHECK(mc_csv_row("x", "s", one, std::nullopt) == mc_csv_row("x", "s", four, std::nullopt));
  }

  TEST_CASE("confidence intervals cover the known values") {
    MonteCarloResult palm = monte_carlo(make_strategy("dfs", 1), palm_crown_mixed(10, 3), 100000, 1);
    CHECK(palm.covers(Rational(6), 1.96 * 2));
    CHECK(palm.ci_lo < 6);
    CHECK(palm.ci_hi > 6);

    Instance ex1 = example1_graph(30, 4);
    MonteCarloResult r1 = monte_carlo(make_strategy("dfs", 4), HiderStrategy::pure(ex1.graph, ex1.target), 100000, 2);
    CHECK(r1.covers(make_rational(62, 3), 4));

    Instance ex2 = example2_graph(32, 5);
    MonteCarloResult r2 = monte_carlo(make_strategy("dfs_d", 5), HiderStrategy::pure(ex2.graph, ex2.target), 100000, 3);
    CHECK_MESSAGE(r2.covers(make_rational(65, 3), 4), "mean " << r2.mean << " stderr " << r2.stderr_mean);
  }

  TEST_CASE("monte carlo agrees with the oracle on random graphs") {
    Rng rng(31);
    for (int i = 0; i < 10; ++i) {
      Graph g = hideseek::testing::random_single_cycle(rng, 5, 9);
      NodeId h = g.num_nodes() - 1;
      for (const char* id : {"dfs", "adfs", "dfs_d", "sigma_star"}) {
        SeekingStrategy s = make_strategy(id, 2);
        Rational exact = exact_expected_pos(s, g, h);
        MonteCarloResult r = monte_carlo(s, HiderStrategy::pure(g, h), 10000, 100 + i);
        CHECK_MESSAGE(r.covers(exact, 4.5), id << " exact " << to_fraction_string(exact) << " mean " << r.mean);
      }
    }
  }

  TEST_CASE("csv format") {
    CHECK(mc_csv_header() == "instance,strategy,trials,seed,mean,stderr,ci_lo,ci_hi,exact");
    MonteCarloResult r = monte_carlo(make_strategy("dfs", 1), HiderStrategy::pure(hideseek::testing::line(3), 2), 10, 1);
    std::string row = mc_csv_row("line3", "dfs", r, Rational(2));
    CHECK(row.rfind("line3,dfs,10,1,2,0,", 0) == 0);
    CHECK(row.substr(row.size() - 4) == ",2/1");
  }

  TEST_CASE("worker count comes from the environment") {
    setenv("HIDESEEK_WORKERS", "3", 1);
    CHECK(worker_count() == 3);
    unsetenv("HIDESEEK_WORKERS");
    CHECK(worker_count() >= 1);
  }
}
