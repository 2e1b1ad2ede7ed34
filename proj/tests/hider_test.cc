#include "doctest.h"

#include <set>

#include "hideseek/graph.h"
#include "hideseek/hider.h"
#include "support.h"

using namespace hideseek;

TEST_SUITE("hider") {
  TEST_CASE("palm shapes") {
    Graph star = palm_tree(5, 1);
    CHECK(star.degree(0) == 4);
    Graph line = palm_tree(5, 4);
    CHECK(line == hideseek::testing::line(5));
    Graph palm = palm_tree(10, 3);
    CHECK(palm.num_edges() == 9);
    CHECK(palm_crown(10, 3).size() == 7);
    std::vector<int> dist = bfs_distances(palm, 0);
    for (NodeId c : palm_crown(10, 3)) CHECK(dist[static_cast<std::size_t>(c)] == 3);
    CHECK_THROWS_AS(palm_tree(5, 0), Error);
    CHECK_THROWS_AS(palm_tree(5, 5), Error);
    CHECK_THROWS_AS(palm_tree(1, 1), Error);
  }

  TEST_CASE("crown-uniform hiding") {
    auto atoms = [](int n, int d) { return palm_crown_mixed(n, d).atoms(); };
    CHECK(atoms(5, 2).size() == 3);
    for (const HiderAtom& a : atoms(5, 2)) CHECK(a.probability == make_rational(1, 3));
    CHECK(atoms(5, 4).size() == 1);
    CHECK(atoms(5, 4).front().probability == 1);
    CHECK(atoms(10, 3).size() == 7);
    for (const HiderAtom& a : atoms(10, 3)) CHECK(a.probability == make_rational(1, 7));
  }

  TEST_CASE("hider strategy validation") {
    Graph g = palm_tree(4, 2);
    CHECK_THROWS_AS(HiderStrategy({{g, 2, make_rational(1, 2)}}), Error);
    CHECK_THROWS_AS(HiderStrategy({{g, 9, Rational(1)}}), Error);
    CHECK_THROWS_AS(HiderStrategy({{g, 2, Rational(0)}, {g, 3, Rational(1)}}), Error);
    CHECK_THROWS_AS(HiderStrategy({{hideseek::testing::cycle(4), 2, Rational(1)}}, 3), Error);
    CHECK_NOTHROW(HiderStrategy({{g, 2, make_rational(1, 2)}, {g, 3, make_rational(1, 2)}}, 3));
  }

  TEST_CASE("benefit functions") {
    BenefitFunction step = BenefitFunction::step(3);
    CHECK(step(3) == 1);
    CHECK(step(4) == 0);
    BenefitFunction geo = BenefitFunction::parse("geometric:0.9");
    CHECK(geo(2) == make_rational(81, 100));
    BenefitFunction tab = BenefitFunction::parse("table:1,1/2");
    CHECK(tab(0) == 1);
    CHECK(tab(7) == make_rational(1, 2));
    CHECK_THROWS_AS(BenefitFunction::table({Rational(1), Rational(2)}), Error);
    CHECK_THROWS_AS(BenefitFunction::geometric(Rational(2)), Error);
    CHECK_THROWS_AS(BenefitFunction::parse("nope:1"), Error);
    BenefitFunction back = BenefitFunction::from_json(geo.to_json());
    for (int x = 0; x < 6; ++x) CHECK(back(x) == geo(x));
  }

  TEST_CASE("optimal hiding depths") {
    CHECK(d_star(BenefitFunction::step(3), 10) == std::vector<int>{3});
    CHECK(d_star(BenefitFunction::geometric(make_rational(9, 10)), 10) == std::vector<int>{0, 1});
    CHECK(d_star(BenefitFunction::geometric(Rational(1)), 7) == std::vector<int>{6});
  }

  TEST_CASE("d_star agrees with a direct argmax") {
    for (int n = 2; n <= 12; ++n) {
      for (const char* spec : {"step:1", "step:4", "geometric:0.5", "geometric:0.9", "table:1,1,3/4,1/4"}) {
        BenefitFunction a = BenefitFunction::parse(spec);
        Rational best = -1;
        std::vector<int> arg;
        for (int d = 0; d < n; ++d) {
          Rational v = a(d) * Rational(n + d - 1) / 2;
          if (v > best) {
            best = v;
            arg = {d};
          } else if (v == best) {
            arg.push_back(d);
          }
        }
        CHECK(d_star(a, n) == arg);
      }
    }
  }

  TEST_CASE("example 1 generator") {
    Instance ex = example1_graph(10, 3);
    CHECK(ex.graph.num_nodes() == 10);
    CHECK(ex.graph.num_edges() == 10);
    CHECK(ex.target == 3);
    Instance small = example1_graph(5, 2);
    CHECK(find_cycle(small.graph)->members.size() == 3);
    CHECK_THROWS_AS(example1_graph(4, 2), Error);
  }

  TEST_CASE("example 2 generator") {
    const int n = 17, d = 5;
    Instance ex = example2_graph(n, d);
    CHECK(ex.graph.num_nodes() == n);
    CHECK(find_cycle(ex.graph)->members.size() == 2 * d - 2);
    CHECK(bfs_distances(ex.graph, 0)[static_cast<std::size_t>(ex.target)] == d);
    int pendants = 0;
    for (NodeId v : ex.graph.nodes()) {
      if (ex.graph.degree(v) == 1 && v != ex.target) ++pendants;
    }
    CHECK(pendants == n - 3 * d + 2);
    ReachabilityClasses r = reachability_classes(ex.graph, 0, d);
    for (NodeId p = 3 * d - 2; p < n; ++p) CHECK(r.in(2, p));
    CHECK_THROWS_AS(example2_graph(3 * d - 2, d), Error);
    CHECK_THROWS_AS(example2_graph(4, 5), Error);
  }

  TEST_CASE("tree enumeration counts and validity") {
    CHECK(all_trees(3).size() == 3);
    CHECK(all_trees(4).size() == 16);
    LabeledTrees five = all_trees(5);
    CHECK(five.size() == 125);
    std::set<std::vector<Edge>> distinct;
    five.for_each([&](const Graph& g) {
      CHECK(g.num_edges() == 4);
      CHECK(is_tree(g));
      distinct.insert(g.edges());
    });
    CHECK(distinct.size() == 125);
    CHECK_THROWS_AS(all_trees(10), Error);
    CHECK_THROWS_AS(all_trees(1), Error);
  }

  TEST_CASE("prufer decoding of known codes") {
    std::vector<NodeId> star_code{0, 0, 0};
    CHECK(tree_from_prufer(star_code) == hideseek::testing::star(5));
    std::vector<NodeId> line_code{1, 2, 3};
    CHECK(tree_from_prufer(line_code) == hideseek::testing::line(5));
  }
}
