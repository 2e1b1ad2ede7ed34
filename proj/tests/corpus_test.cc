#include "doctest.h"

#include <set>

#include "hideseek/analysis.h"
#include "hideseek/corpus.h"
#include "support.h"

using namespace hideseek;

TEST_SUITE("corpus") {
  TEST_CASE("random generators produce the requested shapes") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
      CHECK(is_tree(random_tree(8, rng)));
      Graph g = random_unicyclic(9, 4, rng);
      CHECK(cyclomatic_number(g) == 1);
      CHECK(find_cycle(g)->members.size() == 4);
    }
    CHECK_THROWS_AS(random_unicyclic(5, 2, rng), Error);
    CHECK_THROWS_AS(random_unicyclic(5, 6, rng), Error);
  }

  TEST_CASE("default corpus is deterministic and admissible") {
    std::vector<CorpusEntry> a = default_corpus();
    std::vector<CorpusEntry> b = default_corpus();
    REQUIRE(a.size() == b.size());
    std::set<std::string> names;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].graph == b[i].graph);
      CHECK(a[i].graph.num_nodes() <= 12);
      CHECK(cyclomatic_number(a[i].graph) <= 1);
      CHECK_NOTHROW(PairwiseTables(a[i].graph, kSource, a[i].d));
      names.insert(a[i].name);
    }
    CHECK(names.size() == a.size());
  }

  TEST_CASE("random corpus depends only on the seed") {
    std::vector<CorpusEntry> a = random_corpus(5, 77, 5, 8);
    std::vector<CorpusEntry> b = random_corpus(5, 77, 5, 8);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].graph == b[i].graph);
  }
}
