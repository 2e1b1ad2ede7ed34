#ifndef HIDESEEK_CORPUS_H_
#define HIDESEEK_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hideseek/graph.h"
#include "hideseek/seeker.h"

namespace hideseek {

struct CorpusEntry {
  std::string name;
  Graph graph;
  int d = 1;
};

// Uniform random labelled tree (random Prüfer code); the source keeps id 0.
Graph random_tree(int n, Rng& rng);

// Connected graph with exactly one cycle of `cycle_length` nodes; the other
// nodes hang off it in random trees. Ids are shuffled, so the source (id 0)
// may land on the cycle or anywhere off it.
Graph random_unicyclic(int n, int cycle_length, Rng& rng);

// Hand-built single-cycle networks plus seeded random ones, all n <= 12,
// with bounds chosen so that every pairwise table row is exercised.
std::vector<CorpusEntry> default_corpus();

// `count` random entries drawn from `seed`.
std::vector<CorpusEntry> random_corpus(int count, std::uint64_t seed, int min_n, int max_n);

}  // namespace hideseek

#endif  // HIDESEEK_CORPUS_H_
