#include "hideseek/corpus.h"

#include <algorithm>
#include <numeric>

#include "hideseek/hider.h"

namespace hideseek {
namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Graph relabel(const Graph& g, const std::vector<NodeId>& label) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    NodeId a = label[static_cast<std::size_t>(e.u)];
    NodeId b = label[static_cast<std::size_t>(e.v)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph::from_edges(g.num_nodes(), edges);
}

Graph from(int n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::from_edges(n, list);
}

}  // namespace

Graph random_tree(int n, Rng& rng) {
  if (n < 2) throw Error(ErrorKind::kBadInput, "random tree needs n >= 2");
  std::vector<NodeId> code(static_cast<std::size_t>(n - 2));
  for (NodeId& c : code) c = uniform_int(rng, 0, n - 1);
  return tree_from_prufer(code);
}

Graph random_unicyclic(int n, int cycle_length, Rng& rng) {
  if (cycle_length < 3 || cycle_length > n || n > kMaxNodes) {
    throw Error(ErrorKind::kBadShape, "cycle length must lie in [3, n]");
  }
  // Build on ids 0..n-1 with the cycle on 0..L-1, then shuffle labels.
  std::vector<Edge> edges;
  for (NodeId v = 0; v < cycle_length; ++v) {
    NodeId w = (v + 1) % cycle_length;
    edges.push_back({std::min(v, w), std::max(v, w)});
  }
  for (NodeId v = cycle_length; v < n; ++v) edges.push_back({uniform_int(rng, 0, v - 1), v});
  Graph g = Graph::from_edges(n, edges);
  std::vector<NodeId> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  return relabel(g, label);
}

std::vector<CorpusEntry> random_corpus(int count, std::uint64_t seed, int min_n, int max_n) {
  Rng rng(seed);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    int n = uniform_int(rng, min_n, max_n);
    int cycle = uniform_int(rng, 3, std::min(n, 7));
    Graph g = random_unicyclic(n, cycle, rng);
    int d = uniform_int(rng, 1, 4);
    out.push_back({"random" + std::to_string(i), std::move(g), d});
  }
  return out;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"example1_7_2", example1_graph(7, 2).graph, 2});
  out.push_back({"example1_10_3", example1_graph(10, 3).graph, 3});
  out.push_back({"example2_8_3", example2_graph(8, 3).graph, 3});
  out.push_back({"example2_10_3", example2_graph(10, 3).graph, 3});
  // Triangle through the source with a tail and a pendant behind the far edge.
  out.push_back({"triangle_tail", from(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {2, 5}}), 2});
  // Square hanging one step away from the source; leaves behind it.
  out.push_back({"stem_square", from(8, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {0, 6}, {2, 7}}), 3});
  // Pentagon through the source, a long branch behind its far side.
  out.push_back({"pentagon_branch",
                 from(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}, {5, 6}, {0, 7}, {7, 8}}), 2});
  // Cycle off the entrance with a tree hanging off the entrance itself.
  out.push_back({"entrance_tree",
                 from(9, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {3, 6}, {0, 7}, {6, 8}}), 3});
  // Hexagon through the source: nodes behind it at several depths.
  out.push_back({"hexagon_behind",
                 from(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {3, 6}, {6, 7}, {2, 8}, {0, 9}}), 3});
  // Triangle through the source with two tails of different lengths.
  out.push_back({"triangle_two_tails",
                 from(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}}), 2});
  for (CorpusEntry& e : random_corpus(40, 0x5eed5eedULL, 5, 10)) out.push_back(std::move(e));
  return out;
}

}  // namespace hideseek
