#ifndef HIDESEEK_TESTS_SUPPORT_H_
#define HIDESEEK_TESTS_SUPPORT_H_

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <vector>

#include "hideseek/corpus.h"
#include "hideseek/graph.h"
#include "hideseek/rational.h"
#include "hideseek/seeker.h"

namespace hideseek::testing {

inline Graph graph(int n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::from_edges(n, list);
}

inline Graph line(int n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

inline Graph star(int n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
  return Graph::from_edges(n, edges);
}

// Every complete visit sequence the policy can produce, with its exact
// probability, by plain recursion over observations. Shares no code with the
// oracle's dynamic program.
inline std::map<std::vector<NodeId>, Rational> sequence_law(const SeekerPolicy& policy, const Graph& g) {
  std::map<std::vector<NodeId>, Rational> law;
  std::function<void(const Observation&, const Rational&)> walk = [&](const Observation& obs, const Rational& p) {
    if (obs.complete()) {
      law[obs.visited()] += p;
      return;
    }
    for (const Weighted& w : policy.next(obs)) {
      Observation child = obs;
      child.advance(g, w.node);
      walk(child, p * w.probability);
    }
  };
  walk(Observation::initial(g), Rational(1));
  return law;
}

inline Rational brute_expected_pos(const SeekerPolicy& policy, const Graph& g, NodeId h) {
  Rational total;
  for (const auto& [seq, p] : sequence_law(policy, g)) {
    auto at = std::find(seq.begin(), seq.end(), h);
    total += p * static_cast<long>(at - seq.begin());
  }
  return total;
}

inline Rational brute_visit_prob(const SeekerPolicy& policy, const Graph& g, NodeId v, NodeId t) {
  Rational total;
  for (const auto& [seq, p] : sequence_law(policy, g)) {
    auto pv = std::find(seq.begin(), seq.end(), v);
    auto pt = std::find(seq.begin(), seq.end(), t);
    if (pv < pt) total += p;
  }
  return total;
}

inline Rational brute_expected_pos(const SeekingStrategy& strategy, const Graph& g, NodeId h) {
  Rational total;
  for (const StrategyComponent& c : strategy.components()) total += c.weight * brute_expected_pos(*c.policy, g, h);
  return total;
}

// Random connected graph with exactly one cycle and the source anywhere.
inline Graph random_single_cycle(Rng& rng, int min_n, int max_n) {
  int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  int len = std::uniform_int_distribution<int>(3, n)(rng);
  return random_unicyclic(n, len, rng);
}

// Random expanding prefix of a visit sequence on g, as an observation.
inline Observation random_observation(const Graph& g, Rng& rng) {
  Observation obs = Observation::initial(g);
  int steps = std::uniform_int_distribution<int>(0, g.num_nodes() - 1)(rng);
  for (int i = 0; i < steps; ++i) {
    std::vector<NodeId> frontier = obs.frontier().to_vector();
    obs.advance(g, frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)]);
  }
  return obs;
}

}  // namespace hideseek::testing

#endif  // HIDESEEK_TESTS_SUPPORT_H_
