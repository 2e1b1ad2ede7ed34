#ifndef HIDESEEK_SEEKER_H_
#define HIDESEEK_SEEKER_H_

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hideseek/graph.h"
#include "hideseek/rational.h"

namespace hideseek {

using Rng = std::mt19937_64;

// What the seeker knows after visiting z_0..z_k: the visit order and the
// closed subgraph induced by the visited nodes. Nothing else of the hidden
// network is reachable through this type.
class Observation {
 public:
  // Checks that the visit order is an expanding sequence from the source and
  // that `view` has exactly the nodes of visited ∪ N(visited) with no edges
  // among unvisited nodes.
  Observation(std::vector<NodeId> visited, Graph view, int total_nodes);

  static Observation initial(const Graph& hidden);
  // Appends `v` (must be on the frontier) and reveals its neighbourhood.
  void advance(const Graph& hidden, NodeId v);

  const std::vector<NodeId>& visited() const { return visited_; }
  NodeSet visited_set() const { return visited_set_; }
  const Graph& view() const { return view_; }
  int total_nodes() const { return total_nodes_; }
  NodeSet frontier() const { return view_.nodes() - visited_set_; }
  NodeSet open_neighbors(NodeId v) const { return view_.neighbors(v) - visited_set_; }
  bool complete() const { return static_cast<int>(visited_.size()) == total_nodes_; }
  // Subgraph of the view spanned by visited nodes only.
  Graph visited_subgraph() const;

 private:
  Observation() = default;

  std::vector<NodeId> visited_;
  NodeSet visited_set_;
  Graph view_;
  int total_nodes_ = 0;
};

struct Weighted {
  NodeId node = 0;
  Rational probability;
};
using Distribution = std::vector<Weighted>;

Distribution uniform_over(NodeSet nodes);
// Exact draw: an integer uniform over the common denominator.
NodeId sample(const Distribution& dist, Rng& rng);
// Index drawn exactly with probability weights[i]; weights sum to 1.
std::size_t sample_index(const std::vector<Rational>& weights, Rng& rng);
Rational total_probability(const Distribution& dist);

// What part of the visit history a policy reads. The exact oracle merges
// histories that agree on it.
enum class StateDependence {
  kFullSequence,
  // Visited set plus the order of the visited nodes that still have an
  // unvisited neighbour.
  kOpenOrder,
  kVisitedSet,
};

class SeekerPolicy {
 public:
  virtual ~SeekerPolicy() = default;
  virtual std::string id() const = 0;
  // Support within obs.frontier(), probabilities summing to 1.
  virtual Distribution next(const Observation& obs) const = 0;
  virtual StateDependence dependence() const { return StateDependence::kFullSequence; }
};

// Active node and the numbered rule of the selection that produced it.
struct ActiveChoice {
  NodeId node = -1;
  int rule = 0;
};

ActiveChoice dfs_active(const Observation& obs);
ActiveChoice dfs_d_active(const Observation& obs, int d);
ActiveChoice adfs_active(const Observation& obs);

Distribution dfs_next(const Observation& obs);
Distribution dfs_d_next(const Observation& obs, int d);
Distribution adfs_next(const Observation& obs);

class DfsPolicy final : public SeekerPolicy {
 public:
  std::string id() const override { return "dfs"; }
  Distribution next(const Observation& obs) const override { return dfs_next(obs); }
  StateDependence dependence() const override { return StateDependence::kOpenOrder; }
};

class BoundedDfsPolicy final : public SeekerPolicy {
 public:
  explicit BoundedDfsPolicy(int d);
  std::string id() const override;
  Distribution next(const Observation& obs) const override { return dfs_d_next(obs, d_); }
  StateDependence dependence() const override { return StateDependence::kOpenOrder; }
  int bound() const { return d_; }

 private:
  int d_;
};

class AdjustedDfsPolicy final : public SeekerPolicy {
 public:
  std::string id() const override { return "adfs"; }
  Distribution next(const Observation& obs) const override { return adfs_next(obs); }
  StateDependence dependence() const override { return StateDependence::kOpenOrder; }
};

// Per-step convex combination 3/8 DFS + 3/8 aDFS + 1/4 DFS_d.
class PointwiseSigmaStarPolicy final : public SeekerPolicy {
 public:
  explicit PointwiseSigmaStarPolicy(int d);
  std::string id() const override;
  Distribution next(const Observation& obs) const override;
  StateDependence dependence() const override { return StateDependence::kOpenOrder; }

 private:
  int d_;
};

// Smallest frontier id.
class LowestLabelPolicy final : public SeekerPolicy {
 public:
  std::string id() const override { return "lowest_label"; }
  Distribution next(const Observation& obs) const override;
  StateDependence dependence() const override { return StateDependence::kVisitedSet; }
};

class HighestLabelPolicy final : public SeekerPolicy {
 public:
  std::string id() const override { return "highest_label"; }
  Distribution next(const Observation& obs) const override;
  StateDependence dependence() const override { return StateDependence::kVisitedSet; }
};

// Earliest visited node with an unvisited neighbour, uniform over those
// neighbours.
class BreadthFirstPolicy final : public SeekerPolicy {
 public:
  std::string id() const override { return "breadth_first"; }
  Distribution next(const Observation& obs) const override;
  StateDependence dependence() const override { return StateDependence::kOpenOrder; }
};

class UniformFrontierPolicy final : public SeekerPolicy {
 public:
  std::string id() const override { return "uniform_frontier"; }
  Distribution next(const Observation& obs) const override { return uniform_over(obs.frontier()); }
  StateDependence dependence() const override { return StateDependence::kVisitedSet; }
};

using PolicyPtr = std::shared_ptr<const SeekerPolicy>;

struct StrategyComponent {
  PolicyPtr policy;
  Rational weight;
};

// Mixed seeking strategy: one component is drawn per episode and followed
// throughout.
class SeekingStrategy {
 public:
  SeekingStrategy(std::string id, std::vector<StrategyComponent> components);
  static SeekingStrategy pure(PolicyPtr policy);

  const std::string& id() const { return id_; }
  const std::vector<StrategyComponent>& components() const { return components_; }
  const SeekerPolicy& draw(Rng& rng) const;

 private:
  std::string id_;
  std::vector<StrategyComponent> components_;
};

// 3/8 DFS, 3/8 aDFS, 1/4 DFS_d. Requires d >= 1.
SeekingStrategy sigma_star(int d);

// dfs | dfs_d | adfs | sigma_star | sigma_star_pointwise | lowest_label |
// highest_label | breadth_first | uniform_frontier
SeekingStrategy make_strategy(const std::string& id, int d);
std::vector<std::string> strategy_ids();

// Policies run against palm trees when checking strategy invariance.
std::vector<SeekingStrategy> policy_battery(int d);

struct Episode {
  std::vector<NodeId> sequence;
  int position(NodeId h) const;
};

// Throws PolicyViolation if the policy proposes a node off the frontier or
// returns a distribution that does not sum to 1.
Episode execute(const SeekerPolicy& policy, const Graph& g, Rng& rng);
Episode execute(const SeekingStrategy& strategy, const Graph& g, Rng& rng);

// Checks the SeekerPolicy contract for one observation.
void check_distribution(const Observation& obs, const Distribution& dist);

}  // namespace hideseek

#endif  // HIDESEEK_SEEKER_H_
