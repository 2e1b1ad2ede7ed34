#include "hideseek/seeker.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <array>

namespace hideseek {
namespace {

void require_frontier(const Observation& obs) {
  if (obs.frontier().empty()) throw Error(ErrorKind::kEmptyFrontier, "every node has been visited");
}

// Index i picked by `pick_last` (max) or first (min) among visited nodes with
// an unvisited neighbour in `target`; -1 if none.
NodeId pick_visited(const Observation& obs, NodeSet target, bool pick_last) {
  const auto& z = obs.visited();
  if (pick_last) {
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
      if (!(obs.open_neighbors(*it) & target).empty()) return *it;
    }
  } else {
    for (NodeId v : z) {
      if (!(obs.open_neighbors(v) & target).empty()) return v;
    }
  }
  return -1;
}

NodeSet within_distance(const Graph& view, int d) {
  std::vector<int> dist = bfs_distances(view, kSource);
  NodeSet out;
  for (NodeId v : view.nodes()) {
    int dv = dist[static_cast<std::size_t>(v)];
    if (dv != kUnreachable && dv <= d) out.insert(v);
  }
  return out;
}

std::uint64_t draw_below(std::uint64_t bound, Rng& rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

// Index into `weights` drawn exactly with the given probabilities.
std::size_t draw_index(const std::vector<const Rational*>& weights, Rng& rng) {
  mpz_class common = 1;
  for (const Rational* w : weights) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), w->get_den_mpz_t());
  if (!common.fits_ulong_p()) throw Error(ErrorKind::kTooLarge, "probability denominator exceeds 64 bits");
  std::uint64_t r = draw_below(common.get_ui(), rng);
  mpz_class acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i]->get_num() * (common / weights[i]->get_den());
    if (mpz_class(static_cast<unsigned long>(r)) < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace

Observation::Observation(std::vector<NodeId> visited, Graph view, int total_nodes)
    : visited_(std::move(visited)), view_(std::move(view)), total_nodes_(total_nodes) {
  if (visited_.empty() || visited_.front() != kSource) {
    throw Error(ErrorKind::kBadInput, "visit order must start at the source");
  }
  if (total_nodes_ < static_cast<int>(visited_.size()) || total_nodes_ > view_.universe()) {
    throw Error(ErrorKind::kBadInput, "total node count inconsistent with the view");
  }
  for (std::size_t j = 0; j < visited_.size(); ++j) {
    NodeId v = visited_[j];
    if (!view_.has_node(v) || visited_set_.contains(v)) {
      throw Error(ErrorKind::kBadInput, "visit order repeats or leaves the view at node " + std::to_string(v));
    }
    if (j > 0 && (view_.neighbors(v) & visited_set_).empty()) {
      throw Error(ErrorKind::kBadInput, "node " + std::to_string(v) + " is not adjacent to earlier visits");
    }
    visited_set_.insert(v);
  }
  NodeSet closure = visited_set_;
  for (NodeId v : visited_set_) closure |= view_.neighbors(v);
  if (closure != view_.nodes()) throw Error(ErrorKind::kBadInput, "view is not the closed neighbourhood of the visits");
  for (NodeId u : frontier()) {
    if (!(view_.neighbors(u) - visited_set_).empty()) {
      throw Error(ErrorKind::kBadInput, "view has an edge between unvisited nodes");
    }
  }
}

Observation Observation::initial(const Graph& hidden) {
  if (!hidden.has_node(kSource)) throw Error(ErrorKind::kBadInput, "graph has no source");
  Observation obs;
  obs.visited_ = {kSource};
  obs.visited_set_ = NodeSet::of(kSource);
  obs.view_ = closed_subgraph(hidden, obs.visited_set_);
  obs.total_nodes_ = hidden.num_nodes();
  return obs;
}

void Observation::advance(const Graph& hidden, NodeId v) {
  if (v < 0 || v >= kMaxNodes || !frontier().contains(v)) {
    throw Error(ErrorKind::kPolicyViolation, "node " + std::to_string(v) + " is not on the frontier");
  }
  visited_.push_back(v);
  visited_set_.insert(v);
  view_.absorb_closed_neighborhood(hidden, v);
}

Graph Observation::visited_subgraph() const {
  std::vector<Edge> edges;
  for (NodeId u : visited_set_) {
    for (NodeId w : view_.neighbors(u) & visited_set_) {
      if (u < w) edges.push_back({u, w});
    }
  }
  return Graph::fragment(view_.universe(), visited_set_, edges);
}

Distribution uniform_over(NodeSet nodes) {
  Distribution out;
  if (nodes.empty()) return out;
  Rational p = make_rational(1, nodes.size());
  for (NodeId v : nodes) out.push_back({v, p});
  return out;
}

NodeId sample(const Distribution& dist, Rng& rng) {
  if (dist.empty()) throw Error(ErrorKind::kPolicyViolation, "empty distribution");
  std::vector<const Rational*> weights;
  for (const Weighted& w : dist) weights.push_back(&w.probability);
  return dist[draw_index(weights, rng)].node;
}

std::size_t sample_index(const std::vector<Rational>& weights, Rng& rng) {
  std::vector<const Rational*> ptrs;
  for (const Rational& w : weights) ptrs.push_back(&w);
  return draw_index(ptrs, rng);
}

Rational total_probability(const Distribution& dist) {
  Rational total = 0;
  for (const Weighted& w : dist) total += w.probability;
  return total;
}

ActiveChoice dfs_active(const Observation& obs) {
  require_frontier(obs);
  return {pick_visited(obs, obs.frontier(), true), 1};
}

ActiveChoice dfs_d_active(const Observation& obs, int d) {
  require_frontier(obs);
  const Graph& view = obs.view();
  const NodeSet frontier = obs.frontier();
  if (cyclomatic_number(obs.visited_subgraph()) > 0) {
    PathProfile profile(view, kSource);
    const int n = obs.total_nodes();
    NodeSet deferred_tail;  // R^1_d ∩ (R^2_n \ R^2_{d+1})
    NodeSet deferred;       // R^1_d ∩ (R^2_{d+1} \ R^2_d)
    for (NodeId u : frontier) {
      int within_d = profile.count(u, d);
      int within_d1 = profile.count(u, d + 1);
      int all = profile.count(u, n);
      if (within_d == 1 && all == 2 && within_d1 != 2) deferred_tail.insert(u);
      if (within_d == 1 && within_d1 == 2) deferred.insert(u);
    }
    if (!deferred_tail.empty()) return {pick_visited(obs, deferred_tail, true), 1};
    if (!deferred.empty()) return {pick_visited(obs, deferred, false), 2};
  }
  NodeSet near = within_distance(view, d);
  if (!(frontier & near).empty()) return {pick_visited(obs, near, true), 3};
  return {pick_visited(obs, frontier, true), 4};
}

ActiveChoice adfs_active(const Observation& obs) {
  require_frontier(obs);
  const NodeSet frontier = obs.frontier();
  if (std::optional<Cycle> cycle = find_cycle(obs.visited_subgraph())) {
    const Graph& view = obs.view();
    PathProfile profile(view, kSource);
    const int n = obs.total_nodes();
    const NodeId e = entrance(view, *cycle, kSource);
    NodeSet single, twice, single_via_entrance;
    for (NodeId u : view.nodes()) {
      int all = profile.count(u, n);
      if (all == 1) single.insert(u);
      if (all == 2) twice.insert(u);
      if (profile.count_through(u, e, n) == 1) single_via_entrance.insert(u);
    }
    if (!(frontier & (single_via_entrance - twice)).empty()) return {pick_visited(obs, single, true), 1};
    if (!(frontier & twice).empty()) return {pick_visited(obs, twice, true), 2};
  }
  return {pick_visited(obs, frontier, true), 3};
}

Distribution dfs_next(const Observation& obs) {
  return uniform_over(obs.open_neighbors(dfs_active(obs).node));
}

Distribution dfs_d_next(const Observation& obs, int d) {
  NodeSet open = obs.open_neighbors(dfs_d_active(obs, d).node);
  NodeSet near = open & within_distance(obs.view(), d);
  return uniform_over(near.empty() ? open : near);
}

Distribution adfs_next(const Observation& obs) {
  return uniform_over(obs.open_neighbors(adfs_active(obs).node));
}

BoundedDfsPolicy::BoundedDfsPolicy(int d) : d_(d) {
  if (d < 0) throw Error(ErrorKind::kBadInput, "bounded DFS needs d >= 0");
}

std::string BoundedDfsPolicy::id() const { return "dfs_d(" + std::to_string(d_) + ")"; }

PointwiseSigmaStarPolicy::PointwiseSigmaStarPolicy(int d) : d_(d) {
  if (d < 1) throw Error(ErrorKind::kBadInput, "sigma_star needs d >= 1");
}

std::string PointwiseSigmaStarPolicy::id() const {
  return "sigma_star_pointwise(" + std::to_string(d_) + ")";
}

Distribution PointwiseSigmaStarPolicy::next(const Observation& obs) const {
  std::array<Rational, kMaxNodes> mass{};
  auto add = [&](const Distribution& dist, const Rational& weight) {
    for (const Weighted& w : dist) mass[static_cast<std::size_t>(w.node)] += weight * w.probability;
  };
  add(dfs_next(obs), make_rational(3, 8));
  add(adfs_next(obs), make_rational(3, 8));
  add(dfs_d_next(obs, d_), make_rational(1, 4));
  Distribution out;
  for (NodeId v = 0; v < kMaxNodes; ++v) {
    if (mass[static_cast<std::size_t>(v)] != 0) out.push_back({v, mass[static_cast<std::size_t>(v)]});
  }
  return out;
}

Distribution LowestLabelPolicy::next(const Observation& obs) const {
  require_frontier(obs);
  return {{obs.frontier().min(), Rational(1)}};
}

Distribution HighestLabelPolicy::next(const Observation& obs) const {
  require_frontier(obs);
  return {{obs.frontier().max(), Rational(1)}};
}

Distribution BreadthFirstPolicy::next(const Observation& obs) const {
  require_frontier(obs);
  return uniform_over(obs.open_neighbors(pick_visited(obs, obs.frontier(), false)));
}

SeekingStrategy::SeekingStrategy(std::string id, std::vector<StrategyComponent> components)
    : id_(std::move(id)), components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorKind::kBadInput, "strategy has no components");
  Rational total = 0;
  for (const StrategyComponent& c : components_) {
    if (!c.policy || c.weight <= 0) throw Error(ErrorKind::kBadInput, "bad strategy component");
    total += c.weight;
  }
  if (total != 1) throw Error(ErrorKind::kBadInput, "strategy weights sum to " + to_fraction_string(total));
}

SeekingStrategy SeekingStrategy::pure(PolicyPtr policy) {
  std::string id = policy->id();
  return SeekingStrategy(std::move(id), {{std::move(policy), Rational(1)}});
}

const SeekerPolicy& SeekingStrategy::draw(Rng& rng) const {
  if (components_.size() == 1) return *components_.front().policy;
  std::vector<const Rational*> weights;
  for (const StrategyComponent& c : components_) weights.push_back(&c.weight);
  return *components_[draw_index(weights, rng)].policy;
}

SeekingStrategy sigma_star(int d) {
  if (d < 1) throw Error(ErrorKind::kBadInput, "sigma_star needs d >= 1");
  return SeekingStrategy("sigma_star(" + std::to_string(d) + ")",
                         {{std::make_shared<DfsPolicy>(), make_rational(3, 8)},
                          {std::make_shared<AdjustedDfsPolicy>(), make_rational(3, 8)},
                          {std::make_shared<BoundedDfsPolicy>(d), make_rational(1, 4)}});
}

std::vector<std::string> strategy_ids() {
  return {"dfs",          "dfs_d",         "adfs",          "sigma_star",      "sigma_star_pointwise",
          "lowest_label", "highest_label", "breadth_first", "uniform_frontier"};
}

SeekingStrategy make_strategy(const std::string& id, int d) {
  if (id == "dfs") return SeekingStrategy::pure(std::make_shared<DfsPolicy>());
  if (id == "dfs_d") return SeekingStrategy::pure(std::make_shared<BoundedDfsPolicy>(d));
  if (id == "adfs") return SeekingStrategy::pure(std::make_shared<AdjustedDfsPolicy>());
  if (id == "sigma_star") return sigma_star(d);
  if (id == "sigma_star_pointwise") return SeekingStrategy::pure(std::make_shared<PointwiseSigmaStarPolicy>(d));
  if (id == "lowest_label") return SeekingStrategy::pure(std::make_shared<LowestLabelPolicy>());
  if (id == "highest_label") return SeekingStrategy::pure(std::make_shared<HighestLabelPolicy>());
  if (id == "breadth_first") return SeekingStrategy::pure(std::make_shared<BreadthFirstPolicy>());
  if (id == "uniform_frontier") return SeekingStrategy::pure(std::make_shared<UniformFrontierPolicy>());
  throw Error(ErrorKind::kBadInput, "unknown strategy '" + id + "'");
}

std::vector<SeekingStrategy> policy_battery(int d) {
  d = std::max(d, 1);
  std::vector<SeekingStrategy> out;
  for (const std::string& id : strategy_ids()) out.push_back(make_strategy(id, d));
  return out;
}

int Episode::position(NodeId h) const {
  auto it = std::find(sequence.begin(), sequence.end(), h);
  if (it == sequence.end()) throw Error(ErrorKind::kNodeOutOfRange, "node " + std::to_string(h) + " not in episode");
  return static_cast<int>(it - sequence.begin());
}

void check_distribution(const Observation& obs, const Distribution& dist) {
  NodeSet seen;
  Rational total = 0;
  for (const Weighted& w : dist) {
    if (w.node < 0 || w.node >= kMaxNodes || !obs.frontier().contains(w.node) || seen.contains(w.node)) {
      throw Error(ErrorKind::kPolicyViolation, "node " + std::to_string(w.node) + " is not a fresh frontier node");
    }
    if (w.probability <= 0) throw Error(ErrorKind::kPolicyViolation, "non-positive probability");
    seen.insert(w.node);
    total += w.probability;
  }
  if (total != 1) throw Error(ErrorKind::kPolicyViolation, "distribution sums to " + to_fraction_string(total));
}

Episode execute(const SeekerPolicy& policy, const Graph& g, Rng& rng) {
  Observation obs = Observation::initial(g);
  while (!obs.complete()) {
    Distribution dist = policy.next(obs);
    check_distribution(obs, dist);
    obs.advance(g, sample(dist, rng));
  }
  return {obs.visited()};
}

Episode execute(const SeekingStrategy& strategy, const Graph& g, Rng& rng) {
  return execute(strategy.draw(rng), g, rng);
}

}  // namespace hideseek
