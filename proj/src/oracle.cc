#include "hideseek/oracle.h"

#include <algorithm>
#include <cstring>
#include <optional>
#include <unordered_map>

namespace hideseek {
namespace {

std::string state_key(const Observation& obs, StateDependence dep) {
  std::string key(sizeof(std::uint64_t), '\0');
  std::uint64_t bits = obs.visited_set().bits();
  std::memcpy(key.data(), &bits, sizeof bits);
  switch (dep) {
    case StateDependence::kVisitedSet:
      break;
    case StateDependence::kOpenOrder:
      for (NodeId v : obs.visited()) {
        if (!obs.open_neighbors(v).empty()) key.push_back(static_cast<char>(v));
      }
      break;
    case StateDependence::kFullSequence:
      for (NodeId v : obs.visited()) key.push_back(static_cast<char>(v));
      break;
  }
  return key;
}

struct State {
  Observation obs;
  Rational probability;
};

}  // namespace

VisitOrderTable::VisitOrderTable(int universe)
    : universe_(universe),
      before_(static_cast<std::size_t>(universe) * static_cast<std::size_t>(universe)),
      arrival_(static_cast<std::size_t>(universe)) {}

const Rational& VisitOrderTable::visit_prob(NodeId v, NodeId t) const {
  return before_[static_cast<std::size_t>(v) * static_cast<std::size_t>(universe_) + static_cast<std::size_t>(t)];
}

Rational& VisitOrderTable::visit_prob(NodeId v, NodeId t) {
  return before_[static_cast<std::size_t>(v) * static_cast<std::size_t>(universe_) + static_cast<std::size_t>(t)];
}

Rational VisitOrderTable::expected_pos(NodeId h) const {
  Rational total = 0;
  for (NodeId v = 0; v < universe_; ++v) total += visit_prob(v, h);
  return total;
}

void VisitOrderTable::add_scaled(const VisitOrderTable& other, const Rational& weight) {
  for (std::size_t i = 0; i < before_.size(); ++i) before_[i] += weight * other.before_[i];
  for (std::size_t i = 0; i < arrival_.size(); ++i) arrival_[i] += weight * other.arrival_[i];
  peak_states = std::max(peak_states, other.peak_states);
  transitions += other.transitions;
}

VisitOrderTable enumerate_visit_order(const SeekerPolicy& policy, const Graph& g, const EnumerationOptions& opt) {
  const int n = g.num_nodes();
  if (opt.naive && n > kNaiveEnumerationMaxNodes) {
    throw Error(ErrorKind::kTooLarge, "naive enumeration limited to n <= 12, got " + std::to_string(n));
  }
  const StateDependence dep = opt.naive ? StateDependence::kFullSequence : policy.dependence();
  VisitOrderTable table(g.universe());
  std::vector<State> layer;
  layer.push_back({Observation::initial(g), Rational(1)});
  for (int step = 1; step < n; ++step) {
    std::vector<State> next;
    std::unordered_map<std::string, std::size_t> index;
    for (State& state : layer) {
      Distribution dist = policy.next(state.obs);
      check_distribution(state.obs, dist);
      for (const Weighted& w : dist) {
        Rational mass = state.probability * w.probability;
        for (NodeId u : state.obs.visited_set()) table.visit_prob(u, w.node) += mass;
        table.arrival_mass(w.node) += mass;
        ++table.transitions;
        Observation after = state.obs;
        after.advance(g, w.node);
        std::string key = state_key(after, dep);
        auto [it, fresh] = index.try_emplace(std::move(key), next.size());
        if (fresh) {
          if (next.size() >= opt.max_states) {
            throw Error(ErrorKind::kTooLarge, "enumeration exceeds " + std::to_string(opt.max_states) +
                                                  " states at step " + std::to_string(step));
          }
          next.push_back({std::move(after), std::move(mass)});
        } else {
          next[it->second].probability += mass;
        }
      }
    }
    table.peak_states = std::max(table.peak_states, next.size());
    layer = std::move(next);
  }
  return table;
}

VisitOrderTable enumerate_visit_order(const SeekingStrategy& strategy, const Graph& g, const EnumerationOptions& opt) {
  if (strategy.components().size() == 1) return enumerate_visit_order(*strategy.components().front().policy, g, opt);
  VisitOrderTable total(g.universe());
  for (const StrategyComponent& c : strategy.components()) {
    total.add_scaled(enumerate_visit_order(*c.policy, g, opt), c.weight);
  }
  return total;
}

Rational exact_expected_pos(const SeekingStrategy& strategy, const Graph& g, NodeId h, const EnumerationOptions& opt) {
  if (!g.has_node(h)) throw Error(ErrorKind::kNodeOutOfRange, "hiding node not in graph");
  return enumerate_visit_order(strategy, g, opt).expected_pos(h);
}

Rational exact_visit_prob(const SeekingStrategy& strategy, const Graph& g, NodeId v, NodeId t,
                          const EnumerationOptions& opt) {
  if (!g.has_node(v) || !g.has_node(t)) throw Error(ErrorKind::kNodeOutOfRange, "node not in graph");
  return enumerate_visit_order(strategy, g, opt).visit_prob(v, t);
}

Rational exact_expected_pos(const SeekingStrategy& strategy, const HiderStrategy& hider, const EnumerationOptions& opt) {
  Rational total = 0;
  const Graph* cached_graph = nullptr;
  std::optional<VisitOrderTable> cached;
  for (const HiderAtom& atom : hider.atoms()) {
    if (!cached_graph || !(*cached_graph == atom.graph)) {
      cached = enumerate_visit_order(strategy, atom.graph, opt);
      cached_graph = &atom.graph;
    }
    total += atom.probability * cached->expected_pos(atom.node);
  }
  return total;
}

BestResponse best_response_hider(int n, const BenefitFunction& a, const SeekingStrategy& strategy) {
  if (n > kMaxBestResponseNodes) {
    throw Error(ErrorKind::kTooLarge, "best response search limited to n <= 8, got " + std::to_string(n));
  }
  LabeledTrees trees(n);
  BestResponse best;
  bool found = false;
  for (std::uint64_t i = 0; i < trees.size(); ++i) {
    Graph tree = trees.at(i);
    VisitOrderTable table = enumerate_visit_order(strategy, tree);
    std::vector<int> dist = bfs_distances(tree, kSource);
    for (NodeId h : tree.nodes()) {
      Rational payoff = a(dist[static_cast<std::size_t>(h)]) * table.expected_pos(h);
      ++best.candidates;
      if (!found || payoff > best.payoff) {
        best.graph = tree;
        best.node = h;
        best.payoff = payoff;
        best.tree_index = i;
        found = true;
      }
    }
  }
  return best;
}

std::vector<BatteryResult> adversarial_policy_battery(int n, int d) {
  if (n > kMaxBatteryNodes) throw Error(ErrorKind::kTooLarge, "battery limited to n <= 10");
  HiderStrategy hider = palm_crown_mixed(n, d);
  std::vector<BatteryResult> out;
  for (const SeekingStrategy& strategy : policy_battery(d)) {
    out.push_back({strategy.id(), exact_expected_pos(strategy, hider)});
  }
  return out;
}

}  // namespace hideseek
