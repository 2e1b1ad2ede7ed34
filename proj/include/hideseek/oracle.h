#ifndef HIDESEEK_ORACLE_H_
#define HIDESEEK_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hideseek/graph.h"
#include "hideseek/hider.h"
#include "hideseek/rational.h"
#include "hideseek/seeker.h"

namespace hideseek {

struct EnumerationOptions {
  // Largest number of distinct histories held for one step; TooLarge beyond.
  std::size_t max_states = 1'500'000;
  // Key histories by the full visit sequence regardless of what the policy
  // declares. Limited to n <= kNaiveEnumerationMaxNodes.
  bool naive = false;
};

inline constexpr int kNaiveEnumerationMaxNodes = 12;

// Exact law of the visit order induced by a policy on a network.
class VisitOrderTable {
 public:
  explicit VisitOrderTable(int universe);

  int universe() const { return universe_; }
  // P(v is visited before t); 1 for v = source, t != source.
  const Rational& visit_prob(NodeId v, NodeId t) const;
  Rational& visit_prob(NodeId v, NodeId t);
  // E[pos(h)] = sum over v of P(v before h).
  Rational expected_pos(NodeId h) const;
  // Sum of transition probability into each non-source node; must be 1.
  const Rational& arrival_mass(NodeId v) const { return arrival_[static_cast<std::size_t>(v)]; }
  Rational& arrival_mass(NodeId v) { return arrival_[static_cast<std::size_t>(v)]; }

  std::size_t peak_states = 0;
  std::size_t transitions = 0;

  void add_scaled(const VisitOrderTable& other, const Rational& weight);

 private:
  int universe_;
  std::vector<Rational> before_;
  std::vector<Rational> arrival_;
};

VisitOrderTable enumerate_visit_order(const SeekerPolicy& policy, const Graph& g, const EnumerationOptions& opt = {});
// Weighted sum of the components' tables.
VisitOrderTable enumerate_visit_order(const SeekingStrategy& strategy, const Graph& g,
                                      const EnumerationOptions& opt = {});

Rational exact_expected_pos(const SeekingStrategy& strategy, const Graph& g, NodeId h,
                            const EnumerationOptions& opt = {});
Rational exact_visit_prob(const SeekingStrategy& strategy, const Graph& g, NodeId v, NodeId t,
                          const EnumerationOptions& opt = {});
// Expected position of the hider's node, averaged over the hider's atoms.
Rational exact_expected_pos(const SeekingStrategy& strategy, const HiderStrategy& hider,
                            const EnumerationOptions& opt = {});

inline constexpr int kMaxBestResponseNodes = 8;

struct BestResponse {
  Graph graph;
  NodeId node = kSource;
  Rational payoff;
  std::uint64_t tree_index = 0;
  std::uint64_t candidates = 0;
};

// Max over all labelled trees on n nodes and hiding nodes h of
// A(dist(s,h)) * E[pos(h)] against the strategy. First maximiser in
// (tree index, node) order is reported.
BestResponse best_response_hider(int n, const BenefitFunction& a, const SeekingStrategy& strategy);

struct BatteryResult {
  std::string strategy;
  Rational expected_pos;
};

// Exact expected position of a crown-uniform target on palm_tree(n, d) for
// each policy of the battery.
std::vector<BatteryResult> adversarial_policy_battery(int n, int d);

inline constexpr int kMaxBatteryNodes = 10;

}  // namespace hideseek

#endif  // HIDESEEK_ORACLE_H_
