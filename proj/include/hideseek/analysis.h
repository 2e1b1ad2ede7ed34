#ifndef HIDESEEK_ANALYSIS_H_
#define HIDESEEK_ANALYSIS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hideseek/graph.h"
#include "hideseek/hider.h"
#include "hideseek/rational.h"

namespace hideseek {

// (n + dist(s,t) - m)/2 where m counts the nodes whose s-path passes through
// t. Expected position of t under randomized DFS on a tree.
Rational lemma1_expected_steps(const Graph& tree, NodeId s, NodeId t);

// (n+d-1)/2: expected position of a crown-uniform target on a palm of
// height d, against any seeker.
Rational palm_value(int n, int d);

// A(d)(n+d-1)/2.
Rational hider_payoff(const BenefitFunction& a, int d, int n);

// 9n/16 + (13d-11)/16.
Rational prop1_bound(int n, int d);

enum class TableStrategy { kDfs, kDfsD, kAdfs, kSigmaStar };

std::string_view table_strategy_name(TableStrategy s);
TableStrategy parse_table_strategy(std::string_view id);
inline constexpr TableStrategy kTableStrategies[] = {TableStrategy::kDfs, TableStrategy::kDfsD,
                                                     TableStrategy::kAdfs, TableStrategy::kSigmaStar};

struct PairwiseCaseResult {
  Rational probability;
  std::string label;  // "<strategy>.<row>"
};

// Every value a pairwise table can produce.
bool in_table_universe(const Rational& p);
// Row labels each strategy's table can emit, in listing order.
const std::vector<std::string>& table_rows(TableStrategy s);

// Node classes of one network seen from `s`, shared across (t, v) queries.
class PairwiseTables {
 public:
  // Throws PreconditionViolated (clause at_most_one_cycle) for graphs with
  // more than one cycle.
  PairwiseTables(const Graph& g, NodeId s, int d);

  // Probability that v is visited before t. Throws PreconditionViolated
  // naming the failed clause when (t, v) is outside the tables' hypotheses
  // or no row matches.
  PairwiseCaseResult xvt(TableStrategy strategy, NodeId t, NodeId v) const;

  // Names the first failed clause, or nullopt if (t, v) is admissible.
  std::optional<std::string> precondition_failure(TableStrategy strategy, NodeId t, NodeId v) const;

  const Graph& graph() const { return g_; }
  NodeId source() const { return s_; }
  int bound() const { return d_; }
  const std::optional<Cycle>& cycle() const { return cycle_; }
  NodeSet must_pass_to(NodeId t) const;

 private:
  enum class TargetClass { kPlain, kEntrance, kCycle, kBehind, kNone };

  TargetClass target_class(NodeId t) const;
  int paths(NodeId v) const { return all_[static_cast<std::size_t>(v)]; }
  int short_paths(NodeId v) const { return short_[static_cast<std::size_t>(v)]; }
  int dist(NodeId v) const { return dist_[static_cast<std::size_t>(v)]; }
  bool on_cycle(NodeId v) const { return cycle_ && cycle_->members.contains(v); }
  // t ∈ R^1_d(G,s) ∩ R^1_d(G,s,u)
  bool single_short_path_via(NodeId t, NodeId u) const;

  PairwiseCaseResult dfs_row(NodeId t, NodeId v, bool adjusted) const;
  PairwiseCaseResult dfs_d_row(NodeId t, NodeId v) const;
  PairwiseCaseResult sigma_star_row(NodeId t, NodeId v) const;

  Graph g_;
  NodeId s_;
  int d_;
  int n_;
  PathProfile profile_;
  std::optional<Cycle> cycle_;
  NodeId entrance_ = -1;
  bool cycle_within_two_short_paths_ = false;  // K ⊆ R^2_d
  bool cycle_meets_two_short_paths_ = false;   // K ∩ R^2_d ≠ ∅
  std::vector<int> all_;
  std::vector<int> short_;
  std::vector<int> dist_;
};

PairwiseCaseResult xvt(TableStrategy strategy, const Graph& g, NodeId s, NodeId t, NodeId v, int d);

struct PairwiseTerm {
  NodeId v = 0;
  Rational probability;
  std::string label;  // table row, "must_pass", "behind_target" or "complement(<row>)"
};

struct PairwiseSum {
  Rational total;
  std::vector<PairwiseTerm> terms;
};

// Sum over v != t of E(X_vt). Nodes on every s-t path count 1, nodes that
// can only be reached through t count 0; other pairs use the table, or
// 1 - xvt(v, t) with roles swapped when only that orientation has a row.
PairwiseSum expected_pos_from_pairwise(TableStrategy strategy, const Graph& g, NodeId s, NodeId t, int d);

std::string pairwise_csv_header();
std::string pairwise_csv_row(const std::string& instance, TableStrategy strategy, NodeId t, NodeId v,
                             const PairwiseCaseResult& r);

}  // namespace hideseek

#endif  // HIDESEEK_ANALYSIS_H_
