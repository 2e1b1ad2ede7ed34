#include "hideseek/analysis.h"

#include <algorithm>
#include <sstream>

namespace hideseek {
namespace {

[[noreturn]] void violated(const std::string& clause) {
  throw Error(ErrorKind::kPreconditionViolated, "clause " + clause);
}

const Graph& checked_unicyclic(const Graph& g, NodeId s) {
  if (!g.has_node(s)) throw Error(ErrorKind::kNodeOutOfRange, "source " + std::to_string(s) + " not in graph");
  if (!is_connected(g)) violated("connected");
  if (cyclomatic_number(g) > 1) violated("at_most_one_cycle");
  return g;
}

PairwiseCaseResult row(TableStrategy s, const std::string& name, Rational p) {
  return {std::move(p), std::string(table_strategy_name(s)) + "." + name};
}

}  // namespace

Rational lemma1_expected_steps(const Graph& tree, NodeId s, NodeId t) {
  if (!is_tree(tree)) throw Error(ErrorKind::kNotATree, "graph is not a tree");
  if (!tree.has_node(s) || !tree.has_node(t)) throw Error(ErrorKind::kNodeOutOfRange, "endpoint not in tree");
  const int n = tree.num_nodes();
  const int dist = bfs_distances(tree, s)[static_cast<std::size_t>(t)];
  // Subtree below t: every node whose unique s-path contains t.
  PathProfile profile(tree, s);
  int m = 0;
  for (NodeId v : tree.nodes()) m += profile.count_through(v, t, n);
  return make_rational(n + dist - m, 2);
}

Rational palm_value(int n, int d) {
  if (n < 2 || d < 1 || d > n - 1) {
    throw Error(ErrorKind::kBadHeight, "palm value needs 1 <= d <= n-1 (n=" + std::to_string(n) +
                                           ", d=" + std::to_string(d) + ")");
  }
  return make_rational(n + d - 1, 2);
}

Rational hider_payoff(const BenefitFunction& a, int d, int n) {
  if (d < 0 || d > n - 1) throw Error(ErrorKind::kBadInput, "hiding depth outside [0, n-1]");
  return a(d) * make_rational(n + d - 1, 2);
}

Rational prop1_bound(int n, int d) {
  if (n < 2 || d < 1) throw Error(ErrorKind::kBadInput, "bound needs n >= 2 and d >= 1");
  Rational b = make_rational(9 * n, 16) + make_rational(13 * d - 11, 16);
  b.canonicalize();
  return b;
}

std::string_view table_strategy_name(TableStrategy s) {
  switch (s) {
    case TableStrategy::kDfs: return "dfs";
    case TableStrategy::kDfsD: return "dfs_d";
    case TableStrategy::kAdfs: return "adfs";
    case TableStrategy::kSigmaStar: return "sigma_star";
  }
  return "?";
}

TableStrategy parse_table_strategy(std::string_view id) {
  for (TableStrategy s : kTableStrategies) {
    if (table_strategy_name(s) == id) return s;
  }
  throw Error(ErrorKind::kBadInput, "no pairwise table for strategy '" + std::string(id) + "'");
}

bool in_table_universe(const Rational& p) {
  static const std::vector<Rational> universe = {
      make_rational(0),      make_rational(1, 3),  make_rational(3, 8),   make_rational(1, 2),
      make_rational(17, 32), make_rational(13, 24), make_rational(9, 16), make_rational(5, 8),
      make_rational(2, 3),   make_rational(11, 16), make_rational(3, 4),  make_rational(13, 16),
      make_rational(1)};
  return std::find(universe.begin(), universe.end(), p) != universe.end();
}

const std::vector<std::string>& table_rows(TableStrategy s) {
  static const std::vector<std::string> dfs = {
      "dfs.t_plain",           "dfs.t_entrance.v_single", "dfs.t_entrance.v_double",
      "dfs.t_cycle.v_cycle",   "dfs.t_behind.v_cycle",    "dfs.t_behind.v_behind"};
  static const std::vector<std::string> adfs = {
      "adfs.t_plain",          "adfs.t_entrance.v_single", "adfs.t_entrance.v_cycle",
      "adfs.t_entrance.v_behind", "adfs.t_cycle.v_cycle",  "adfs.t_behind.v_cycle",
      "adfs.t_behind.v_behind"};
  static const std::vector<std::string> dfs_d = {
      "dfs_d.v_far",
      "dfs_d.t_plain",
      "dfs_d.t_entrance.v_two_short",
      "dfs_d.t_entrance.v_single",
      "dfs_d.t_entrance.v_one_short.cycle_near",
      "dfs_d.t_entrance.v_one_short.cycle_far",
      "dfs_d.t_cycle.v_cycle",
      "dfs_d.t_behind.v_cycle.t_short_via_v",
      "dfs_d.t_behind.v_cycle.v_two_short",
      "dfs_d.t_behind.v_cycle.v_one_short",
      "dfs_d.t_behind.v_behind.cycle_near.base",
      "dfs_d.t_behind.v_behind.cycle_near.bonus",
      "dfs_d.t_behind.v_behind.cycle_far.base",
      "dfs_d.t_behind.v_behind.cycle_far.bonus"};
  static const std::vector<std::string> sigma = {
      "sigma_star.t_plain.v_near",
      "sigma_star.t_plain.v_far",
      "sigma_star.t_entrance.v_single_near",
      "sigma_star.t_entrance.v_one_short_double.cycle_near",
      "sigma_star.t_entrance.v_one_short_behind.cycle_far",
      "sigma_star.t_entrance.v_one_short_cycle.cycle_far",
      "sigma_star.t_entrance.v_two_short_cycle",
      "sigma_star.t_entrance.v_two_short_behind",
      "sigma_star.t_entrance.v_single_far",
      "sigma_star.t_entrance.v_cycle_far",
      "sigma_star.t_entrance.v_behind_far",
      "sigma_star.t_cycle.v_cycle",
      "sigma_star.t_cycle.v_cycle_far",
      "sigma_star.t_behind.v_cycle.t_short_via_v",
      "sigma_star.t_behind.v_cycle.v_two_short",
      "sigma_star.t_behind.v_cycle.v_one_short",
      "sigma_star.t_behind.v_cycle.v_far",
      "sigma_star.t_behind.v_behind.cycle_near.base",
      "sigma_star.t_behind.v_behind.cycle_near.bonus",
      "sigma_star.t_behind.v_behind.cycle_far.base",
      "sigma_star.t_behind.v_behind.cycle_far.bonus",
      "sigma_star.t_behind.v_behind_far"};
  switch (s) {
    case TableStrategy::kDfs: return dfs;
    case TableStrategy::kDfsD: return dfs_d;
    case TableStrategy::kAdfs: return adfs;
    case TableStrategy::kSigmaStar: return sigma;
  }
  return dfs;
}

PairwiseTables::PairwiseTables(const Graph& g, NodeId s, int d)
    : g_(checked_unicyclic(g, s)), s_(s), d_(d), n_(g.num_nodes()), profile_(g, s), cycle_(find_cycle(g)) {
  all_.resize(static_cast<std::size_t>(g.universe()));
  short_.resize(all_.size());
  for (NodeId v : g.nodes()) {
    all_[static_cast<std::size_t>(v)] = profile_.count(v, n_);
    short_[static_cast<std::size_t>(v)] = profile_.count(v, d);
  }
  dist_ = bfs_distances(g, s);
  if (cycle_) {
    entrance_ = entrance(g, *cycle_, s);
    cycle_within_two_short_paths_ = true;
    for (NodeId k : cycle_->members) {
      if (short_paths(k) == 2) {
        cycle_meets_two_short_paths_ = true;
      } else {
        cycle_within_two_short_paths_ = false;
      }
    }
  }
}

NodeSet PairwiseTables::must_pass_to(NodeId t) const { return must_pass(g_, s_, t); }

bool PairwiseTables::single_short_path_via(NodeId t, NodeId u) const {
  return short_paths(t) == 1 && profile_.count_through(t, u, d_) == 1;
}

PairwiseTables::TargetClass PairwiseTables::target_class(NodeId t) const {
  const bool via_entrance = cycle_ && profile_.count_through(t, entrance_, n_) == 1;
  if (paths(t) == 1 && !via_entrance) return TargetClass::kPlain;
  if (via_entrance) return TargetClass::kEntrance;
  if (on_cycle(t)) return TargetClass::kCycle;
  if (paths(t) == 2) return TargetClass::kBehind;
  return TargetClass::kNone;
}

std::optional<std::string> PairwiseTables::precondition_failure(TableStrategy strategy, NodeId t, NodeId v) const {
  if (!g_.has_node(t) || !g_.has_node(v)) return "nodes_in_graph";
  if (!(g_.degree(t) == 1 || on_cycle(t))) return "t_leaf_or_on_cycle";
  if (v == t) return "v_distinct_from_t";
  if (must_pass_to(t).contains(v)) return "v_not_on_every_path_to_t";
  if (must_pass_to(v).contains(t)) return "t_not_on_every_path_to_v";
  if (strategy == TableStrategy::kDfsD || strategy == TableStrategy::kSigmaStar) {
    if (d_ < 1) return "d_positive";
    if (dist(t) > d_) return "t_within_d";
  }
  if (strategy == TableStrategy::kDfsD && cycle_ && !cycle_meets_two_short_paths_) {
    return "cycle_meets_two_short_paths";
  }
  return std::nullopt;
}

PairwiseCaseResult PairwiseTables::xvt(TableStrategy strategy, NodeId t, NodeId v) const {
  if (auto failed = precondition_failure(strategy, t, v)) violated(*failed);
  switch (strategy) {
    case TableStrategy::kDfs: return dfs_row(t, v, false);
    case TableStrategy::kAdfs: return dfs_row(t, v, true);
    case TableStrategy::kDfsD: return dfs_d_row(t, v);
    case TableStrategy::kSigmaStar: return sigma_star_row(t, v);
  }
  violated("known_strategy");
}

PairwiseCaseResult PairwiseTables::dfs_row(NodeId t, NodeId v, bool adjusted) const {
  const TableStrategy s = adjusted ? TableStrategy::kAdfs : TableStrategy::kDfs;
  const Rational half(1, 2);
  switch (target_class(t)) {
    case TargetClass::kPlain:
      return row(s, "t_plain", half);
    case TargetClass::kEntrance:
      if (paths(v) == 1) return row(s, "t_entrance.v_single", half);
      if (!adjusted && paths(v) == 2) return row(s, "t_entrance.v_double", make_rational(2, 3));
      if (adjusted && on_cycle(v)) return row(s, "t_entrance.v_cycle", make_rational(2, 3));
      if (adjusted && paths(v) == 2) return row(s, "t_entrance.v_behind", make_rational(1, 3));
      break;
    case TargetClass::kCycle:
      if (on_cycle(v)) return row(s, "t_cycle.v_cycle", half);
      break;
    case TargetClass::kBehind:
      if (on_cycle(v)) return row(s, "t_behind.v_cycle", make_rational(3, 4));
      if (paths(v) == 2) return row(s, "t_behind.v_behind", half);
      break;
    case TargetClass::kNone:
      break;
  }
  violated("table_row_for_pair");
}

PairwiseCaseResult PairwiseTables::dfs_d_row(NodeId t, NodeId v) const {
  const TableStrategy s = TableStrategy::kDfsD;
  const Rational half(1, 2);
  if (dist(v) > d_) return row(s, "v_far", Rational(0));
  switch (target_class(t)) {
    case TargetClass::kPlain:
      return row(s, "t_plain", half);
    case TargetClass::kEntrance:
      if (short_paths(v) == 2) return row(s, "t_entrance.v_two_short", make_rational(2, 3));
      if (short_paths(v) == 1 && paths(v) == 1) return row(s, "t_entrance.v_single", half);
      if (short_paths(v) == 1 && paths(v) == 2) {
        return cycle_within_two_short_paths_ ? row(s, "t_entrance.v_one_short.cycle_near", make_rational(2, 3))
                                             : row(s, "t_entrance.v_one_short.cycle_far", half);
      }
      break;
    case TargetClass::kCycle:
      if (on_cycle(v)) return row(s, "t_cycle.v_cycle", half);
      break;
    case TargetClass::kBehind:
      if (on_cycle(v)) {
        if (single_short_path_via(t, v)) return row(s, "t_behind.v_cycle.t_short_via_v", Rational(1));
        if (short_paths(v) == 2) return row(s, "t_behind.v_cycle.v_two_short", make_rational(3, 4));
        if (short_paths(v) == 1) return row(s, "t_behind.v_cycle.v_one_short", half);
        break;
      }
      if (paths(v) == 2) {
        if (cycle_within_two_short_paths_) {
          bool bonus = short_paths(v) == 2 && single_short_path_via(t, exit(g_, *cycle_, s_, v));
          return bonus ? row(s, "t_behind.v_behind.cycle_near.bonus", make_rational(5, 8))
                       : row(s, "t_behind.v_behind.cycle_near.base", half);
        }
        bool bonus = short_paths(t) == 1 && short_paths(v) == 2;
        return bonus ? row(s, "t_behind.v_behind.cycle_far.bonus", make_rational(3, 4))
                     : row(s, "t_behind.v_behind.cycle_far.base", half);
      }
      break;
    case TargetClass::kNone:
      break;
  }
  violated("table_row_for_pair");
}

PairwiseCaseResult PairwiseTables::sigma_star_row(NodeId t, NodeId v) const {
  const TableStrategy s = TableStrategy::kSigmaStar;
  const Rational half(1, 2);
  const bool near = dist(v) <= d_;
  switch (target_class(t)) {
    case TargetClass::kPlain:
      return near ? row(s, "t_plain.v_near", half) : row(s, "t_plain.v_far", make_rational(3, 8));
    case TargetClass::kEntrance: {
      const bool one_short = short_paths(v) == 1;
      const bool two_short = short_paths(v) == 2;
      if (one_short && paths(v) == 1) return row(s, "t_entrance.v_single_near", half);
      if (one_short && paths(v) == 2 && cycle_within_two_short_paths_) {
        return row(s, "t_entrance.v_one_short_double.cycle_near", make_rational(13, 24));
      }
      if (one_short && paths(v) == 2 && !on_cycle(v) && !cycle_within_two_short_paths_) {
        return row(s, "t_entrance.v_one_short_behind.cycle_far", half);
      }
      if (one_short && on_cycle(v) && !cycle_within_two_short_paths_) {
        return row(s, "t_entrance.v_one_short_cycle.cycle_far", make_rational(5, 8));
      }
      if (two_short && on_cycle(v)) return row(s, "t_entrance.v_two_short_cycle", make_rational(2, 3));
      if (two_short) return row(s, "t_entrance.v_two_short_behind", make_rational(13, 24));
      if (paths(v) == 1 && !one_short) return row(s, "t_entrance.v_single_far", make_rational(3, 8));
      if (on_cycle(v) && !near) return row(s, "t_entrance.v_cycle_far", half);
      if (paths(v) == 2 && !near && !on_cycle(v)) return row(s, "t_entrance.v_behind_far", make_rational(3, 8));
      break;
    }
    case TargetClass::kCycle:
      if (on_cycle(v)) {
        // Beyond d only DFS and aDFS can reach v first: 3/8 (1/2 + 1/2).
        return near ? row(s, "t_cycle.v_cycle", half) : row(s, "t_cycle.v_cycle_far", make_rational(3, 8));
      }
      break;
    case TargetClass::kBehind:
      if (on_cycle(v)) {
        if (single_short_path_via(t, v)) return row(s, "t_behind.v_cycle.t_short_via_v", make_rational(13, 16));
        if (short_paths(v) == 2) return row(s, "t_behind.v_cycle.v_two_short", make_rational(3, 4));
        if (short_paths(v) == 1) return row(s, "t_behind.v_cycle.v_one_short", make_rational(11, 16));
        return row(s, "t_behind.v_cycle.v_far", make_rational(9, 16));
      }
      if (paths(v) == 2) {
        if (!near) return row(s, "t_behind.v_behind_far", make_rational(3, 8));
        if (cycle_within_two_short_paths_) {
          bool bonus = short_paths(v) == 2 && single_short_path_via(t, exit(g_, *cycle_, s_, v));
          return bonus ? row(s, "t_behind.v_behind.cycle_near.bonus", make_rational(17, 32))
                       : row(s, "t_behind.v_behind.cycle_near.base", half);
        }
        bool bonus = short_paths(t) == 1 && short_paths(v) == 2;
        return bonus ? row(s, "t_behind.v_behind.cycle_far.bonus", make_rational(9, 16))
                     : row(s, "t_behind.v_behind.cycle_far.base", half);
      }
      break;
    case TargetClass::kNone:
      break;
  }
  violated("table_row_for_pair");
}

PairwiseCaseResult xvt(TableStrategy strategy, const Graph& g, NodeId s, NodeId t, NodeId v, int d) {
  return PairwiseTables(g, s, d).xvt(strategy, t, v);
}

PairwiseSum expected_pos_from_pairwise(TableStrategy strategy, const Graph& g, NodeId s, NodeId t, int d) {
  PairwiseTables tables(g, s, d);
  if (!g.has_node(t)) throw Error(ErrorKind::kNodeOutOfRange, "target not in graph");
  PairwiseSum sum;
  const NodeSet on_every_path = tables.must_pass_to(t);
  for (NodeId v : g.nodes()) {
    if (v == t) continue;
    PairwiseTerm term{v, Rational(0), ""};
    if (on_every_path.contains(v)) {
      term.probability = 1;
      term.label = "must_pass";
    } else if (tables.must_pass_to(v).contains(t)) {
      term.label = "behind_target";
    } else {
      std::optional<std::string> failed = tables.precondition_failure(strategy, t, v);
      if (failed) violated(*failed + " (t=" + std::to_string(t) + ", v=" + std::to_string(v) + ")");
      try {
        PairwiseCaseResult r = tables.xvt(strategy, t, v);
        term.probability = r.probability;
        term.label = r.label;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kPreconditionViolated) throw;
        // Only the swapped orientation may have a row.
        if (tables.precondition_failure(strategy, v, t)) throw;
        PairwiseCaseResult r = tables.xvt(strategy, v, t);
        term.probability = 1 - r.probability;
        term.label = "complement(" + r.label + ")";
      }
    }
    sum.total += term.probability;
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

std::string pairwise_csv_header() { return "instance,strategy,t,v,label,probability"; }

std::string pairwise_csv_row(const std::string& instance, TableStrategy strategy, NodeId t, NodeId v,
                             const PairwiseCaseResult& r) {
  std::ostringstream os;
  os << instance << ',' << table_strategy_name(strategy) << ',' << t << ',' << v << ',' << r.label << ','
     << to_fraction_string(r.probability);
  return os.str();
}

}  // namespace hideseek
