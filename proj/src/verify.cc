#include "hideseek/verify.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "hideseek/analysis.h"
#include "hideseek/graph_io.h"
#include "hideseek/oracle.h"
#include "hideseek/parallel.h"
#include "hideseek/simulate.h"

namespace hideseek {
namespace {

using Json = nlohmann::ordered_json;

std::string frac(const Rational& r) { return to_fraction_string(r); }

// Failure found by one worker, tagged with the position that produced it so
// the reported counterexample does not depend on scheduling.
struct IndexedFailure {
  std::uint64_t index = 0;
  Json counterexample;
  std::string line;
};

struct ChunkResult {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::optional<IndexedFailure> first;

  void failed(std::uint64_t index, Json counterexample, std::string line) {
    ++failures;
    if (!first || index < first->index) first = IndexedFailure{index, std::move(counterexample), std::move(line)};
  }
};

void merge_chunks(SuiteReport& report, const std::vector<ChunkResult>& chunks) {
  std::optional<IndexedFailure> first;
  std::uint64_t failures = 0;
  for (const ChunkResult& c : chunks) {
    report.checks += c.checks;
    failures += c.failures;
    if (c.first && (!first || c.first->index < first->index)) first = c.first;
  }
  if (first) {
    report.fail(first->counterexample, first->line);
    report.note(std::to_string(failures) + " failing checks in total");
  }
}

bool same_distribution(const Distribution& a, const Distribution& b) {
  auto by_node = [](const Weighted& x, const Weighted& y) { return x.node < y.node; };
  Distribution x = a, y = b;
  std::sort(x.begin(), x.end(), by_node);
  std::sort(y.begin(), y.end(), by_node);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].node != y[i].node || x[i].probability != y[i].probability) return false;
  }
  return true;
}

Json distribution_json(const Distribution& d) {
  Json out = Json::array();
  for (const Weighted& w : d) out.push_back({w.node, frac(w.probability)});
  return out;
}

bool table_row_derived(const std::string& label) {
  return label == "sigma_star.t_cycle.v_cycle_far" || label == "sigma_star.t_behind.v_behind_far";
}

}  // namespace

void SuiteReport::fail(Json counterexample, std::string line) {
  if (passed) first_failure = std::move(counterexample);
  passed = false;
  lines.push_back("FAIL " + line);
}

Json SuiteReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["passed"] = passed;
  out["checks"] = checks;
  out["lines"] = lines;
  out["first_failure"] = first_failure;
  out["details"] = details;
  return out;
}

SuiteReport verify_lemma1(int min_n, int max_n, int workers) {
  SuiteReport report;
  report.suite = "lemma1";
  if (workers <= 0) workers = worker_count();
  const SeekingStrategy dfs = make_strategy("dfs", 1);
  for (int n = std::max(min_n, 2); n <= max_n; ++n) {
    LabeledTrees trees(n);
    std::vector<ChunkResult> chunks(static_cast<std::size_t>(workers));
    parallel_chunks(trees.size(), workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
      ChunkResult& c = chunks[static_cast<std::size_t>(w)];
      for (std::uint64_t i = begin; i < end; ++i) {
        Graph tree = trees.at(i);
        VisitOrderTable table = enumerate_visit_order(dfs, tree);
        for (NodeId t : tree.nodes()) {
          ++c.checks;
          Rational exact = table.expected_pos(t);
          Rational closed = lemma1_expected_steps(tree, kSource, t);
          if (exact != closed) {
            c.failed(i * kMaxNodes + static_cast<std::uint64_t>(t),
                     {{"graph", graph_to_json(tree, t)}, {"oracle", frac(exact)}, {"closed_form", frac(closed)}},
                     "n=" + std::to_string(n) + " tree " + std::to_string(i) + " t=" + std::to_string(t) +
                         ": oracle " + frac(exact) + " vs closed form " + frac(closed));
          }
        }
      }
    });
    std::uint64_t before = report.checks;
    merge_chunks(report, chunks);
    report.note("n=" + std::to_string(n) + ": " + std::to_string(trees.size()) + " trees, " +
                std::to_string(report.checks - before) + " tree x target checks");
  }
  return report;
}

SuiteReport verify_lemma2(int max_n) {
  SuiteReport report;
  report.suite = "lemma2";
  const std::size_t policies = policy_battery(1).size();
  for (int n = 2; n <= max_n; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      const Rational expected = palm_value(n, d);
      for (const BatteryResult& r : adversarial_policy_battery(n, d)) {
        ++report.checks;
        if (r.expected_pos != expected) {
          report.fail({{"n", n}, {"d", d}, {"strategy", r.strategy}, {"oracle", frac(r.expected_pos)},
                       {"claimed", frac(expected)}},
                      "palm(" + std::to_string(n) + "," + std::to_string(d) + ") " + r.strategy + ": " +
                          frac(r.expected_pos) + " vs " + frac(expected));
        }
      }
    }
  }
  report.details["policies"] = policies;
  report.note(std::to_string(report.checks) + " (palm, policy) pairs over n <= " + std::to_string(max_n) + " with " +
              std::to_string(policies) + " policies");
  return report;
}

SuiteReport verify_example1(const std::vector<std::pair<int, int>>& exact_cases, int mc_n, int mc_d,
                            std::uint64_t trials, std::uint64_t seed) {
  SuiteReport report;
  report.suite = "example1";
  const SeekingStrategy dfs = make_strategy("dfs", 1);
  auto claim = [](int n, int d) -> Rational { return make_rational(2, 3) * (Rational(n) + make_rational(d, 2) - 1); };
  for (auto [n, d] : exact_cases) {
    Instance in = example1_graph(n, d);
    Rational exact = exact_expected_pos(dfs, in.graph, in.target);
    ++report.checks;
    std::string line = "example1(" + std::to_string(n) + "," + std::to_string(d) + ") DFS exact " + frac(exact) +
                       ", claimed " + frac(claim(n, d));
    if (exact != claim(n, d)) {
      report.fail({{"graph", graph_to_json(in.graph, in.target)}, {"oracle", frac(exact)}, {"claimed", frac(claim(n, d))}},
                  line);
    } else {
      report.note(line);
    }
  }
  if (trials > 0) {
    Instance in = example1_graph(mc_n, mc_d);
    MonteCarloResult mc = monte_carlo(dfs, HiderStrategy::pure(in.graph, in.target), trials, seed);
    ++report.checks;
    std::ostringstream line;
    line << "example1(" << mc_n << "," << mc_d << ") DFS Monte Carlo mean " << mc.mean << " stderr " << mc.stderr_mean
         << " over " << trials << " trials, claimed " << frac(claim(mc_n, mc_d));
    report.details["monte_carlo"] = {{"n", mc_n}, {"d", mc_d}, {"trials", trials}, {"seed", seed},
                                     {"mean", mc.mean}, {"stderr", mc.stderr_mean}};
    if (!mc.covers(claim(mc_n, mc_d), 4.0)) {
      report.fail(report.details["monte_carlo"], line.str());
    } else {
      report.note(line.str() + " (within 4 stderr)");
    }
  }
  return report;
}

SuiteReport verify_example2(const std::vector<std::pair<int, int>>& cases) {
  SuiteReport report;
  report.suite = "example2";
  for (auto [n, d] : cases) {
    Instance in = example2_graph(n, d);
    Rational exact = exact_expected_pos(make_strategy("dfs_d", d), in.graph, in.target);
    Rational claim = make_rational(2, 3) * (Rational(n) + make_rational(1, 2));
    ++report.checks;
    std::string line = "example2(" + std::to_string(n) + "," + std::to_string(d) + ") DFS_d exact " + frac(exact) +
                       ", claimed " + frac(claim);
    if (exact != claim) {
      report.fail({{"graph", graph_to_json(in.graph, in.target)}, {"oracle", frac(exact)}, {"claimed", frac(claim)}},
                  line);
    } else {
      report.note(line);
    }
  }
  return report;
}

bool table_row_unreachable(const std::string& label) { return label.find("cycle_near") != std::string::npos; }

SuiteReport verify_tables(const std::vector<CorpusEntry>& corpus) {
  SuiteReport report;
  report.suite = "tables";
  struct RowStats {
    std::uint64_t hits = 0;
    std::uint64_t mismatches = 0;
    std::string example;
  };
  std::map<std::string, RowStats> stats;
  std::map<std::string, std::uint64_t> refused;
  std::map<std::string, std::uint64_t> by_complement;
  for (const CorpusEntry& entry : corpus) {
    PairwiseTables tables(entry.graph, kSource, entry.d);
    for (TableStrategy strategy : kTableStrategies) {
      VisitOrderTable oracle =
          enumerate_visit_order(make_strategy(std::string(table_strategy_name(strategy)), entry.d), entry.graph);
      for (NodeId t : entry.graph.nodes()) {
        for (NodeId v : entry.graph.nodes()) {
          if (tables.precondition_failure(strategy, t, v)) continue;
          PairwiseCaseResult r;
          try {
            r = tables.xvt(strategy, t, v);
          } catch (const Error&) {
            bool swapped = !tables.precondition_failure(strategy, v, t);
            if (swapped) {
              try {
                tables.xvt(strategy, v, t);
              } catch (const Error&) {
                swapped = false;
              }
            }
            ++(swapped ? by_complement : refused)[std::string(table_strategy_name(strategy))];
            continue;
          }
          ++report.checks;
          RowStats& row = stats[r.label];
          ++row.hits;
          const Rational& exact = oracle.visit_prob(v, t);
          if (!in_table_universe(r.probability)) {
            report.fail({{"label", r.label}, {"value", frac(r.probability)}}, "value outside table universe");
          }
          if (exact != r.probability) {
            ++row.mismatches;
            std::string where = entry.name + " d=" + std::to_string(entry.d) + " t=" + std::to_string(t) +
                                " v=" + std::to_string(v) + ": table " + frac(r.probability) + ", oracle " +
                                frac(exact);
            if (row.example.empty()) row.example = where;
            if (report.passed) {
              report.first_failure = {{"instance", entry.name}, {"graph", graph_to_json(entry.graph, t)},
                                      {"d", entry.d},           {"strategy", table_strategy_name(strategy)},
                                      {"t", t},                 {"v", v},
                                      {"label", r.label},       {"table", frac(r.probability)},
                                      {"oracle", frac(exact)}};
            }
            report.passed = false;
          }
        }
      }
    }
  }
  Json coverage = Json::object();
  std::uint64_t unfired = 0;
  for (TableStrategy strategy : kTableStrategies) {
    for (const std::string& label : table_rows(strategy)) {
      const RowStats& row = stats[label];
      const bool derived = table_row_derived(label);
      const bool unreachable = table_row_unreachable(label);
      coverage[label] = {{"hits", row.hits}, {"mismatches", row.mismatches}, {"derived", derived},
                         {"unreachable", unreachable}};
      std::ostringstream line;
      line << (row.mismatches ? "FAIL " : (row.hits || derived) ? "ok   " : "MISS ") << label << " hits=" << row.hits
           << " mismatches=" << row.mismatches;
      if (derived) line << " [derived row]";
      if (unreachable) line << " [guard never holds]";
      if (!row.example.empty()) line << " e.g. " << row.example;
      report.note(line.str());
      if (!derived && row.hits == 0) ++unfired;
    }
  }
  for (const auto& [strategy, count] : by_complement) {
    report.note(strategy + ": " + std::to_string(count) + " admissible pairs covered only by the swapped pair's row");
  }
  for (const auto& [strategy, count] : refused) {
    report.note(strategy + ": " + std::to_string(count) + " admissible pairs with no row in either listing");
  }
  if (unfired > 0) {
    report.passed = false;
    report.note("FAIL " + std::to_string(unfired) + " table rows never exercised");
  }
  report.details["coverage"] = coverage;
  report.details["corpus_size"] = corpus.size();
  return report;
}

SuiteReport verify_prop1(const std::vector<CorpusEntry>& corpus) {
  SuiteReport report;
  report.suite = "prop1";
  Rational worst_slack;
  bool have_slack = false;
  for (const CorpusEntry& entry : corpus) {
    const int n = entry.graph.num_nodes();
    VisitOrderTable star = enumerate_visit_order(sigma_star(entry.d), entry.graph);
    VisitOrderTable dfs = enumerate_visit_order(make_strategy("dfs", entry.d), entry.graph);
    VisitOrderTable adfs = enumerate_visit_order(make_strategy("adfs", entry.d), entry.graph);
    VisitOrderTable dfs_d = enumerate_visit_order(make_strategy("dfs_d", entry.d), entry.graph);
    const Rational bound = prop1_bound(n, entry.d);
    std::vector<int> dist = bfs_distances(entry.graph, kSource);
    for (NodeId t : entry.graph.nodes()) {
      for (NodeId v : entry.graph.nodes()) {
        if (v == t) continue;
        ++report.checks;
        Rational mix = make_rational(3, 8) * dfs.visit_prob(v, t) + make_rational(3, 8) * adfs.visit_prob(v, t) +
                       make_rational(1, 4) * dfs_d.visit_prob(v, t);
        if (mix != star.visit_prob(v, t)) {
          report.fail({{"instance", entry.name}, {"t", t}, {"v", v}, {"mixture", frac(star.visit_prob(v, t))},
                       {"combination", frac(mix)}},
                      entry.name + " t=" + std::to_string(t) + " v=" + std::to_string(v) + ": identity broken");
        }
      }
      if (dist[static_cast<std::size_t>(t)] > entry.d) continue;
      ++report.checks;
      Rational pos = star.expected_pos(t);
      Rational slack = bound - pos;
      if (!have_slack || slack < worst_slack) {
        worst_slack = slack;
        have_slack = true;
        report.details["tightest"] = {{"instance", entry.name}, {"t", t}, {"d", entry.d},
                                      {"expected_pos", frac(pos)}, {"bound", frac(bound)}};
      }
      if (pos > bound) {
        report.fail({{"instance", entry.name}, {"graph", graph_to_json(entry.graph, t)}, {"d", entry.d},
                     {"expected_pos", frac(pos)}, {"bound", frac(bound)}},
                    entry.name + " t=" + std::to_string(t) + ": " + frac(pos) + " exceeds " + frac(bound));
      }
    }
  }
  report.note(std::to_string(corpus.size()) + " corpus graphs, " + std::to_string(report.checks) +
              " identity and bound checks");
  if (have_slack) report.note("smallest slack " + frac(worst_slack) + " at " + report.details["tightest"].dump());
  return report;
}

SuiteReport verify_equilibrium(int n, const BenefitFunction& a) {
  SuiteReport report;
  report.suite = "equilibrium";
  const std::vector<int> depths = d_star(a, n);
  const Rational value = hider_payoff(a, depths.front(), n);
  const std::string tag = "n=" + std::to_string(n) + " A=" + a.describe();
  Json dstar = Json::array();
  for (int d : depths) dstar.push_back(d);
  report.details["d_star"] = dstar;
  report.details["claimed_value"] = frac(value);

  BestResponse best = best_response_hider(n, a, make_strategy("dfs", 1));
  ++report.checks;
  report.details["best_response"] = {{"graph", graph_to_json(best.graph, best.node)},
                                     {"payoff", frac(best.payoff)},
                                     {"candidates", best.candidates}};
  std::string line = tag + ": best response against DFS " + frac(best.payoff) + ", claimed A(d*)(n+d*-1)/2 = " +
                     frac(value) + " with D* = " + dstar.dump();
  if (best.payoff != value) {
    report.fail({{"n", n}, {"benefit", a.to_json()}, {"best_response", report.details["best_response"]},
                 {"claimed", frac(value)}},
                line);
  } else {
    report.note(line);
  }

  for (int d : depths) {
    ++report.checks;
    if (d < 1) {
      report.fail({{"n", n}, {"benefit", a.to_json()}, {"d_star", d}},
                  tag + ": no palm of height 0 exists; hiding at the source gives position 0");
      continue;
    }
    HiderStrategy crown = palm_crown_mixed(n, d);
    for (const SeekingStrategy& seeker : policy_battery(d)) {
      ++report.checks;
      Rational payoff = a(d) * exact_expected_pos(seeker, crown);
      if (payoff != value) {
        report.fail({{"n", n}, {"benefit", a.to_json()}, {"d", d}, {"strategy", seeker.id()}, {"payoff", frac(payoff)},
                     {"claimed", frac(value)}},
                    tag + " palm crown d=" + std::to_string(d) + " vs " + seeker.id() + ": " + frac(payoff));
      }
    }
    report.note(tag + ": palm crown of height " + std::to_string(d) + " checked against " +
                std::to_string(policy_battery(d).size()) + " seeker policies");
  }
  return report;
}

SuiteReport verify_d_star(const BenefitFunction& a, int n, const std::vector<int>& expected) {
  SuiteReport report;
  report.suite = "d_star";
  std::vector<int> got = d_star(a, n);
  ++report.checks;
  Json g = got, e = expected;
  std::string line = "D* for n=" + std::to_string(n) + " A=" + a.describe() + " is " + g.dump();
  if (got != expected) {
    report.fail({{"n", n}, {"benefit", a.to_json()}, {"d_star", g}, {"expected", e}}, line + ", expected " + e.dump());
  } else {
    report.note(line);
  }
  return report;
}

SuiteReport verify_equivalence(int max_n, int workers) {
  SuiteReport report;
  report.suite = "equivalence";
  if (workers <= 0) workers = worker_count();
  for (int n = 2; n <= max_n; ++n) {
    LabeledTrees trees(n);
    std::vector<ChunkResult> chunks(static_cast<std::size_t>(workers));
    parallel_chunks(trees.size(), workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
      ChunkResult& c = chunks[static_cast<std::size_t>(w)];
      for (std::uint64_t i = begin; i < end; ++i) {
        Graph tree = trees.at(i);
        std::function<void(const Observation&)> walk = [&](const Observation& obs) {
          if (obs.complete()) return;
          Distribution dfs = dfs_next(obs);
          Distribution bounded = dfs_d_next(obs, n);
          Distribution adjusted = adfs_next(obs);
          c.checks += 2;
          if (!same_distribution(dfs, bounded) || !same_distribution(dfs, adjusted)) {
            c.failed(i, {{"graph", graph_to_json(tree)}, {"visited", obs.visited()}, {"dfs", distribution_json(dfs)},
                         {"dfs_n", distribution_json(bounded)}, {"adfs", distribution_json(adjusted)}},
                     "tree " + std::to_string(i) + " on " + std::to_string(n) + " nodes disagrees");
          }
          for (NodeId v : obs.frontier()) {
            Observation next = obs;
            next.advance(tree, v);
            walk(next);
          }
        };
        walk(Observation::initial(tree));
      }
    });
    std::uint64_t before = report.checks;
    merge_chunks(report, chunks);
    report.note("n=" + std::to_string(n) + ": " + std::to_string(trees.size()) + " trees, " +
                std::to_string((report.checks - before) / 2) + " observations");
  }
  return report;
}

}  // namespace hideseek
