#ifndef HIDESEEK_VERIFY_H_
#define HIDESEEK_VERIFY_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hideseek/corpus.h"
#include "hideseek/hider.h"

namespace hideseek {

// Outcome of one verification suite. `lines` is the human-readable report;
// the first counterexample, if any, is kept in machine-readable form.
struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::uint64_t checks = 0;
  std::vector<std::string> lines;
  nlohmann::ordered_json first_failure;  // null when passed
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  void note(std::string line) { lines.push_back(std::move(line)); }
  void fail(nlohmann::ordered_json counterexample, std::string line);
  nlohmann::ordered_json to_json() const;
};

// Oracle DFS expected position against the closed form for every labelled
// tree with min_n..max_n nodes and every target.
SuiteReport verify_lemma1(int min_n, int max_n, int workers = 0);

// Every battery policy against crown-uniform hiding on palm(n, d) for
// 2 <= n <= max_n, 1 <= d <= n-1.
SuiteReport verify_lemma2(int max_n);

// Oracle DFS on example1(n, d) for each pair against 2/3(n + d/2 - 1), plus a
// Monte Carlo check at (mc_n, mc_d) when trials > 0.
SuiteReport verify_example1(const std::vector<std::pair<int, int>>& exact_cases, int mc_n, int mc_d,
                            std::uint64_t trials, std::uint64_t seed);

// Oracle DFS_d on example2(n, d) against 2/3(n + 1/2).
SuiteReport verify_example2(const std::vector<std::pair<int, int>>& cases);

// xvt against the oracle for every admissible pair, strategy and corpus
// entry; details["coverage"] maps each row label to hit/mismatch counts.
SuiteReport verify_tables(const std::vector<CorpusEntry>& corpus);

// Rows whose guard requires every cycle node to have two short paths. The
// cycle entrance always has exactly one path, so these never fire.
bool table_row_unreachable(const std::string& label);

// sigma_star bound on every corpus entry and target within d, and the
// mixture identity for every pair.
SuiteReport verify_prop1(const std::vector<CorpusEntry>& corpus);

// Hider best response against DFS over all trees, palm-crown attainment and
// battery ties, for one (n, A).
SuiteReport verify_equilibrium(int n, const BenefitFunction& a);

// D* for A = rho^x on n nodes equals `expected`.
SuiteReport verify_d_star(const BenefitFunction& a, int n, const std::vector<int>& expected);

// DFS_n and aDFS against DFS at every observation reachable on every tree
// with 2..max_n nodes.
SuiteReport verify_equivalence(int max_n, int workers = 0);

}  // namespace hideseek

#endif  // HIDESEEK_VERIFY_H_
