// hideseek: generate instances, evaluate seeking strategies exactly, in closed
// form or by simulation, and run the verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hideseek/analysis.h"
#include "hideseek/corpus.h"
#include "hideseek/graph_io.h"
#include "hideseek/hider.h"
#include "hideseek/oracle.h"
#include "hideseek/parallel.h"
#include "hideseek/simulate.h"
#include "hideseek/verify.h"
#include "hideseek/version.h"

namespace {

using namespace hideseek;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::kBadInput, "cannot write " + path);
    out << text;
  }
};

struct GenArgs {
  std::string kind;
  int n = 0;
  int d = 1;
  std::optional<std::uint64_t> index;
  std::string out;
};

struct EvalArgs {
  std::string graph;
  std::string strategy = "dfs";
  std::optional<int> target;
  std::string mode = "exact";
  int d = 1;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
};

struct VerifyArgs {
  std::string suite;
  int min_n = 3;
  int max_n = 0;
  int n = 6;
  std::string benefit = "step:3";
  std::string corpus = "default";
  std::string expect;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string report;
};

struct PairwiseArgs {
  std::string graph;
  std::string strategy = "all";
  int d = 1;
  std::optional<int> target;
  std::string out;
};

struct BatchArgs {
  std::string config;
  std::string out;
};

std::string instance_name(const std::string& path) {
  std::string name = path.substr(path.find_last_of('/') + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos) name.resize(dot);
  return name;
}

int cmd_gen(const GenArgs& a) {
  Json doc;
  if (a.kind == "palm") {
    doc = graph_to_json(palm_tree(a.n, a.d), a.n - 1);
    doc["crown"] = palm_crown(a.n, a.d).to_vector();
  } else if (a.kind == "example1") {
    Instance in = example1_graph(a.n, a.d);
    doc = graph_to_json(in.graph, in.target);
  } else if (a.kind == "example2") {
    Instance in = example2_graph(a.n, a.d);
    doc = graph_to_json(in.graph, in.target);
  } else if (a.kind == "tree-enum") {
    LabeledTrees trees = all_trees(a.n);
    if (a.index) {
      if (*a.index >= trees.size()) throw Error(ErrorKind::kBadInput, "tree index out of range");
      doc = graph_to_json(trees.at(*a.index));
      doc["prufer"] = trees.prufer_code(*a.index);
    } else {
      constexpr std::uint64_t kListLimit = 20000;
      if (trees.size() > kListLimit) {
        throw Error(ErrorKind::kTooLarge, std::to_string(trees.size()) + " trees; pass --index to pick one");
      }
      doc["n"] = a.n;
      doc["count"] = trees.size();
      doc["trees"] = Json::array();
      for (std::uint64_t i = 0; i < trees.size(); ++i) doc["trees"].push_back(graph_to_json(trees.at(i)));
    }
  } else {
    throw Error(ErrorKind::kBadInput, "unknown generator '" + a.kind + "'");
  }
  Output{a.out}.write(doc.dump(2) + "\n");
  return kExitOk;
}

struct EvalRow {
  std::string instance;
  std::string strategy;
  NodeId target = 0;
  std::string mode;
  int d = 1;
  std::optional<Rational> exact;
  std::optional<MonteCarloResult> mc;
  std::string method;
};

EvalRow evaluate(const std::string& instance, const Graph& g, NodeId target, const std::string& strategy_id,
                 const std::string& mode, int d, std::uint64_t trials, std::uint64_t seed) {
  if (!g.has_node(target)) throw Error(ErrorKind::kNodeOutOfRange, "target " + std::to_string(target) + " not in graph");
  EvalRow row{instance, strategy_id, target, mode, d, std::nullopt, std::nullopt, ""};
  if (mode == "exact") {
    row.exact = exact_expected_pos(make_strategy(strategy_id, d), g, target);
    row.method = "oracle";
  } else if (mode == "closed") {
    if (strategy_id == "dfs" && is_tree(g)) {
      row.exact = lemma1_expected_steps(g, kSource, target);
      row.method = "tree_formula";
    } else {
      row.exact = expected_pos_from_pairwise(parse_table_strategy(strategy_id), g, kSource, target, d).total;
      row.method = "pairwise_tables";
    }
  } else if (mode == "mc") {
    row.mc = monte_carlo(make_strategy(strategy_id, d), HiderStrategy::pure(g, target), trials, seed);
    row.method = "monte_carlo";
  } else {
    throw Error(ErrorKind::kBadInput, "unknown mode '" + mode + "'");
  }
  return row;
}

std::string eval_csv_header() { return "instance,strategy,target,mode,d,method,value,value_decimal"; }

std::string eval_csv(const EvalRow& r) {
  if (r.mc) return mc_csv_row(r.instance, r.strategy, *r.mc, std::nullopt);
  std::ostringstream os;
  os << r.instance << ',' << r.strategy << ',' << r.target << ',' << r.mode << ',' << r.d << ',' << r.method << ','
     << to_fraction_string(*r.exact) << ',' << to_double(*r.exact);
  return os.str();
}

Json eval_json(const EvalRow& r) {
  Json j = {{"instance", r.instance}, {"strategy", r.strategy}, {"target", r.target},
            {"mode", r.mode},         {"d", r.d},               {"method", r.method}};
  if (r.exact) {
    j["value"] = to_fraction_string(*r.exact);
    j["value_decimal"] = to_double(*r.exact);
  }
  if (r.mc) {
    j["trials"] = r.mc->trials;
    j["seed"] = r.mc->seed;
    j["mean"] = r.mc->mean;
    j["stderr"] = r.mc->stderr_mean;
    j["ci_lo"] = r.mc->ci_lo;
    j["ci_hi"] = r.mc->ci_hi;
  }
  return j;
}

int cmd_eval(const EvalArgs& a) {
  GraphDocument doc = read_graph_file(a.graph);
  NodeId target = a.target ? *a.target : doc.target ? *doc.target : throw Error(ErrorKind::kBadInput, "no --target and none in the graph file");
  EvalRow row = evaluate(instance_name(a.graph), doc.graph, target, a.strategy, a.mode, a.d, a.trials, a.seed);
  if (a.format == "json") {
    Output{a.out}.write(eval_json(row).dump(2) + "\n");
  } else {
    Output{a.out}.write((row.mc ? mc_csv_header() : eval_csv_header()) + "\n" + eval_csv(row) + "\n");
  }
  return kExitOk;
}

std::vector<CorpusEntry> load_corpus(const std::string& spec) {
  if (spec == "default") return default_corpus();
  // random:<count>:<seed>
  if (spec.rfind("random:", 0) == 0) {
    std::istringstream is(spec.substr(7));
    int count = 0;
    char colon = 0;
    std::uint64_t seed = 0;
    if (!(is >> count >> colon >> seed) || colon != ':' || count < 1) {
      throw Error(ErrorKind::kBadInput, "corpus spec must be random:<count>:<seed>");
    }
    return random_corpus(count, seed, 5, 10);
  }
  throw Error(ErrorKind::kBadInput, "unknown corpus '" + spec + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  std::vector<SuiteReport> reports;
  if (a.suite == "lemma1") {
    reports.push_back(verify_lemma1(a.min_n, a.max_n ? a.max_n : 7));
  } else if (a.suite == "lemma2") {
    reports.push_back(verify_lemma2(a.max_n ? a.max_n : 10));
  } else if (a.suite == "tables") {
    reports.push_back(verify_tables(load_corpus(a.corpus)));
  } else if (a.suite == "examples") {
    reports.push_back(verify_example1({{7, 2}, {10, 3}, {12, 4}}, 30, 4, a.trials, a.seed));
    reports.push_back(verify_example2({{17, 5}, {20, 6}}));
  } else if (a.suite == "prop1") {
    reports.push_back(verify_prop1(load_corpus(a.corpus)));
  } else if (a.suite == "equilibrium") {
    reports.push_back(verify_equilibrium(a.n, BenefitFunction::parse(a.benefit)));
  } else if (a.suite == "dstar") {
    reports.push_back(verify_d_star(BenefitFunction::parse(a.benefit), a.n, parse_int_list(a.expect)));
  } else if (a.suite == "equivalence") {
    reports.push_back(verify_equivalence(a.max_n ? a.max_n : 7));
  } else {
    throw Error(ErrorKind::kBadInput, "unknown suite '" + a.suite + "'");
  }
  bool passed = true;
  Json all = Json::array();
  for (const SuiteReport& r : reports) {
    for (const std::string& line : r.lines) std::cout << "[" << r.suite << "] " << line << "\n";
    std::cout << "[" << r.suite << "] " << (r.passed ? "PASS" : "FAIL") << " (" << r.checks << " checks)\n";
    if (!r.passed && !r.first_failure.is_null()) {
      std::cout << "[" << r.suite << "] first counterexample: " << r.first_failure.dump() << "\n";
    }
    passed = passed && r.passed;
    all.push_back(r.to_json());
  }
  if (!a.report.empty()) Output{a.report}.write(all.dump(2) + "\n");
  return passed ? kExitOk : kExitFailed;
}

int cmd_pairwise(const PairwiseArgs& a) {
  GraphDocument doc = read_graph_file(a.graph);
  const std::string instance = instance_name(a.graph);
  std::vector<TableStrategy> strategies;
  if (a.strategy == "all") {
    strategies.assign(std::begin(kTableStrategies), std::end(kTableStrategies));
  } else {
    strategies.push_back(parse_table_strategy(a.strategy));
  }
  PairwiseTables tables(doc.graph, kSource, a.d);
  std::ostringstream os;
  os << pairwise_csv_header() << "\n";
  for (TableStrategy s : strategies) {
    for (NodeId t : doc.graph.nodes()) {
      if (a.target && t != *a.target) continue;
      for (NodeId v : doc.graph.nodes()) {
        if (tables.precondition_failure(s, t, v)) continue;
        try {
          os << pairwise_csv_row(instance, s, t, v, tables.xvt(s, t, v)) << "\n";
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kPreconditionViolated) throw;
        }
      }
    }
  }
  Output{a.out}.write(os.str());
  return kExitOk;
}

// Graph for one batch item: {"graph": "<file>"} or
// {"generator": "palm|example1|example2", "n": .., "d": ..}.
GraphDocument batch_graph(const nlohmann::json& spec, std::string& instance) {
  if (spec.contains("graph")) {
    std::string path = spec.at("graph").get<std::string>();
    instance = instance_name(path);
    return read_graph_file(path);
  }
  std::string gen = spec.at("generator").get<std::string>();
  int n = spec.at("n").get<int>();
  int d = spec.at("d").get<int>();
  instance = gen + "_" + std::to_string(n) + "_" + std::to_string(d);
  if (gen == "palm") return {palm_tree(n, d), n - 1};
  if (gen == "example1") {
    Instance in = example1_graph(n, d);
    return {in.graph, in.target};
  }
  if (gen == "example2") {
    Instance in = example2_graph(n, d);
    return {in.graph, in.target};
  }
  throw Error(ErrorKind::kBadInput, "unknown generator '" + gen + "'");
}

int cmd_batch(const BatchArgs& a) {
  std::ifstream in(a.config);
  if (!in) throw Error(ErrorKind::kBadInput, "cannot read " + a.config);
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(in);
    if (!config.is_array()) throw Error(ErrorKind::kBadInput, "batch config must be a JSON array");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kBadInput, std::string("batch config: ") + e.what());
  }
  std::vector<std::string> exact_rows, mc_rows;
  try {
    for (const auto& spec : config) {
      std::string instance;
      GraphDocument doc = batch_graph(spec, instance);
      NodeId target = spec.contains("target") ? spec.at("target").get<int>()
                      : doc.target           ? *doc.target
                                             : throw Error(ErrorKind::kBadInput, "batch item without target");
      EvalRow row = evaluate(instance, doc.graph, target, spec.value("strategy", std::string("dfs")),
                             spec.value("mode", std::string("exact")), spec.value("d", 1),
                             spec.value("trials", std::uint64_t{10000}), spec.value("seed", std::uint64_t{1}));
      (row.mc ? mc_rows : exact_rows).push_back(eval_csv(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kBadInput, std::string("batch item: ") + e.what());
  }
  std::sort(exact_rows.begin(), exact_rows.end());
  std::sort(mc_rows.begin(), mc_rows.end());
  std::ostringstream os;
  if (!exact_rows.empty()) {
    os << eval_csv_header() << "\n";
    for (const std::string& r : exact_rows) os << r << "\n";
  }
  if (!mc_rows.empty()) {
    if (!exact_rows.empty()) os << "\n";
    os << mc_csv_header() << "\n";
    for (const std::string& r : mc_rows) os << r << "\n";
  }
  Output{a.out}.write(os.str());
  return kExitOk;
}

void write_manifest(const std::string& path, const std::vector<std::string>& argv, const std::string& command,
                    std::optional<std::uint64_t> seed, int exit_code) {
  if (path.empty()) return;
  Json m;
  m["tool"] = "hideseek";
  m["version"] = kVersion;
  m["command"] = command;
  m["argv"] = argv;
  m["seed"] = seed ? Json(*seed) : Json(nullptr);
  m["workers"] = worker_count();
  m["exit_code"] = exit_code;
  std::ofstream out(path);
  if (out) out << m.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hide-and-seek on networks: instance generation, exact and sampled evaluation, verification"};
  app.require_subcommand(1);
  std::string manifest = "run-manifest.json";
  app.add_option("--manifest", manifest, "Where to write the run manifest (empty to skip)");
  app.set_version_flag("--version", std::string(kVersion));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated network as JSON");
  gen_cmd->add_option("kind", gen.kind, "palm | example1 | example2 | tree-enum")->required();
  gen_cmd->add_option("--n", gen.n, "Number of nodes")->required();
  gen_cmd->add_option("--d", gen.d, "Height / hiding distance");
  gen_cmd->add_option("--index", gen.index, "tree-enum: Prüfer index of a single tree");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Expected position of the target under a seeking strategy");
  eval_cmd->add_option("--graph", eval.graph, "Graph JSON file")->required();
  eval_cmd->add_option("--strategy", eval.strategy, "Strategy id");
  eval_cmd->add_option("--target", eval.target, "Hiding node (default: the file's target)");
  eval_cmd->add_option("--mode", eval.mode, "exact | mc | closed");
  eval_cmd->add_option("--d", eval.d, "Distance bound for dfs_d / sigma_star");
  eval_cmd->add_option("--trials", eval.trials, "Monte Carlo trials");
  eval_cmd->add_option("--seed", eval.seed, "Monte Carlo seed");
  eval_cmd->add_option("--format", eval.format, "csv | json");
  eval_cmd->add_option("--out", eval.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify.suite,
                         "lemma1 | lemma2 | tables | examples | prop1 | equilibrium | dstar | equivalence")
      ->required();
  verify_cmd->add_option("--min-n", verify.min_n, "Smallest tree size (lemma1)");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest size (lemma1, lemma2, equivalence)");
  verify_cmd->add_option("--n", verify.n, "Node count (equilibrium, dstar)");
  verify_cmd->add_option("--benefit", verify.benefit, "step:<d> | geometric:<rho> | table:<a0>,<a1>,...");
  verify_cmd->add_option("--corpus", verify.corpus, "default | random:<count>:<seed>");
  verify_cmd->add_option("--expect", verify.expect, "dstar: expected depths, comma separated");
  verify_cmd->add_option("--trials", verify.trials, "Monte Carlo trials (examples)");
  verify_cmd->add_option("--seed", verify.seed, "Monte Carlo seed (examples)");
  verify_cmd->add_option("--report", verify.report, "Write the JSON report here");

  PairwiseArgs pairwise;
  auto* pairwise_cmd = app.add_subcommand("pairwise", "Pairwise visit-order table values as CSV");
  pairwise_cmd->add_option("--graph", pairwise.graph, "Graph JSON file")->required();
  pairwise_cmd->add_option("--strategy", pairwise.strategy, "dfs | dfs_d | adfs | sigma_star | all");
  pairwise_cmd->add_option("--d", pairwise.d, "Distance bound");
  pairwise_cmd->add_option("--target", pairwise.target, "Restrict to one target");
  pairwise_cmd->add_option("--out", pairwise.out, "Output file (default stdout)");

  BatchArgs batch;
  auto* batch_cmd = app.add_subcommand("batch", "Run a JSON array of evaluations");
  batch_cmd->add_option("config", batch.config, "Config file")->required();
  batch_cmd->add_option("--out", batch.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  std::vector<std::string> args(argv, argv + argc);
  std::string command = app.get_subcommands().front()->get_name();
  int code = kExitOk;
  try {
    if (gen_cmd->parsed()) code = cmd_gen(gen);
    if (eval_cmd->parsed()) code = cmd_eval(eval);
    if (verify_cmd->parsed()) code = cmd_verify(verify);
    if (pairwise_cmd->parsed()) code = cmd_pairwise(pairwise);
    if (batch_cmd->parsed()) code = cmd_batch(batch);
  } catch (const Error& e) {
    std::cerr << "hideseek: " << e.what() << "\n";
    code = kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "hideseek: " << e.what() << "\n";
    code = kExitBadInput;
  }
  std::optional<std::uint64_t> seed;
  if (eval_cmd->parsed() && eval.mode == "mc") seed = eval.seed;
  if (verify_cmd->parsed() && verify.suite == "examples") seed = verify.seed;
  write_manifest(manifest, args, command, seed, code);
  return code;
}
