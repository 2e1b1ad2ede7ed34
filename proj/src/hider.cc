#include "hideseek/hider.h"

#include <algorithm>
#include <sstream>

namespace hideseek {
namespace {

void check_palm(int n, int d) {
  if (n < 2 || n > kMaxNodes) {
    throw Error(ErrorKind::kBadHeight, "palm tree needs 2 <= n <= 64, got n=" + std::to_string(n));
  }
  if (d < 1 || d > n - 1) {
    throw Error(ErrorKind::kBadHeight,
                "palm height " + std::to_string(d) + " outside [1, " + std::to_string(n - 1) + "]");
  }
}

}  // namespace

HiderStrategy::HiderStrategy(std::vector<HiderAtom> atoms, std::optional<int> budget)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw Error(ErrorKind::kBadInput, "hider strategy has no atoms");
  Rational total = 0;
  for (const HiderAtom& a : atoms_) {
    if (a.probability <= 0) throw Error(ErrorKind::kBadInput, "atom probability must be positive");
    if (!a.graph.has_node(a.node)) throw Error(ErrorKind::kNodeOutOfRange, "hiding node not in graph");
    if (budget && a.graph.num_edges() > *budget) {
      throw Error(ErrorKind::kBadInput, "network exceeds link budget " + std::to_string(*budget));
    }
    total += a.probability;
  }
  if (total != 1) {
    throw Error(ErrorKind::kBadInput, "atom probabilities sum to " + to_fraction_string(total));
  }
}

HiderStrategy HiderStrategy::pure(Graph g, NodeId node) {
  return HiderStrategy({HiderAtom{std::move(g), node, Rational(1)}});
}

BenefitFunction BenefitFunction::step(int d) {
  if (d < 0) throw Error(ErrorKind::kBadInput, "step benefit needs d >= 0");
  BenefitFunction a;
  a.kind_ = Kind::kStep;
  a.step_ = d;
  return a;
}

BenefitFunction BenefitFunction::table(std::vector<Rational> values) {
  if (values.empty()) throw Error(ErrorKind::kBadInput, "benefit table is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw Error(ErrorKind::kBadInput, "benefit values must be non-negative");
    if (i > 0 && values[i] > values[i - 1]) {
      throw Error(ErrorKind::kBadInput, "benefit table must be non-increasing");
    }
  }
  BenefitFunction a;
  a.kind_ = Kind::kTable;
  a.values_ = std::move(values);
  return a;
}

BenefitFunction BenefitFunction::geometric(Rational rho) {
  if (rho < 0 || rho > 1) throw Error(ErrorKind::kBadInput, "geometric benefit needs 0 <= rho <= 1");
  BenefitFunction a;
  a.kind_ = Kind::kGeometric;
  a.rho_ = rho;
  return a;
}

Rational BenefitFunction::operator()(int distance) const {
  switch (kind_) {
    case Kind::kStep:
      return distance <= step_ ? Rational(1) : Rational(0);
    case Kind::kTable: {
      std::size_t i = std::min(static_cast<std::size_t>(std::max(distance, 0)), values_.size() - 1);
      return values_[i];
    }
    case Kind::kGeometric: {
      Rational r = 1;
      for (int i = 0; i < distance; ++i) r *= rho_;
      return r;
    }
  }
  return 0;
}

BenefitFunction BenefitFunction::from_json(const nlohmann::json& doc) {
  try {
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "step") return step(doc.at("d").get<int>());
    if (kind == "geometric") {
      const auto& rho = doc.at("rho");
      return geometric(rho.is_string() ? parse_rational(rho.get<std::string>())
                                       : rational_from_double(rho.get<double>()));
    }
    if (kind == "table") {
      std::vector<Rational> values;
      for (const auto& v : doc.at("values")) {
        values.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                       : rational_from_double(v.get<double>()));
      }
      return table(std::move(values));
    }
    throw Error(ErrorKind::kBadInput, "unknown benefit kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kBadInput, std::string("benefit JSON: ") + e.what());
  }
}

BenefitFunction BenefitFunction::parse(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::kBadInput, "benefit spec needs kind:params");
  std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  if (kind == "step") {
    Rational d = parse_rational(rest);
    if (d.get_den() != 1) throw Error(ErrorKind::kBadInput, "step distance must be an integer");
    return step(static_cast<int>(d.get_num().get_si()));
  }
  if (kind == "geometric") return geometric(parse_rational(rest));
  if (kind == "table") {
    std::vector<Rational> values;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      values.push_back(parse_rational(rest.substr(0, comma)));
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    }
    return table(std::move(values));
  }
  throw Error(ErrorKind::kBadInput, "unknown benefit kind '" + std::string(kind) + "'");
}

nlohmann::json BenefitFunction::to_json() const {
  switch (kind_) {
    case Kind::kStep:
      return {{"kind", "step"}, {"d", step_}};
    case Kind::kGeometric:
      return {{"kind", "geometric"}, {"rho", to_fraction_string(rho_)}};
    case Kind::kTable: {
      auto values = nlohmann::json::array();
      for (const Rational& v : values_) values.push_back(to_fraction_string(v));
      return {{"kind", "table"}, {"values", values}};
    }
  }
  return {};
}

std::string BenefitFunction::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kStep: os << "step:" << step_; break;
    case Kind::kGeometric: os << "geometric:" << to_fraction_string(rho_); break;
    case Kind::kTable: {
      os << "table:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        os << (i ? "," : "") << to_fraction_string(values_[i]);
      }
      break;
    }
  }
  return os.str();
}

Graph palm_tree(int n, int d) {
  check_palm(n, d);
  std::vector<Edge> edges;
  for (NodeId v = 1; v < d; ++v) edges.push_back({v - 1, v});
  for (NodeId v = d; v < n; ++v) edges.push_back({d - 1, v});
  return Graph::from_edges(n, edges);
}

NodeSet palm_crown(int n, int d) {
  check_palm(n, d);
  return NodeSet::first(n) - NodeSet::first(d);
}

HiderStrategy palm_crown_mixed(int n, int d) {
  Graph g = palm_tree(n, d);
  std::vector<HiderAtom> atoms;
  for (NodeId v : palm_crown(n, d)) atoms.push_back({g, v, make_rational(1, n - d)});
  return HiderStrategy(std::move(atoms), n - 1);
}

std::vector<int> d_star(const BenefitFunction& a, int n) {
  if (n < 2) throw Error(ErrorKind::kBadInput, "d_star needs n >= 2");
  std::vector<int> best;
  Rational best_value;
  for (int d = 0; d <= n - 1; ++d) {
    Rational value = a(d) * make_rational(n + d - 1, 2);
    if (best.empty() || value > best_value) {
      best = {d};
      best_value = value;
    } else if (value == best_value) {
      best.push_back(d);
    }
  }
  return best;
}

Instance example1_graph(int n, int d) {
  if (d < 1 || n - d < 3 || n > kMaxNodes) {
    throw Error(ErrorKind::kBadShape, "example1 needs d >= 1 and a cycle of n-d >= 3 nodes (n=" +
                                          std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= d; ++v) edges.push_back({v - 1, v});
  NodeId prev = kSource;
  for (NodeId v = d + 1; v < n; ++v) {
    edges.push_back({prev, v});
    prev = v;
  }
  edges.push_back({kSource, prev});
  return {Graph::from_edges(n, edges), d};
}

NodeId example2_antipode(int d) { return 2 * d - 1; }

Instance example2_graph(int n, int d) {
  if (d < 3 || n < 3 * d - 1 || n > kMaxNodes) {
    throw Error(ErrorKind::kBadShape, "example2 needs d >= 3 and n >= 3d-1 (n=" + std::to_string(n) +
                                          ", d=" + std::to_string(d) + ")");
  }
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= d; ++v) edges.push_back({v - 1, v});
  // Cycle positions 0..2d-3: position 0 is the source, position p >= 1 is
  // node d+p.
  const int cycle_len = 2 * d - 2;
  NodeId prev = kSource;
  for (int p = 1; p < cycle_len; ++p) {
    edges.push_back({prev, d + p});
    prev = d + p;
  }
  edges.push_back({kSource, prev});
  const NodeId antipode = example2_antipode(d);
  for (NodeId v = 3 * d - 2; v < n; ++v) edges.push_back({antipode, v});
  // (d+1) line + (2d-3) further cycle nodes + (n-3d+2) pendants.
  if ((d + 1) + (2 * d - 3) + (n - 3 * d + 2) != n) {
    throw Error(ErrorKind::kBadShape, "example2 node count mismatch");
  }
  return {Graph::from_edges(n, edges), d};
}

Graph tree_from_prufer(std::span<const NodeId> code) {
  const int n = static_cast<int>(code.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (NodeId v : code) ++degree[static_cast<std::size_t>(v)];
  std::vector<Edge> edges;
  for (NodeId v : code) {
    NodeId leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(v)];
  }
  NodeId a = -1;
  for (NodeId v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
        break;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

LabeledTrees::LabeledTrees(int n) : n_(n), size_(1) {
  if (n < 2) throw Error(ErrorKind::kBadInput, "tree enumeration needs n >= 2");
  if (n > kMaxEnumeratedTreeNodes) {
    throw Error(ErrorKind::kTooLarge, "tree enumeration capped at n = 9, got " + std::to_string(n));
  }
  for (int i = 0; i < n - 2; ++i) size_ *= static_cast<std::uint64_t>(n);
}

std::vector<NodeId> LabeledTrees::prufer_code(std::uint64_t index) const {
  std::vector<NodeId> code(static_cast<std::size_t>(n_ - 2));
  for (auto it = code.rbegin(); it != code.rend(); ++it) {
    *it = static_cast<NodeId>(index % static_cast<std::uint64_t>(n_));
    index /= static_cast<std::uint64_t>(n_);
  }
  return code;
}

Graph LabeledTrees::at(std::uint64_t index) const {
  std::vector<NodeId> code = prufer_code(index);
  return tree_from_prufer(code);
}

LabeledTrees all_trees(int n) { return LabeledTrees(n); }

}  // namespace hideseek
