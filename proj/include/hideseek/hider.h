#ifndef HIDESEEK_HIDER_H_
#define HIDESEEK_HIDER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hideseek/graph.h"
#include "hideseek/rational.h"

namespace hideseek {

struct HiderAtom {
  Graph graph;
  NodeId node = kSource;
  Rational probability;
};

// Probability distribution over (network, hiding node) pairs.
class HiderStrategy {
 public:
  // Probabilities must be positive and sum to exactly 1; every network must
  // respect `budget` (edge count) when one is given.
  explicit HiderStrategy(std::vector<HiderAtom> atoms, std::optional<int> budget = std::nullopt);

  static HiderStrategy pure(Graph g, NodeId node);

  const std::vector<HiderAtom>& atoms() const { return atoms_; }

 private:
  std::vector<HiderAtom> atoms_;
};

// Benefit A(x) from hiding at distance x; non-negative and non-increasing.
class BenefitFunction {
 public:
  enum class Kind { kStep, kTable, kGeometric };

  // 1 up to distance d, 0 beyond.
  static BenefitFunction step(int d);
  // values[x]; the last entry extends to larger distances.
  static BenefitFunction table(std::vector<Rational> values);
  // rho^x with 0 <= rho <= 1.
  static BenefitFunction geometric(Rational rho);

  // {"kind":"step","d":3} | {"kind":"table","values":[...]} | {"kind":"geometric","rho":0.9}
  static BenefitFunction from_json(const nlohmann::json& doc);
  // Compact CLI form: "step:3", "geometric:0.9", "table:1,1,1/2".
  static BenefitFunction parse(std::string_view spec);

  Rational operator()(int distance) const;
  Kind kind() const { return kind_; }
  nlohmann::json to_json() const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::kStep;
  int step_ = 0;
  Rational rho_;
  std::vector<Rational> values_;
};

// Trunk 0..d-1 from the source, crown d..n-1 all attached to node d-1.
Graph palm_tree(int n, int d);
NodeSet palm_crown(int n, int d);
// Uniform hiding over the crown of palm_tree(n, d).
HiderStrategy palm_crown_mixed(int n, int d);

// argmax over d in {0..n-1} of A(d)(n+d-1)/2, ties kept, ascending.
std::vector<int> d_star(const BenefitFunction& a, int n);

struct Instance {
  Graph graph;
  NodeId target = kSource;
};

// Line 0..d (target d) plus a cycle of n-d nodes through the source
// (nodes d+1..n-1 in cycle order).
Instance example1_graph(int n, int d);

// Line 0..d (target d); cycle of 2d-2 nodes through the source (nodes
// d+1..3d-3 in cycle order); n-3d+2 pendants (nodes 3d-2..n-1) attached to
// the cycle node antipodal to the source, node 2d-1.
Instance example2_graph(int n, int d);
NodeId example2_antipode(int d);

// All n^(n-2) labelled trees on 2 <= n <= 9 nodes, indexed by Prüfer code.
// Index ranges can be handed to separate workers.
class LabeledTrees {
 public:
  explicit LabeledTrees(int n);

  int n() const { return n_; }
  std::uint64_t size() const { return size_; }
  std::vector<NodeId> prufer_code(std::uint64_t index) const;
  Graph at(std::uint64_t index) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
  }

 private:
  int n_;
  std::uint64_t size_;
};

inline constexpr int kMaxEnumeratedTreeNodes = 9;

LabeledTrees all_trees(int n);

Graph tree_from_prufer(std::span<const NodeId> code);

}  // namespace hideseek

#endif  // HIDESEEK_HIDER_H_
