#ifndef HIDESEEK_GRAPH_H_
#define HIDESEEK_GRAPH_H_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hideseek/error.h"

namespace hideseek {

using NodeId = int;

// Node ids are dense integers 0..n-1 and the source is always node 0.
inline constexpr NodeId kSource = 0;
inline constexpr int kMaxNodes = 64;
inline constexpr int kUnreachable = -1;

// Set of node ids backed by a single machine word.
class NodeSet {
 public:
  class iterator {
   public:
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t bits) : bits_(bits) {}
    NodeId operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t bits_ = 0;
  };

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr NodeSet of(NodeId v) { return NodeSet(std::uint64_t{1} << v); }
  static constexpr NodeSet first(int n) {
    return NodeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(NodeId v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(NodeId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(NodeId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  NodeId min() const { return std::countr_zero(bits_); }
  NodeId max() const { return 63 - std::countl_zero(bits_); }
  constexpr bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  constexpr NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
  constexpr NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }
  constexpr NodeSet& operator-=(NodeSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const NodeSet&) const = default;

  std::vector<NodeId> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph over the id range [0, universe). Not every id has to
// be present: the seeker's view of a hidden network is a Graph containing only
// the visited nodes and their neighbours.
class Graph {
 public:
  Graph() = default;

  // A full network: all ids 0..n-1 present, connected, simple.
  static Graph from_edges(int n, std::span<const Edge> edges);
  // Any simple graph over a subset of ids; connectivity is not required.
  static Graph fragment(int universe, NodeSet nodes, std::span<const Edge> edges);

  int universe() const { return universe_; }
  int num_nodes() const { return nodes_.size(); }
  NodeSet nodes() const { return nodes_; }
  bool has_node(NodeId v) const { return v >= 0 && v < universe_ && nodes_.contains(v); }
  bool has_edge(NodeId u, NodeId v) const { return neighbors(u).contains(v); }
  NodeSet neighbors(NodeId v) const { return NodeSet(adj_[static_cast<std::size_t>(v)]); }
  int degree(NodeId v) const { return neighbors(v).size(); }
  int num_edges() const;
  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Adds `v` together with every edge of `hidden` incident to it (and the
  // far endpoints). Repeated for each visited node this grows the closed
  // subgraph induced by the visited set.
  void absorb_closed_neighborhood(const Graph& hidden, NodeId v);

  bool operator==(const Graph& other) const;

 private:
  void add_edge_unchecked(NodeId u, NodeId v);

  int universe_ = 0;
  NodeSet nodes_;
  std::array<std::uint64_t, kMaxNodes> adj_{};
};

struct Cycle {
  std::vector<NodeId> nodes;  // consecutive entries (cyclically) are adjacent
  NodeSet members;
};

// Hop distances from `s`; kUnreachable for absent or unreachable ids.
std::vector<int> bfs_distances(const Graph& g, NodeId s);

// Nodes lying on every s-t path (always contains s and t).
NodeSet must_pass(const Graph& g, NodeId s, NodeId t);

// Edges minus nodes plus components.
int cyclomatic_number(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected(const Graph& g);

// The unique cycle, or nullopt for a forest. Throws MultipleCycles when the
// graph has more than one independent cycle.
std::optional<Cycle> find_cycle(const Graph& g);

// Number of simple paths of bounded length from a fixed source to each node.
// With at most one cycle every count is 0, 1 or 2.
class ReachabilityClasses {
 public:
  ReachabilityClasses() = default;
  explicit ReachabilityClasses(std::vector<int> counts) : counts_(std::move(counts)) {}

  int paths(NodeId v) const { return counts_[static_cast<std::size_t>(v)]; }
  bool in(int i, NodeId v) const { return paths(v) == i; }
  // R^i: nodes reached by exactly i paths.
  NodeSet exactly(int i) const;
  // R = union over i >= 1.
  NodeSet reachable() const;

 private:
  std::vector<int> counts_;
};

struct SimplePath {
  int length = 0;
  NodeSet nodes;
};

// All simple paths from `source` in a graph with at most one cycle.
class PathProfile {
 public:
  // Throws MultipleCycles if the graph has more than one cycle.
  PathProfile(const Graph& g, NodeId source);

  NodeId source() const { return source_; }
  const std::vector<SimplePath>& paths_to(NodeId v) const {
    return paths_[static_cast<std::size_t>(v)];
  }
  int count(NodeId v, int max_length) const;
  int count_through(NodeId v, NodeId u, int max_length) const;

  ReachabilityClasses classes(int max_length) const;
  ReachabilityClasses classes_through(NodeId u, int max_length) const;

 private:
  NodeId source_ = kSource;
  std::vector<std::vector<SimplePath>> paths_;
};

// R^i_d(G, s): classification by number of simple paths of length <= d.
ReachabilityClasses reachability_classes(const Graph& g, NodeId s, int d);
// R^i_d(G, s, u): as above, counting only paths that contain u.
ReachabilityClasses restricted_classes(const Graph& g, NodeId s, NodeId u, int d);

// Cycle node closest to s.
NodeId entrance(const Graph& g, const Cycle& k, NodeId s);
// Last cycle node on the s-v paths of a node behind the cycle, i.e. one that
// every s-v path reaches by traversing a cycle edge. Throws NotBehindCycle
// otherwise (v on the cycle, or v hanging off the s side of the entrance).
NodeId exit(const Graph& g, const Cycle& k, NodeId s, NodeId v);

// Closed subgraph induced by X: nodes X and N(X); edges inside X and from X
// to N(X); no edges among the neighbours.
Graph closed_subgraph(const Graph& g, NodeSet x);

std::string to_string(const Graph& g);

}  // namespace hideseek

#endif  // HIDESEEK_GRAPH_H_
