#include "hideseek/graph.h"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hideseek {
namespace {

void check_node(int universe, NodeId v) {
  if (v < 0 || v >= universe) {
    throw Error(ErrorKind::kNodeOutOfRange,
                "node " + std::to_string(v) + " outside [0, " + std::to_string(universe) + ")");
  }
}

void check_universe(int n) {
  if (n < 1 || n > kMaxNodes) {
    throw Error(ErrorKind::kTooLarge,
                "node count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxNodes) + "]");
  }
}

NodeSet component_of(const Graph& g, NodeId s, NodeSet allowed) {
  NodeSet seen = NodeSet::of(s);
  NodeSet layer = seen;
  while (!layer.empty()) {
    NodeSet next;
    for (NodeId u : layer) next |= g.neighbors(u);
    next = (next & allowed) - seen;
    seen |= next;
    layer = next;
  }
  return seen;
}

int count_components(const Graph& g) {
  int components = 0;
  NodeSet left = g.nodes();
  while (!left.empty()) {
    left -= component_of(g, left.min(), g.nodes());
    ++components;
  }
  return components;
}

}  // namespace

Graph Graph::fragment(int universe, NodeSet nodes, std::span<const Edge> edges) {
  check_universe(universe);
  if (!nodes.subset_of(NodeSet::first(universe))) {
    throw Error(ErrorKind::kNodeOutOfRange, "node set exceeds universe");
  }
  Graph g;
  g.universe_ = universe;
  g.nodes_ = nodes;
  for (const Edge& e : edges) {
    check_node(universe, e.u);
    check_node(universe, e.v);
    if (!nodes.contains(e.u) || !nodes.contains(e.v)) {
      throw Error(ErrorKind::kNodeOutOfRange, "edge endpoint not in node set");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kSelfLoop, "self-loop at node " + std::to_string(e.u));
    }
    if (g.has_edge(e.u, e.v)) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") repeated");
    }
    g.add_edge_unchecked(e.u, e.v);
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g = fragment(n, NodeSet::first(n), edges);
  if (!is_connected(g)) {
    throw Error(ErrorKind::kDisconnectedGraph, "not every node is reachable from the source");
  }
  return g;
}

void Graph::add_edge_unchecked(NodeId u, NodeId v) {
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

int Graph::num_edges() const {
  int twice = 0;
  for (NodeId v : nodes_) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (NodeId u : nodes_) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void Graph::absorb_closed_neighborhood(const Graph& hidden, NodeId v) {
  universe_ = hidden.universe_;
  nodes_.insert(v);
  for (NodeId u : hidden.neighbors(v)) {
    nodes_.insert(u);
    add_edge_unchecked(u, v);
  }
}

bool Graph::operator==(const Graph& other) const {
  if (universe_ != other.universe_ || nodes_ != other.nodes_) return false;
  for (NodeId v : nodes_) {
    if (neighbors(v) != other.neighbors(v)) return false;
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, NodeId s) {
  std::vector<int> dist(static_cast<std::size_t>(g.universe()), kUnreachable);
  if (!g.has_node(s)) return dist;
  std::deque<NodeId> queue{s};
  dist[static_cast<std::size_t>(s)] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == kUnreachable) {
        dw = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

NodeSet must_pass(const Graph& g, NodeId s, NodeId t) {
  NodeSet out = NodeSet::of(s) | NodeSet::of(t);
  for (NodeId v : g.nodes() - out) {
    NodeSet allowed = g.nodes() - NodeSet::of(v);
    if (!component_of(g, s, allowed).contains(t)) out.insert(v);
  }
  return out;
}

int cyclomatic_number(const Graph& g) {
  return g.num_edges() - g.num_nodes() + count_components(g);
}

bool is_connected(const Graph& g) {
  return g.nodes().empty() || component_of(g, g.nodes().min(), g.nodes()) == g.nodes();
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.num_edges() + 1 == g.num_nodes();
}

std::optional<Cycle> find_cycle(const Graph& g) {
  int rank = cyclomatic_number(g);
  if (rank == 0) return std::nullopt;
  if (rank > 1) {
    throw Error(ErrorKind::kMultipleCycles,
                "graph has cyclomatic number " + std::to_string(rank));
  }
  // Peel degree-<=1 nodes; what survives is the cycle.
  NodeSet core = g.nodes();
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (NodeId v : core) {
      if ((g.neighbors(v) & core).size() <= 1) {
        core.erase(v);
        peeled = true;
      }
    }
  }
  Cycle cycle;
  cycle.members = core;
  NodeId prev = -1;
  NodeId cur = core.min();
  do {
    cycle.nodes.push_back(cur);
    NodeSet next = g.neighbors(cur) & core;
    if (prev >= 0) next.erase(prev);
    prev = cur;
    cur = next.min();
  } while (cur != cycle.nodes.front());
  return cycle;
}

NodeSet ReachabilityClasses::exactly(int i) const {
  NodeSet out;
  for (std::size_t v = 0; v < counts_.size(); ++v) {
    if (counts_[v] == i) out.insert(static_cast<NodeId>(v));
  }
  return out;
}

NodeSet ReachabilityClasses::reachable() const {
  NodeSet out;
  for (std::size_t v = 0; v < counts_.size(); ++v) {
    if (counts_[v] >= 1) out.insert(static_cast<NodeId>(v));
  }
  return out;
}

PathProfile::PathProfile(const Graph& g, NodeId source)
    : source_(source), paths_(static_cast<std::size_t>(g.universe())) {
  if (cyclomatic_number(g) > 1) {
    throw Error(ErrorKind::kMultipleCycles, "path classes need at most one cycle");
  }
  if (!g.has_node(source)) return;
  struct Frame {
    NodeId node;
    int length;
    NodeSet on_path;
    NodeSet pending;
  };
  std::vector<Frame> stack;
  NodeSet start = NodeSet::of(source);
  paths_[static_cast<std::size_t>(source)].push_back({0, start});
  stack.push_back({source, 0, start, g.neighbors(source)});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.pending.empty()) {
      stack.pop_back();
      continue;
    }
    NodeId next = top.pending.min();
    top.pending.erase(next);
    if (top.on_path.contains(next)) continue;
    NodeSet on_path = top.on_path | NodeSet::of(next);
    int length = top.length + 1;
    paths_[static_cast<std::size_t>(next)].push_back({length, on_path});
    stack.push_back({next, length, on_path, g.neighbors(next) - on_path});
  }
}

int PathProfile::count(NodeId v, int max_length) const {
  int c = 0;
  for (const SimplePath& p : paths_to(v)) c += p.length <= max_length ? 1 : 0;
  return c;
}

int PathProfile::count_through(NodeId v, NodeId u, int max_length) const {
  int c = 0;
  for (const SimplePath& p : paths_to(v)) {
    c += (p.length <= max_length && p.nodes.contains(u)) ? 1 : 0;
  }
  return c;
}

ReachabilityClasses PathProfile::classes(int max_length) const {
  std::vector<int> counts(paths_.size());
  for (std::size_t v = 0; v < paths_.size(); ++v) {
    counts[v] = count(static_cast<NodeId>(v), max_length);
  }
  return ReachabilityClasses(std::move(counts));
}

ReachabilityClasses PathProfile::classes_through(NodeId u, int max_length) const {
  std::vector<int> counts(paths_.size());
  for (std::size_t v = 0; v < paths_.size(); ++v) {
    counts[v] = count_through(static_cast<NodeId>(v), u, max_length);
  }
  return ReachabilityClasses(std::move(counts));
}

ReachabilityClasses reachability_classes(const Graph& g, NodeId s, int d) {
  return PathProfile(g, s).classes(d);
}

ReachabilityClasses restricted_classes(const Graph& g, NodeId s, NodeId u, int d) {
  return PathProfile(g, s).classes_through(u, d);
}

NodeId entrance(const Graph& g, const Cycle& k, NodeId s) {
  std::vector<int> dist = bfs_distances(g, s);
  NodeId best = -1;
  for (NodeId c : k.members) {
    int dc = dist[static_cast<std::size_t>(c)];
    if (dc == kUnreachable) continue;
    if (best < 0 || dc < dist[static_cast<std::size_t>(best)]) best = c;
  }
  if (best < 0) throw Error(ErrorKind::kPreconditionViolated, "cycle unreachable from source");
  return best;
}

NodeId exit(const Graph& g, const Cycle& k, NodeId s, NodeId v) {
  if (k.members.contains(v)) {
    throw Error(ErrorKind::kNotBehindCycle, "node " + std::to_string(v) + " lies on the cycle");
  }
  PathProfile profile(g, s);
  const auto& paths = profile.paths_to(v);
  if (paths.size() != 2) {
    throw Error(ErrorKind::kNotBehindCycle,
                "node " + std::to_string(v) + " is not reached through the cycle");
  }
  // Both paths enter the cycle at the entrance and leave it at the exit.
  NodeSet shared = paths[0].nodes & paths[1].nodes & k.members;
  std::vector<int> dist = bfs_distances(g, s);
  NodeId far = -1;
  for (NodeId c : shared) {
    if (far < 0 || dist[static_cast<std::size_t>(c)] > dist[static_cast<std::size_t>(far)]) far = c;
  }
  return far;
}

Graph closed_subgraph(const Graph& g, NodeSet x) {
  Graph out = Graph::fragment(g.universe(), NodeSet(), {});
  for (NodeId v : x) out.absorb_closed_neighborhood(g, v);
  return out;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.universe() << " edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ",") << "(" << e.u << "," << e.v << ")";
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace hideseek
