#ifndef HIDESEEK_GRAPH_IO_H_
#define HIDESEEK_GRAPH_IO_H_

#include <optional>
#include <string>

#include "json.hpp"

#include "hideseek/graph.h"

namespace hideseek {

// {"n": <int>, "source": 0, "edges": [[u,v],...]} with edges sorted and u < v.
// A hiding node, when present, is written as "target".
nlohmann::ordered_json graph_to_json(const Graph& g, std::optional<NodeId> target = std::nullopt);

struct GraphDocument {
  Graph graph;
  std::optional<NodeId> target;
};

// Throws Error(kBadInput) on malformed documents and the usual graph errors on
// invalid edge lists.
GraphDocument graph_from_json(const nlohmann::json& doc);

GraphDocument read_graph_file(const std::string& path);

}  // namespace hideseek

#endif  // HIDESEEK_GRAPH_IO_H_
