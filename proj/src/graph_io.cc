#include "hideseek/graph_io.h"

#include <fstream>

namespace hideseek {

nlohmann::ordered_json graph_to_json(const Graph& g, std::optional<NodeId> target) {
  nlohmann::ordered_json doc;
  doc["n"] = g.universe();
  doc["source"] = kSource;
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (target) doc["target"] = *target;
  return doc;
}

GraphDocument graph_from_json(const nlohmann::json& doc) {
  try {
    int n = doc.at("n").get<int>();
    if (doc.contains("source") && doc.at("source").get<int>() != kSource) {
      throw Error(ErrorKind::kBadInput, "source must be node 0");
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::kBadInput, "edge must be [u,v]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    GraphDocument out{Graph::from_edges(n, edges), std::nullopt};
    if (doc.contains("target")) {
      NodeId t = doc.at("target").get<int>();
      if (!out.graph.has_node(t)) throw Error(ErrorKind::kNodeOutOfRange, "target not in graph");
      out.target = t;
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kBadInput, std::string("graph JSON: ") + e.what());
  }
}

GraphDocument read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kBadInput, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kBadInput, path + ": " + e.what());
  }
  return graph_from_json(doc);
}

}  // namespace hideseek
