#include "cdsbench/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cdsbench {

Membership to_membership(std::size_t node_count, std::span<const NodeId> nodes) {
  Membership members(node_count, 0);
  for (NodeId v : nodes) {
    if (v < 0 || static_cast<std::size_t>(v) >= node_count) {
      throw std::out_of_range("node index " + std::to_string(v) + " outside graph");
    }
    members[v] = 1;
  }
  return members;
}

NodeSet to_node_set(const Membership& membership) {
  NodeSet nodes;
  for (std::size_t v = 0; v < membership.size(); ++v) {
    if (membership[v]) nodes.push_back(static_cast<NodeId>(v));
  }
  return nodes;
}

Graph::Graph(std::vector<std::vector<NodeId>> adjacency) : adjacency_(std::move(adjacency)) {
  const auto n = static_cast<NodeId>(adjacency_.size());
  std::size_t endpoint_count = 0;
  for (NodeId v = 0; v < n; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("duplicate neighbour at node " + std::to_string(v));
    }
    for (NodeId u : list) {
      if (u < 0 || u >= n) throw std::invalid_argument("neighbour index out of range");
      if (u == v) throw std::invalid_argument("self loop at node " + std::to_string(v));
    }
    endpoint_count += list.size();
  }
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : adjacency_[v]) {
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v)) {
        throw std::invalid_argument("asymmetric edge " + std::to_string(v) + "-" +
                                    std::to_string(u));
      }
    }
  }
  edge_count_ = endpoint_count / 2;
}

Graph Graph::from_edges(int node_count, std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::vector<NodeId>> adjacency(static_cast<std::size_t>(node_count));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  return Graph(std::move(adjacency));
}

bool Graph::adjacent(NodeId a, NodeId b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

bool is_connected(const Graph& graph) {
  const int n = graph.size();
  if (n == 0) return true;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : graph.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

}  // namespace cdsbench
