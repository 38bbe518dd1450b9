// Undirected simple graph with sorted adjacency lists, and the dense
// all-pairs distance matrix used throughout the benchmark.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cdsbench {

using NodeId = int;

/// Sorted, duplicate-free list of node indices.
using NodeSet = std::vector<NodeId>;

/// One byte per node, non-zero when the node is a member.
using Membership = std::vector<std::uint8_t>;

Membership to_membership(std::size_t node_count, std::span<const NodeId> nodes);
NodeSet to_node_set(const Membership& membership);

class Graph {
 public:
  Graph() = default;

  /// Takes ownership of neighbour lists. Lists are sorted; throws
  /// std::invalid_argument on self loops, out-of-range ids, duplicates or
  /// asymmetric entries.
  explicit Graph(std::vector<std::vector<NodeId>> adjacency);

  static Graph from_edges(int node_count, std::span<const std::pair<NodeId, NodeId>> edges);

  int size() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  bool adjacent(NodeId a, NodeId b) const;

  const std::vector<std::vector<NodeId>>& adjacency() const noexcept { return adjacency_; }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// True iff a traversal from node 0 reaches every node. The empty graph
/// counts as connected.
bool is_connected(const Graph& graph);

/// Dense n x n matrix of hop counts. kUnreachable marks pairs with no path.
class DistanceMatrix {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int size() const noexcept { return n_; }
  std::int32_t at(NodeId a, NodeId b) const { return cells_[index(a, b)]; }
  std::int32_t& at(NodeId a, NodeId b) { return cells_[index(a, b)]; }

  std::span<std::int32_t> row(NodeId a) {
    return {cells_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const std::int32_t> row(NodeId a) const {
    return {cells_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(NodeId a, NodeId b) const {
    return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<std::int32_t> cells_;
};

using HopDistanceMatrix = DistanceMatrix;

}  // namespace cdsbench
