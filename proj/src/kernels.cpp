#include "cdsbench/kernels.hpp"

#include <algorithm>
#include <vector>

namespace cdsbench {

void bfs_row(const Graph& graph, NodeId source, const Membership* interior,
             std::span<std::int32_t> out) {
  std::fill(out.begin(), out.end(), DistanceMatrix::kUnreachable);
  std::vector<NodeId> frontier{source};
  std::vector<NodeId> next;
  out[source] = 0;
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (NodeId v : frontier) {
      if (interior != nullptr && v != source && !(*interior)[v]) continue;
      for (NodeId u : graph.neighbors(v)) {
        if (out[u] == DistanceMatrix::kUnreachable) {
          out[u] = depth;
          next.push_back(u);
        }
      }
    }
    frontier.swap(next);
  }
}

namespace {

DistanceMatrix all_pairs_parallel(const Graph& graph, const Membership* interior) {
  const int n = graph.size();
  DistanceMatrix dist(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (int source = 0; source < n; ++source) {
    bfs_row(graph, source, interior, dist.row(source));
  }
  return dist;
}

DistanceMatrix all_pairs_serial(const Graph& graph, const Membership* interior) {
  const int n = graph.size();
  DistanceMatrix dist(n);
  for (int source = 0; source < n; ++source) {
    bfs_row(graph, source, interior, dist.row(source));
  }
  return dist;
}

}  // namespace

DistanceMatrix all_pairs_hop_dist(const Graph& graph) { return all_pairs_parallel(graph, nullptr); }

DistanceMatrix all_pairs_hop_dist_serial(const Graph& graph) {
  return all_pairs_serial(graph, nullptr);
}

DistanceMatrix all_pairs_backbone_dist(const Graph& graph, const Membership& backbone) {
  return all_pairs_parallel(graph, &backbone);
}

DistanceMatrix all_pairs_backbone_dist_serial(const Graph& graph, const Membership& backbone) {
  return all_pairs_serial(graph, &backbone);
}

}  // namespace cdsbench
