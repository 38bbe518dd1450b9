// Breadth-first distance kernels.
//
// Each all-pairs kernel comes in two flavours: an OpenMP version that
// distributes sources over threads, and a serial reference that the tests
// and the benchmark compare it against. Both write every row independently,
// so the results are identical regardless of scheduling.
#pragma once

#include <span>

#include "cdsbench/graph.hpp"

namespace cdsbench {

/// Single-source BFS. When `interior` is non-empty, only members of
/// `interior` (and the source) are expanded; other nodes are reached but
/// act as path endpoints. Writes hop counts into `out` (size n).
void bfs_row(const Graph& graph, NodeId source, const Membership* interior,
             std::span<std::int32_t> out);

/// All-pairs hop distances d(a, b).
DistanceMatrix all_pairs_hop_dist(const Graph& graph);
DistanceMatrix all_pairs_hop_dist_serial(const Graph& graph);

/// All-pairs backbone distances d_D(a, b): shortest paths whose interior
/// vertices all belong to `backbone`.
DistanceMatrix all_pairs_backbone_dist(const Graph& graph, const Membership& backbone);
DistanceMatrix all_pairs_backbone_dist_serial(const Graph& graph, const Membership& backbone);

}  // namespace cdsbench
