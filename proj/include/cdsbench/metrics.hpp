// Evaluation metrics for a (graph, backbone) pair.
//
// Pair domains: diameter and ABPL range over pairs inside D, MRPL and ARPL
// over all node pairs. Averages use unordered distinct pairs.
#pragma once

#include <cstddef>

#include "cdsbench/backbone.hpp"
#include "cdsbench/graph.hpp"

namespace cdsbench {

struct MetricReport {
  int cds_size = 0;
  int diameter = 0;
  double abpl = 0.0;
  bool abpl_defined = false;  ///< false when |D| = 1 (abpl reported as 0)
  int mrpl = 0;
  double arpl = 0.0;
  double max_stretch = 1.0;

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

int cds_size(const Backbone& backbone);
int backbone_diameter(const Graph& graph, std::span<const NodeId> backbone);
double abpl(const Graph& graph, std::span<const NodeId> backbone);
int mrpl(const Graph& graph, std::span<const NodeId> backbone);
double arpl(const Graph& graph, std::span<const NodeId> backbone);
double max_stretch(const Graph& graph, std::span<const NodeId> backbone);

/// All metrics from one backbone-restricted all-pairs BFS.
MetricReport full_report(const Graph& graph, const Backbone& backbone);

/// Same, reusing precomputed hop distances of `graph`.
MetricReport full_report(const Graph& graph, const Backbone& backbone,
                         const HopDistanceMatrix& hops);

}  // namespace cdsbench
