#include "cdsbench/metrics.hpp"

#include <algorithm>
#include <cstdint>

#include "cdsbench/kernels.hpp"

namespace cdsbench {

namespace {

struct PairSums {
  std::int64_t total = 0;
  std::int64_t pairs = 0;
  int longest = 0;
};

PairSums sum_over_pairs(const DistanceMatrix& routed, std::span<const NodeId> nodes) {
  PairSums sums;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const int d = routed.at(nodes[i], nodes[j]);
      sums.total += d;
      ++sums.pairs;
      sums.longest = std::max(sums.longest, d);
    }
  }
  return sums;
}

std::vector<NodeId> all_nodes(const Graph& graph) {
  std::vector<NodeId> nodes(graph.size());
  for (NodeId v = 0; v < graph.size(); ++v) nodes[v] = v;
  return nodes;
}

double mean(const PairSums& sums) {
  return sums.pairs == 0 ? 0.0 : static_cast<double>(sums.total) / static_cast<double>(sums.pairs);
}

double worst_ratio(const DistanceMatrix& routed, const DistanceMatrix& hops) {
  std::int64_t num = 1;
  std::int64_t den = 1;
  const int n = hops.size();
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      const std::int64_t d = hops.at(a, b);
      const std::int64_t dd = routed.at(a, b);
      if (d >= 1 && dd * den > num * d) {
        num = dd;
        den = d;
      }
    }
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

DistanceMatrix routed_distances(const Graph& graph, std::span<const NodeId> backbone) {
  return all_pairs_backbone_dist_serial(graph, to_membership(graph.size(), backbone));
}

}  // namespace

int cds_size(const Backbone& backbone) { return static_cast<int>(backbone.nodes.size()); }

int backbone_diameter(const Graph& graph, std::span<const NodeId> backbone) {
  return induced_diameter(graph, backbone);
}

double abpl(const Graph& graph, std::span<const NodeId> backbone) {
  return mean(sum_over_pairs(routed_distances(graph, backbone), backbone));
}

int mrpl(const Graph& graph, std::span<const NodeId> backbone) {
  return sum_over_pairs(routed_distances(graph, backbone), all_nodes(graph)).longest;
}

double arpl(const Graph& graph, std::span<const NodeId> backbone) {
  return mean(sum_over_pairs(routed_distances(graph, backbone), all_nodes(graph)));
}

double max_stretch(const Graph& graph, std::span<const NodeId> backbone) {
  return worst_ratio(routed_distances(graph, backbone), all_pairs_hop_dist_serial(graph));
}

MetricReport full_report(const Graph& graph, const Backbone& backbone) {
  return full_report(graph, backbone, all_pairs_hop_dist(graph));
}

MetricReport full_report(const Graph& graph, const Backbone& backbone,
                         const HopDistanceMatrix& hops) {
  const auto routed = all_pairs_backbone_dist(graph, to_membership(graph.size(), backbone.nodes));
  const auto inside = sum_over_pairs(routed, backbone.nodes);
  const auto everywhere = sum_over_pairs(routed, all_nodes(graph));

  MetricReport report;
  report.cds_size = cds_size(backbone);
  report.diameter = inside.longest;
  report.abpl = mean(inside);
  report.abpl_defined = inside.pairs > 0;
  report.mrpl = everywhere.longest;
  report.arpl = mean(everywhere);
  report.max_stretch = worst_ratio(routed, hops);
  return report;
}

}  // namespace cdsbench
