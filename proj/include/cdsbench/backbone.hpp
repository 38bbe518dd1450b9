// Connected dominating set construction.
//
// Every scheme starts from the same MIS + connector substrate and then
// enforces its own post-condition (diameter bound, routing stretch bound,
// cover-driven ranking). The post-conditions are what the benchmark
// measures, so each one is checked directly by the tests.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cdsbench/graph.hpp"

namespace cdsbench {

enum class Scheme { kGreedy, kDiameter, kAlphaMoc, kCollabCover, kGuaranteed, kResilient };

inline constexpr std::array<Scheme, 6> kAllSchemes = {
    Scheme::kGreedy,      Scheme::kDiameter,   Scheme::kAlphaMoc,
    Scheme::kCollabCover, Scheme::kGuaranteed, Scheme::kResilient};

/// "GREEDY", "DIAMETER", "ALPHA_MOC", "COLLAB_COVER", "GUARANTEED", "RESILIENT".
std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

struct AlphaMocParams {
  double alpha = 5.0;
};

struct Backbone {
  Scheme scheme = Scheme::kGreedy;
  NodeSet nodes;

  friend bool operator==(const Backbone&, const Backbone&) = default;
};

class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maps d(a, b) >= 1 to the largest admissible d_D(a, b).
using StretchBound = std::function<int(int)>;

/// Bound d_D <= factor * d.
StretchBound multiplicative_bound(int factor);

/// Intermediate-node bound m_D <= alpha * m with m = d - 1; for adjacent
/// pairs m_D <= alpha - 1.
StretchBound alpha_moc_bound(double alpha);

bool dominates(const Graph& graph, const Membership& members);
bool induces_connected(const Graph& graph, const Membership& members);

/// D is non-empty, dominates V and induces a connected subgraph.
bool verify_cds(const Graph& graph, std::span<const NodeId> nodes);

/// Hops of the shortest a -> b path with every interior vertex in D.
/// Returns DistanceMatrix::kUnreachable if there is none.
int backbone_hop_dist(const Graph& graph, std::span<const NodeId> backbone, NodeId a, NodeId b);

/// Nodes in descending degree, ascending index on ties.
std::vector<NodeId> degree_ranking(const Graph& graph);

/// Greedy maximal independent set scanning `ranking` front to back.
NodeSet build_mis(const Graph& graph, std::span<const NodeId> ranking);

/// Adds connectors until D induces one component. Each step picks the non-D
/// node touching the most distinct D-components; when the best count is 1,
/// nodes with a non-D neighbour touching another component go first; then
/// lowest index.
NodeSet connect_mis(const Graph& graph, std::span<const NodeId> mis);

/// Lexicographically smallest shortest path from a to b (inclusive).
std::vector<NodeId> lex_shortest_path(const Graph& graph, NodeId a, NodeId b);

/// Grows D until d_D(a, b) <= bound(d(a, b)) for every pair. Each round
/// fixes the violating pair of largest d_D/d (lowest (a, b) on ties) by
/// adding the interior of its lex-smallest shortest path.
NodeSet stretch_repair(const Graph& graph, std::span<const NodeId> backbone,
                       const StretchBound& bound);

/// Induced-subgraph diameter of D (0 for a singleton).
int induced_diameter(const Graph& graph, std::span<const NodeId> backbone);

/// Articulation points of the subgraph induced by D, ascending.
NodeSet induced_cut_vertices(const Graph& graph, std::span<const NodeId> backbone);

Backbone cds_greedy(const Graph& graph);
Backbone cds_diameter(const Graph& graph);
Backbone cds_alpha_moc(const Graph& graph, AlphaMocParams params = {});
Backbone cds_collab_cover(const Graph& graph);
Backbone cds_guaranteed(const Graph& graph);
Backbone cds_resilient(const Graph& graph);

/// MIS selection order used by cds_collab_cover (exposed for tests).
std::vector<NodeId> collab_cover_selection(const Graph& graph);

/// Runs bridging over cut vertices of D (ascending, one pass).
NodeSet resilience_augment(const Graph& graph, std::span<const NodeId> backbone);

Backbone build_backbone(const Graph& graph, Scheme scheme, AlphaMocParams params = {});

inline constexpr int kMinCdsOracleLimit = 12;

/// Exhaustive minimum CDS by increasing subset size. Throws
/// InstanceTooLarge when n > kMinCdsOracleLimit.
NodeSet min_cds_oracle(const Graph& graph);

/// {"scheme": "...", "nodes": [sorted indices]}
nlohmann::ordered_json to_json(const Backbone& backbone);
Backbone backbone_from_json(const nlohmann::json& doc);

}  // namespace cdsbench
