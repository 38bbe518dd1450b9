#include "cdsbench/backbone.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "cdsbench/kernels.hpp"

namespace cdsbench {

namespace {

constexpr std::array<std::string_view, 6> kSchemeNames = {
    "GREEDY", "DIAMETER", "ALPHA_MOC", "COLLAB_COVER", "GUARANTEED", "RESILIENT"};

/// Component labels of the subgraph induced by `members`, -1 outside it.
/// `skip` is treated as removed. Returns the component count.
int label_components(const Graph& graph, const Membership& members, NodeId skip,
                     std::vector<int>& labels) {
  const int n = graph.size();
  labels.assign(n, -1);
  int count = 0;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (!members[start] || start == skip || labels[start] != -1) continue;
    labels[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId u : graph.neighbors(v)) {
        if (members[u] && u != skip && labels[u] == -1) {
          labels[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  return count;
}

/// Distinct component labels among the neighbours of v.
std::vector<int> touched_components(const Graph& graph, NodeId v, const std::vector<int>& labels) {
  std::vector<int> touched;
  for (NodeId u : graph.neighbors(v)) {
    if (labels[u] >= 0) touched.push_back(labels[u]);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  return touched;
}

void add_path_interior(const Graph& graph, NodeId a, NodeId b, Membership& members) {
  const auto path = lex_shortest_path(graph, a, b);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) members[path[i]] = 1;
}

/// Articulation points via Tarjan low-link over the induced subgraph.
class CutVertexFinder {
 public:
  CutVertexFinder(const Graph& graph, const Membership& members)
      : graph_(graph), members_(members), order_(graph.size(), -1), low_(graph.size(), 0),
        cut_(graph.size(), 0) {}

  NodeSet run() {
    for (NodeId v = 0; v < graph_.size(); ++v) {
      if (members_[v] && order_[v] == -1) visit(v, -1);
    }
    return to_node_set(cut_);
  }

 private:
  void visit(NodeId v, NodeId parent) {
    order_[v] = low_[v] = clock_++;
    int children = 0;
    for (NodeId u : graph_.neighbors(v)) {
      if (!members_[u] || u == parent) continue;
      if (order_[u] == -1) {
        ++children;
        visit(u, v);
        low_[v] = std::min(low_[v], low_[u]);
        if (parent != -1 && low_[u] >= order_[v]) cut_[v] = 1;
      } else {
        low_[v] = std::min(low_[v], order_[u]);
      }
    }
    if (parent == -1 && children > 1) cut_[v] = 1;
  }

  const Graph& graph_;
  const Membership& members_;
  std::vector<int> order_;
  std::vector<int> low_;
  Membership cut_;
  int clock_ = 0;
};

}  // namespace

std::string_view scheme_name(Scheme scheme) { return kSchemeNames[static_cast<int>(scheme)]; }

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (std::size_t i = 0; i < kSchemeNames.size(); ++i) {
    if (kSchemeNames[i] == name) return static_cast<Scheme>(i);
  }
  return std::nullopt;
}

StretchBound multiplicative_bound(int factor) {
  return [factor](int d) { return factor * d; };
}

StretchBound alpha_moc_bound(double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  return [alpha](int d) {
    constexpr double kSlack = 1e-9;
    const int interior = d - 1;
    const double allowed = interior == 0 ? alpha - 1.0 : alpha * interior;
    return static_cast<int>(std::floor(allowed + kSlack)) + 1;
  };
}

bool dominates(const Graph& graph, const Membership& members) {
  for (NodeId v = 0; v < graph.size(); ++v) {
    if (members[v]) continue;
    const auto nbrs = graph.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](NodeId u) { return members[u] != 0; })) {
      return false;
    }
  }
  return true;
}

bool induces_connected(const Graph& graph, const Membership& members) {
  std::vector<int> labels;
  return label_components(graph, members, -1, labels) == 1;
}

bool verify_cds(const Graph& graph, std::span<const NodeId> nodes) {
  if (nodes.empty()) return false;
  for (NodeId v : nodes) {
    if (v < 0 || v >= graph.size()) return false;
  }
  const auto members = to_membership(graph.size(), nodes);
  return dominates(graph, members) && induces_connected(graph, members);
}

int backbone_hop_dist(const Graph& graph, std::span<const NodeId> backbone, NodeId a, NodeId b) {
  const auto members = to_membership(graph.size(), backbone);
  std::vector<std::int32_t> row(graph.size());
  bfs_row(graph, a, &members, row);
  return row[b];
}

std::vector<NodeId> degree_ranking(const Graph& graph) {
  std::vector<NodeId> ranking(graph.size());
  std::iota(ranking.begin(), ranking.end(), 0);
  std::stable_sort(ranking.begin(), ranking.end(),
                   [&](NodeId a, NodeId b) { return graph.degree(a) > graph.degree(b); });
  return ranking;
}

NodeSet build_mis(const Graph& graph, std::span<const NodeId> ranking) {
  if (static_cast<int>(ranking.size()) != graph.size()) {
    throw std::invalid_argument("ranking must list every node exactly once");
  }
  Membership blocked(graph.size(), 0);
  Membership selected(graph.size(), 0);
  for (NodeId v : ranking) {
    if (blocked[v]) continue;
    selected[v] = 1;
    blocked[v] = 1;
    for (NodeId u : graph.neighbors(v)) blocked[u] = 1;
  }
  return to_node_set(selected);
}

NodeSet connect_mis(const Graph& graph, std::span<const NodeId> mis) {
  const int n = graph.size();
  auto members = to_membership(n, mis);
  std::vector<int> labels;
  while (label_components(graph, members, -1, labels) > 1) {
    // Component each outsider touches when it touches exactly one, else -1.
    std::vector<int> sole(n, -1);
    NodeId best = -1;
    std::size_t best_score = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (members[v]) continue;
      const auto touched = touched_components(graph, v, labels);
      if (touched.size() == 1) sole[v] = touched.front();
      if (touched.size() > best_score) {
        best_score = touched.size();
        best = v;
      }
    }
    if (best_score == 0) throw std::invalid_argument("connect_mis: graph is disconnected");
    if (best_score == 1) {
      // Prefer the first half of a two-node bridge between components.
      for (NodeId v = 0; v < n; ++v) {
        if (sole[v] < 0) continue;
        const auto nbrs = graph.neighbors(v);
        const bool bridges = std::any_of(nbrs.begin(), nbrs.end(), [&](NodeId u) {
          return !members[u] && sole[u] >= 0 && sole[u] != sole[v];
        });
        if (bridges) {
          best = v;
          break;
        }
      }
    }
    members[best] = 1;
  }
  return to_node_set(members);
}

std::vector<NodeId> lex_shortest_path(const Graph& graph, NodeId a, NodeId b) {
  std::vector<std::int32_t> to_b(graph.size());
  bfs_row(graph, b, nullptr, to_b);
  if (to_b[a] == DistanceMatrix::kUnreachable) {
    throw std::invalid_argument("no path between requested nodes");
  }
  std::vector<NodeId> path{a};
  NodeId current = a;
  while (current != b) {
    for (NodeId u : graph.neighbors(current)) {
      if (to_b[u] == to_b[current] - 1) {
        current = u;
        break;
      }
    }
    path.push_back(current);
  }
  return path;
}

NodeSet stretch_repair(const Graph& graph, std::span<const NodeId> backbone,
                       const StretchBound& bound) {
  constexpr int kUnroutable = 1 << 28;
  const int n = graph.size();
  auto members = to_membership(n, backbone);
  const auto hops = all_pairs_hop_dist(graph);

  std::vector<int> limit(static_cast<std::size_t>(n) + 1, 0);
  for (int d = 1; d <= n; ++d) {
    limit[d] = bound(d);
    if (limit[d] < d) throw std::invalid_argument("stretch bound below identity");
  }

  while (true) {
    const auto routed = all_pairs_backbone_dist(graph, members);
    NodeId worst_a = -1;
    NodeId worst_b = -1;
    std::int64_t worst_num = 0;  // ratio worst_num / worst_den
    std::int64_t worst_den = 1;
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        const int d = hops.at(a, b);
        if (d <= 0) continue;
        // Unreachable pairs outrank every finite ratio.
        int dd = routed.at(a, b);
        if (dd == DistanceMatrix::kUnreachable) dd = kUnroutable;
        else if (dd <= limit[d]) continue;
        if (worst_a == -1 ||
            static_cast<std::int64_t>(dd) * worst_den > worst_num * static_cast<std::int64_t>(d)) {
          worst_a = a;
          worst_b = b;
          worst_num = dd;
          worst_den = d;
        }
      }
    }
    if (worst_a == -1) break;
    add_path_interior(graph, worst_a, worst_b, members);
  }
  return to_node_set(members);
}

int induced_diameter(const Graph& graph, std::span<const NodeId> backbone) {
  const auto members = to_membership(graph.size(), backbone);
  std::vector<std::int32_t> row(graph.size());
  int diameter = 0;
  for (NodeId a : backbone) {
    bfs_row(graph, a, &members, row);
    for (NodeId b : backbone) diameter = std::max(diameter, static_cast<int>(row[b]));
  }
  return diameter;
}

NodeSet induced_cut_vertices(const Graph& graph, std::span<const NodeId> backbone) {
  const auto members = to_membership(graph.size(), backbone);
  return CutVertexFinder(graph, members).run();
}

NodeSet resilience_augment(const Graph& graph, std::span<const NodeId> backbone) {
  auto members = to_membership(graph.size(), backbone);
  const auto cuts = induced_cut_vertices(graph, backbone);
  std::vector<int> labels;
  for (NodeId v : cuts) {
    if (label_components(graph, members, v, labels) < 2) continue;
    for (NodeId w = 0; w < graph.size(); ++w) {
      if (members[w]) continue;
      if (touched_components(graph, w, labels).size() >= 2) {
        members[w] = 1;
        break;
      }
    }
  }
  return to_node_set(members);
}

Backbone cds_greedy(const Graph& graph) {
  const auto ranking = degree_ranking(graph);
  return {Scheme::kGreedy, connect_mis(graph, build_mis(graph, ranking))};
}

Backbone cds_diameter(const Graph& graph) {
  auto members = to_membership(graph.size(), cds_greedy(graph).nodes);
  const auto hops = all_pairs_hop_dist(graph);
  int graph_diameter = 0;
  for (NodeId a = 0; a < graph.size(); ++a) {
    for (NodeId b = 0; b < graph.size(); ++b) {
      graph_diameter = std::max(graph_diameter, static_cast<int>(hops.at(a, b)));
    }
  }

  std::vector<std::int32_t> row(graph.size());
  while (true) {
    const auto nodes = to_node_set(members);
    NodeId far_a = -1;
    NodeId far_b = -1;
    int longest = -1;
    for (NodeId a : nodes) {
      bfs_row(graph, a, &members, row);
      for (NodeId b : nodes) {
        if (b > a && row[b] > longest) {
          longest = row[b];
          far_a = a;
          far_b = b;
        }
      }
    }
    if (far_a == -1 || longest <= graph_diameter + 2) break;
    add_path_interior(graph, far_a, far_b, members);
  }
  return {Scheme::kDiameter, to_node_set(members)};
}

Backbone cds_alpha_moc(const Graph& graph, AlphaMocParams params) {
  const auto bound = alpha_moc_bound(params.alpha);
  return {Scheme::kAlphaMoc, stretch_repair(graph, cds_greedy(graph).nodes, bound)};
}

std::vector<NodeId> collab_cover_selection(const Graph& graph) {
  const int n = graph.size();
  Membership dominated(n, 0);
  std::vector<NodeId> order;
  while (true) {
    NodeId best = -1;
    int best_open = 0;
    int best_closed = 1;
    for (NodeId v = 0; v < n; ++v) {
      if (dominated[v]) continue;
      int open = 1;  // v itself is undominated
      for (NodeId u : graph.neighbors(v)) open += dominated[u] ? 0 : 1;
      const int closed = graph.degree(v) + 1;
      if (best == -1) {
        best = v;
        best_open = open;
        best_closed = closed;
        continue;
      }
      const auto lhs = static_cast<std::int64_t>(open) * best_closed;
      const auto rhs = static_cast<std::int64_t>(best_open) * closed;
      if (lhs > rhs || (lhs == rhs && graph.degree(v) > graph.degree(best))) {
        best = v;
        best_open = open;
        best_closed = closed;
      }
    }
    if (best == -1) break;
    order.push_back(best);
    dominated[best] = 1;
    for (NodeId u : graph.neighbors(best)) dominated[u] = 1;
  }
  return order;
}

Backbone cds_collab_cover(const Graph& graph) {
  auto mis = collab_cover_selection(graph);
  std::sort(mis.begin(), mis.end());
  return {Scheme::kCollabCover, connect_mis(graph, mis)};
}

Backbone cds_guaranteed(const Graph& graph) {
  return {Scheme::kGuaranteed,
          stretch_repair(graph, cds_greedy(graph).nodes, multiplicative_bound(7))};
}

Backbone cds_resilient(const Graph& graph) {
  const auto repaired = stretch_repair(graph, cds_greedy(graph).nodes, multiplicative_bound(5));
  return {Scheme::kResilient, resilience_augment(graph, repaired)};
}

Backbone build_backbone(const Graph& graph, Scheme scheme, AlphaMocParams params) {
  switch (scheme) {
    case Scheme::kGreedy: return cds_greedy(graph);
    case Scheme::kDiameter: return cds_diameter(graph);
    case Scheme::kAlphaMoc: return cds_alpha_moc(graph, params);
    case Scheme::kCollabCover: return cds_collab_cover(graph);
    case Scheme::kGuaranteed: return cds_guaranteed(graph);
    case Scheme::kResilient: return cds_resilient(graph);
  }
  throw std::invalid_argument("unknown scheme");
}

NodeSet min_cds_oracle(const Graph& graph) {
  const int n = graph.size();
  if (n > kMinCdsOracleLimit) {
    throw InstanceTooLarge("instance too large: min_cds_oracle supports n <= " +
                           std::to_string(kMinCdsOracleLimit));
  }
  if (n == 0) throw std::invalid_argument("empty graph has no dominating set");
  for (int k = 1; k <= n; ++k) {
    std::vector<NodeId> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (verify_cds(graph, pick)) return pick;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::invalid_argument("graph has no connected dominating set (disconnected)");
}

nlohmann::ordered_json to_json(const Backbone& backbone) {
  nlohmann::ordered_json doc;
  doc["scheme"] = scheme_name(backbone.scheme);
  doc["nodes"] = backbone.nodes;
  return doc;
}

Backbone backbone_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("scheme") || !doc.contains("nodes")) {
    throw std::invalid_argument("backbone JSON needs \"scheme\" and \"nodes\"");
  }
  const auto name = doc.at("scheme").get<std::string>();
  const auto scheme = parse_scheme(name);
  if (!scheme) throw std::invalid_argument("unknown scheme \"" + name + "\"");
  Backbone backbone{*scheme, doc.at("nodes").get<NodeSet>()};
  std::sort(backbone.nodes.begin(), backbone.nodes.end());
  if (std::adjacent_find(backbone.nodes.begin(), backbone.nodes.end()) != backbone.nodes.end()) {
    throw std::invalid_argument("backbone lists a node twice");
  }
  if (!backbone.nodes.empty() && backbone.nodes.front() < 0) {
    throw std::invalid_argument("negative node index in backbone");
  }
  return backbone;
}

}  // namespace cdsbench
