// Test fixtures and brute-force oracles.
//
// Nothing here calls into the BFS kernels or the backbone constructions;
// every oracle recomputes its answer by a different route.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include "cdsbench/graph.hpp"
#include "cdsbench/rng.hpp"
#include "cdsbench/udg.hpp"

namespace testing {

using cdsbench::Graph;
using cdsbench::NodeId;
using cdsbench::Point;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

// ---- fixed graph family (all realisable as unit disk graphs) ----

inline std::vector<Point> line_points(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({static_cast<double>(i), 0.0});
  return pts;
}

inline std::vector<Point> polygon_points(int n) {
  // Unit side length: circumradius 1 / (2 sin(pi / n)).
  const double radius = 1.0 / (2.0 * std::sin(std::numbers::pi / n));
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n;
    pts.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return pts;
}

inline cdsbench::UnitDiskGraph path_udg(int n) { return {line_points(n), 1.0}; }
inline cdsbench::UnitDiskGraph cycle_udg(int n) { return {polygon_points(n), 1.0 + 1e-9}; }

/// Center 0, leaves 1..k on the unit circle (k <= 5 keeps leaves apart).
inline cdsbench::UnitDiskGraph star_udg(int leaves) {
  std::vector<Point> pts{{0.0, 0.0}};
  for (int i = 0; i < leaves; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / leaves;
    pts.push_back({std::cos(angle), std::sin(angle)});
  }
  return {pts, 1.0 + 1e-9};
}

inline cdsbench::UnitDiskGraph complete_udg(int n) { return {n >= 3 ? polygon_points(n) : line_points(n), 10.0}; }

inline cdsbench::UnitDiskGraph grid_udg(int rows, int cols) {
  std::vector<Point> pts;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) pts.push_back({static_cast<double>(c), static_cast<double>(r)});
  }
  return {pts, 1.0};
}

inline Graph path_graph(int n) { return path_udg(n).graph(); }
inline Graph cycle_graph(int n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}
inline Graph star_graph(int leaves) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}
inline Graph complete_graph(int n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph::from_edges(n, edges);
}

/// Connected random UDG on [20, 120]^2.
inline cdsbench::UnitDiskGraph random_udg(int n, double range, std::uint64_t seed) {
  cdsbench::UdgSpec spec;
  spec.node_count = n;
  spec.transmission_range = range;
  spec.area_min = 20.0;
  spec.area_max = 120.0;
  spec.seed = seed;
  return cdsbench::generate_udg(spec);
}

// ---- oracles ----

/// Floyd-Warshall over an adjacency test.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int a = 0; a < n; ++a) {
    d[a][a] = 0;
    for (int b = 0; b < n; ++b) {
      if (a != b && g.adjacent(a, b)) d[a][b] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) { return parent_[v] == v ? v : parent_[v] = find(parent_[v]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline bool union_find_connected(const Graph& g) {
  UnionFind uf(g.size());
  int components = g.size();
  for (int a = 0; a < g.size(); ++a) {
    for (NodeId b : g.neighbors(a)) components -= uf.unite(a, b) ? 1 : 0;
  }
  return components <= 1;
}

inline bool union_find_connected(const std::vector<Point>& pts, double range) {
  const int n = static_cast<int>(pts.size());
  UnionFind uf(n);
  int components = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double dx = pts[a].x - pts[b].x;
      const double dy = pts[a].y - pts[b].y;
      if (std::hypot(dx, dy) <= range) components -= uf.unite(a, b) ? 1 : 0;
    }
  }
  return components <= 1;
}

/// Shortest a->b simple path with every interior vertex in `members`, by
/// exhaustive depth-first enumeration (bounded by the best found so far).
inline int enumerate_backbone_dist(const Graph& g, const std::vector<bool>& members, NodeId a,
                                   NodeId b) {
  if (a == b) return 0;
  int best = kInf;
  std::vector<bool> on_path(g.size(), false);
  auto dfs = [&](auto&& self, NodeId v, int length) -> void {
    if (length >= best) return;
    for (int u = 0; u < g.size(); ++u) {
      if (!g.adjacent(v, u) || on_path[u]) continue;
      if (u == b) {
        best = std::min(best, length + 1);
      } else if (members[u]) {
        on_path[u] = true;
        self(self, u, length + 1);
        on_path[u] = false;
      }
    }
  };
  on_path[a] = true;
  dfs(dfs, a, 0);
  return best;
}

inline std::vector<bool> member_flags(int n, const std::vector<NodeId>& nodes) {
  std::vector<bool> flags(n, false);
  for (NodeId v : nodes) flags[v] = true;
  return flags;
}

/// All-pairs d_D by enumeration.
inline std::vector<std::vector<int>> enumerate_all_backbone(const Graph& g,
                                                            const std::vector<NodeId>& nodes) {
  const auto flags = member_flags(g.size(), nodes);
  std::vector<std::vector<int>> d(g.size(), std::vector<int>(g.size(), 0));
  for (int a = 0; a < g.size(); ++a) {
    for (int b = 0; b < g.size(); ++b) d[a][b] = enumerate_backbone_dist(g, flags, a, b);
  }
  return d;
}

/// Dominating + induced-connected check via union-find.
inline bool oracle_is_cds(const Graph& g, const std::vector<NodeId>& nodes) {
  if (nodes.empty()) return false;
  const auto flags = member_flags(g.size(), nodes);
  for (int v = 0; v < g.size(); ++v) {
    if (flags[v]) continue;
    bool covered = false;
    for (NodeId u : nodes) covered = covered || g.adjacent(u, v);
    if (!covered) return false;
  }
  UnionFind uf(g.size());
  int components = static_cast<int>(nodes.size());
  for (NodeId a : nodes) {
    for (NodeId b : nodes) {
      if (a < b && g.adjacent(a, b)) components -= uf.unite(a, b) ? 1 : 0;
    }
  }
  return components == 1;
}

/// Cut vertices of the induced subgraph by removing each member in turn.
inline std::vector<NodeId> articulation_by_removal(const Graph& g,
                                                   const std::vector<NodeId>& nodes) {
  std::vector<NodeId> cuts;
  auto count_components = [&](NodeId skip) {
    UnionFind uf(g.size());
    int components = 0;
    for (NodeId v : nodes) components += v == skip ? 0 : 1;
    for (NodeId a : nodes) {
      for (NodeId b : nodes) {
        if (a != skip && b != skip && a < b && g.adjacent(a, b)) {
          components -= uf.unite(a, b) ? 1 : 0;
        }
      }
    }
    return components;
  };
  const int base = count_components(-1);
  for (NodeId v : nodes) {
    if (count_components(v) > base) cuts.push_back(v);
  }
  return cuts;
}

/// Max over pairs with d >= 1 of dD/d, as an exact fraction, from oracle matrices.
struct Ratio {
  long num = 1;
  long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Ratio worst_stretch(const std::vector<std::vector<int>>& d,
                           const std::vector<std::vector<int>>& dd) {
  Ratio worst;
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      if (d[a][b] >= 1 && static_cast<long>(dd[a][b]) * worst.den > worst.num * d[a][b]) {
        worst = {dd[a][b], d[a][b]};
      }
    }
  }
  return worst;
}

}  // namespace testing
