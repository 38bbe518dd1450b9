// Unit disk graphs: geometry, seeded generation and JSON persistence.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdsbench/graph.hpp"

namespace cdsbench {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Thrown when no connected draw was found within the retry budget.
class ConnectivityUnattainable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UdgSpec {
  int node_count = 1;
  double transmission_range = 1.0;
  double area_min = 20.0;
  double area_max = 500.0;
  std::uint64_t seed = 0;
  int retry_budget = 10'000;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

/// Closed-disk rule: a and b are adjacent iff a != b and |ab|^2 <= range^2.
std::vector<std::vector<NodeId>> build_adjacency(const std::vector<Point>& coords, double range);

/// Connectivity of the disk graph without materialising adjacency lists.
bool disk_graph_connected(const std::vector<Point>& coords, double range);

class UnitDiskGraph {
 public:
  /// Throws std::invalid_argument if coords is empty, range <= 0, or the
  /// resulting graph is disconnected.
  UnitDiskGraph(std::vector<Point> coords, double range);

  int size() const noexcept { return graph_.size(); }
  double range() const noexcept { return range_; }
  const std::vector<Point>& coords() const noexcept { return coords_; }
  const Graph& graph() const noexcept { return graph_; }

 private:
  std::vector<Point> coords_;
  double range_;
  Graph graph_;
};

/// Rejection sampling: each draw consumes 2n uniforms (x then y per node)
/// from one continuous xoshiro256** stream seeded with spec.seed.
UnitDiskGraph generate_udg(const UdgSpec& spec);

/// {"range": r, "coords": [[x, y], ...]}
nlohmann::ordered_json to_json(const UnitDiskGraph& graph);
UnitDiskGraph udg_from_json(const nlohmann::json& doc);

}  // namespace cdsbench
