#include "cdsbench/udg.hpp"

#include <cmath>
#include <string>

#include "cdsbench/rng.hpp"

namespace cdsbench {

namespace {

bool within(const Point& a, const Point& b, double range_sq) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= range_sq;
}

}  // namespace

void UdgSpec::validate() const {
  if (node_count < 1) throw std::invalid_argument("node_count must be >= 1");
  if (!(transmission_range > 0.0) || !std::isfinite(transmission_range)) {
    throw std::invalid_argument("transmission_range must be positive");
  }
  if (!(area_min < area_max)) throw std::invalid_argument("area_min must be < area_max");
  if (retry_budget < 1) throw std::invalid_argument("retry_budget must be >= 1");
}

std::vector<std::vector<NodeId>> build_adjacency(const std::vector<Point>& coords, double range) {
  const auto n = static_cast<NodeId>(coords.size());
  const double range_sq = range * range;
  std::vector<std::vector<NodeId>> adjacency(coords.size());
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (within(coords[a], coords[b], range_sq)) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
      }
    }
  }
  return adjacency;
}

bool disk_graph_connected(const std::vector<Point>& coords, double range) {
  const auto n = static_cast<NodeId>(coords.size());
  if (n <= 1) return true;
  const double range_sq = range * range;
  // Unvisited nodes live in the tail of `order`; each visit swaps them forward.
  std::vector<NodeId> order(coords.size());
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  NodeId visited = 1;
  for (NodeId head = 0; head < visited; ++head) {
    const Point& p = coords[order[head]];
    for (NodeId i = visited; i < n; ++i) {
      if (within(p, coords[order[i]], range_sq)) {
        std::swap(order[i], order[visited]);
        ++visited;
      }
    }
  }
  return visited == n;
}

UnitDiskGraph::UnitDiskGraph(std::vector<Point> coords, double range)
    : coords_(std::move(coords)), range_(range) {
  if (coords_.empty()) throw std::invalid_argument("unit disk graph needs at least one node");
  if (!(range_ > 0.0)) throw std::invalid_argument("range must be positive");
  graph_ = Graph(build_adjacency(coords_, range_));
  if (!is_connected(graph_)) throw std::invalid_argument("unit disk graph is disconnected");
}

UnitDiskGraph generate_udg(const UdgSpec& spec) {
  spec.validate();
  Xoshiro256 rng(spec.seed);
  std::vector<Point> coords(static_cast<std::size_t>(spec.node_count));
  for (int draw = 0; draw < spec.retry_budget; ++draw) {
    for (auto& p : coords) {
      p.x = rng.uniform(spec.area_min, spec.area_max);
      p.y = rng.uniform(spec.area_min, spec.area_max);
    }
    if (disk_graph_connected(coords, spec.transmission_range)) {
      return UnitDiskGraph(coords, spec.transmission_range);
    }
  }
  throw ConnectivityUnattainable("connectivity unattainable: no connected draw for n=" +
                                 std::to_string(spec.node_count) +
                                 " r=" + std::to_string(spec.transmission_range) + " within " +
                                 std::to_string(spec.retry_budget) + " draws");
}

nlohmann::ordered_json to_json(const UnitDiskGraph& graph) {
  nlohmann::ordered_json doc;
  doc["range"] = graph.range();
  auto coords = nlohmann::ordered_json::array();
  for (const auto& p : graph.coords()) coords.push_back({p.x, p.y});
  doc["coords"] = std::move(coords);
  return doc;
}

UnitDiskGraph udg_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("range") || !doc.contains("coords")) {
    throw std::invalid_argument("graph JSON needs \"range\" and \"coords\"");
  }
  const auto& range = doc.at("range");
  if (!range.is_number()) throw std::invalid_argument("\"range\" must be a number");
  std::vector<Point> coords;
  for (const auto& entry : doc.at("coords")) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw std::invalid_argument("each coordinate must be [x, y]");
    }
    coords.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  return UnitDiskGraph(std::move(coords), range.get<double>());
}

}  // namespace cdsbench
