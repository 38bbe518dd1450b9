// Seeded parameter sweeps over (node count, transmission range, scheme),
// aggregation, trade-off ranking and CSV persistence.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdsbench/backbone.hpp"
#include "cdsbench/metrics.hpp"

namespace cdsbench {

/// Malformed or invalid sweep configuration. `what()` carries the location.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Metric { kCdsSize, kDiameter, kAbpl, kMrpl, kArpl, kMaxStretch };

inline constexpr std::array<Metric, 6> kAllMetrics = {Metric::kCdsSize, Metric::kDiameter,
                                                      Metric::kAbpl,    Metric::kMrpl,
                                                      Metric::kArpl,    Metric::kMaxStretch};

std::string_view metric_name(Metric metric);
double metric_value(const MetricReport& report, Metric metric);

struct SweepConfig {
  std::vector<int> node_counts = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  std::vector<double> ranges = {10, 20, 30, 40};
  int instances_per_point = 20;
  std::uint64_t base_seed = 12345;
  std::vector<Scheme> schemes = {kAllSchemes.begin(), kAllSchemes.end()};
  AlphaMocParams alpha{};
  double area_min = 20.0;
  double area_max = 120.0;
  int retry_budget = 10'000;

  /// Throws ConfigError on invariant violations.
  void validate() const;
};

/// Parses the JSON config (field names as in SweepConfig; "alpha" is a
/// number). Missing fields keep their defaults. Errors name the line.
SweepConfig sweep_config_from_json(std::string_view text);
std::string sweep_config_to_json(const SweepConfig& config);

struct InstanceRecord {
  std::string graph_id;
  int nodes = 0;
  double range = 0.0;
  int instance = 0;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::kGreedy;
  MetricReport report;
};

struct MetricStats {
  double mean = 0.0;
  double std_dev = 0.0;  ///< sample standard deviation, 0 for a single instance
};

struct SummaryRow {
  int nodes = 0;
  double range = 0.0;
  Scheme scheme = Scheme::kGreedy;
  bool feasible = false;
  int instances_used = 0;
  std::array<MetricStats, kAllMetrics.size()> stats{};

  const MetricStats& stat(Metric metric) const { return stats[static_cast<int>(metric)]; }
};

struct SweepResult {
  SweepConfig config;
  std::vector<InstanceRecord> instances;  ///< (n, r, scheme, instance) order
  std::vector<SummaryRow> rows;           ///< (n, r, scheme) order, one per grid cell
};

SweepResult run_sweep(const SweepConfig& config);

/// Fixed-range sweep over node_counts (vertex cardinality axis).
/// Throws ConfigError unless config.ranges has exactly one entry.
SweepResult run_cardinality_sweep(const SweepConfig& config);

struct TradeoffRow {
  int nodes = 0;
  double range = 0.0;
  Scheme scheme = Scheme::kGreedy;
  double cds_size_mean = 0.0;
  int size_rank = 0;
  double mrpl_mean = 0.0;
  int mrpl_rank = 0;
  int balance = 0;  ///< size_rank + mrpl_rank
};

/// Competition ranks (1, 2, 2, 4) per feasible grid point, lower is better.
/// Throws std::invalid_argument when fewer than two schemes are present.
std::vector<TradeoffRow> summarize_tradeoff(const SweepResult& result);

/// Shortest round-trip decimal form.
std::string format_number(double value);

void write_instances_csv(std::ostream& out, const SweepResult& result);
void write_summary_csv(std::ostream& out, const SweepResult& result);
void write_tradeoff_csv(std::ostream& out, const std::vector<TradeoffRow>& rows);

}  // namespace cdsbench
