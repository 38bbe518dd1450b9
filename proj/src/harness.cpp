#include "cdsbench/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "cdsbench/kernels.hpp"
#include "cdsbench/rng.hpp"
#include "cdsbench/udg.hpp"

namespace cdsbench {

namespace {

constexpr std::array<std::string_view, 6> kMetricNames = {"cds_size", "diameter", "abpl",
                                                          "mrpl",     "arpl",     "max_stretch"};

/// 1-based line of the first occurrence of `"key"` in text, or 0.
std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
}

[[noreturn]] void fail_at(std::string_view text, std::string_view key, const std::string& what) {
  const auto line = line_of_key(text, key);
  std::string message = "config";
  if (line > 0) message += ":" + std::to_string(line);
  throw ConfigError(message + ": field \"" + std::string(key) + "\": " + what);
}

struct InstanceOutcome {
  bool connected = false;
  std::vector<MetricReport> reports;  // one per configured scheme
};

InstanceOutcome run_instance(const SweepConfig& config, int nodes, double range, int instance) {
  UdgSpec spec;
  spec.node_count = nodes;
  spec.transmission_range = range;
  spec.area_min = config.area_min;
  spec.area_max = config.area_max;
  spec.seed = derive_instance_seed(config.base_seed, static_cast<std::uint64_t>(nodes), range,
                                   static_cast<std::uint64_t>(instance));
  spec.retry_budget = config.retry_budget;

  InstanceOutcome outcome;
  try {
    const auto udg = generate_udg(spec);
    const auto hops = all_pairs_hop_dist(udg.graph());
    for (Scheme scheme : config.schemes) {
      const auto backbone = build_backbone(udg.graph(), scheme, config.alpha);
      outcome.reports.push_back(full_report(udg.graph(), backbone, hops));
    }
    outcome.connected = true;
  } catch (const ConnectivityUnattainable&) {
    outcome.connected = false;
  }
  return outcome;
}

std::string graph_id(int nodes, double range, int instance) {
  return "n" + std::to_string(nodes) + "-r" + format_number(range) + "-i" +
         std::to_string(instance);
}

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

template <typename Key>
std::vector<int> competition_ranks(const std::vector<Key>& values) {
  std::vector<int> ranks(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (i != j && values[j] < values[i] && !nearly_equal(values[i], values[j])) ++ranks[i];
    }
  }
  return ranks;
}

}  // namespace

std::string_view metric_name(Metric metric) { return kMetricNames[static_cast<int>(metric)]; }

double metric_value(const MetricReport& report, Metric metric) {
  switch (metric) {
    case Metric::kCdsSize: return report.cds_size;
    case Metric::kDiameter: return report.diameter;
    case Metric::kAbpl: return report.abpl;
    case Metric::kMrpl: return report.mrpl;
    case Metric::kArpl: return report.arpl;
    case Metric::kMaxStretch: return report.max_stretch;
  }
  return 0.0;
}

void SweepConfig::validate() const {
  if (node_counts.empty()) throw ConfigError("node_counts must not be empty");
  for (std::size_t i = 0; i < node_counts.size(); ++i) {
    if (node_counts[i] < 1) throw ConfigError("node_counts entries must be >= 1");
    if (i > 0 && node_counts[i] <= node_counts[i - 1]) {
      throw ConfigError("node_counts must be strictly increasing");
    }
  }
  if (ranges.empty()) throw ConfigError("ranges must not be empty");
  for (double r : ranges) {
    if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("ranges entries must be positive");
  }
  if (instances_per_point < 1) throw ConfigError("instances_per_point must be >= 1");
  if (schemes.empty()) throw ConfigError("schemes must not be empty");
  if (std::set<Scheme>(schemes.begin(), schemes.end()).size() != schemes.size()) {
    throw ConfigError("schemes must not repeat");
  }
  if (!(alpha.alpha >= 1.0)) throw ConfigError("alpha must be >= 1");
  if (!(area_min < area_max)) throw ConfigError("area_min must be < area_max");
  if (retry_budget < 1) throw ConfigError("retry_budget must be >= 1");
}

SweepConfig sweep_config_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw ConfigError("config:" + std::to_string(line) + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config:1: top level must be a JSON object");

  SweepConfig config;
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "node_counts") {
        config.node_counts = value.get<std::vector<int>>();
      } else if (key == "ranges") {
        config.ranges = value.get<std::vector<double>>();
      } else if (key == "instances_per_point") {
        config.instances_per_point = value.get<int>();
      } else if (key == "base_seed") {
        if (!value.is_number_unsigned()) fail_at(text, key, "must be a non-negative integer");
        config.base_seed = value.get<std::uint64_t>();
      } else if (key == "schemes") {
        config.schemes.clear();
        for (const auto& entry : value) {
          const auto scheme = parse_scheme(entry.get<std::string>());
          if (!scheme) fail_at(text, key, "unknown scheme " + entry.dump());
          config.schemes.push_back(*scheme);
        }
      } else if (key == "alpha") {
        config.alpha.alpha = value.get<double>();
      } else if (key == "area_min") {
        config.area_min = value.get<double>();
      } else if (key == "area_max") {
        config.area_max = value.get<double>();
      } else if (key == "retry_budget") {
        config.retry_budget = value.get<int>();
      } else {
        fail_at(text, key, "unknown field");
      }
    } catch (const nlohmann::json::exception& e) {
      fail_at(text, key, e.what());
    }
  }
  try {
    config.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return config;
}

std::string sweep_config_to_json(const SweepConfig& config) {
  nlohmann::ordered_json doc;
  doc["node_counts"] = config.node_counts;
  doc["ranges"] = config.ranges;
  doc["instances_per_point"] = config.instances_per_point;
  doc["base_seed"] = config.base_seed;
  auto schemes = nlohmann::ordered_json::array();
  for (Scheme s : config.schemes) schemes.push_back(scheme_name(s));
  doc["schemes"] = std::move(schemes);
  doc["alpha"] = config.alpha.alpha;
  doc["area_min"] = config.area_min;
  doc["area_max"] = config.area_max;
  doc["retry_budget"] = config.retry_budget;
  return doc.dump(2);
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  const int per_point = config.instances_per_point;
  const int point_count = static_cast<int>(config.node_counts.size() * config.ranges.size());
  const int job_count = point_count * per_point;

  std::vector<InstanceOutcome> outcomes(static_cast<std::size_t>(job_count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int job = 0; job < job_count; ++job) {
    const int point = job / per_point;
    const int nodes = config.node_counts[point / config.ranges.size()];
    const double range = config.ranges[point % config.ranges.size()];
    try {
      outcomes[job] = run_instance(config, nodes, range, job % per_point);
    } catch (...) {
#pragma omp critical(cdsbench_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  result.config = config;
  for (int point = 0; point < point_count; ++point) {
    const int nodes = config.node_counts[point / config.ranges.size()];
    const double range = config.ranges[point % config.ranges.size()];
    for (std::size_t s = 0; s < config.schemes.size(); ++s) {
      SummaryRow row;
      row.nodes = nodes;
      row.range = range;
      row.scheme = config.schemes[s];
      std::vector<const MetricReport*> reports;
      for (int i = 0; i < per_point; ++i) {
        const auto& outcome = outcomes[static_cast<std::size_t>(point) * per_point + i];
        if (!outcome.connected) continue;
        reports.push_back(&outcome.reports[s]);
        result.instances.push_back(
            {graph_id(nodes, range, i), nodes, range, i,
             derive_instance_seed(config.base_seed, static_cast<std::uint64_t>(nodes), range,
                                  static_cast<std::uint64_t>(i)),
             row.scheme, outcome.reports[s]});
      }
      row.instances_used = static_cast<int>(reports.size());
      row.feasible = !reports.empty();
      if (row.feasible) {
        for (Metric metric : kAllMetrics) {
          double sum = 0.0;
          for (const auto* r : reports) sum += metric_value(*r, metric);
          const double mean = sum / static_cast<double>(reports.size());
          double squares = 0.0;
          for (const auto* r : reports) {
            const double delta = metric_value(*r, metric) - mean;
            squares += delta * delta;
          }
          const double std_dev =
              reports.size() > 1 ? std::sqrt(squares / static_cast<double>(reports.size() - 1))
                                 : 0.0;
          row.stats[static_cast<int>(metric)] = {mean, std_dev};
        }
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

SweepResult run_cardinality_sweep(const SweepConfig& config) {
  if (config.ranges.size() != 1) {
    throw ConfigError("cardinality sweep needs exactly one transmission range");
  }
  return run_sweep(config);
}

std::vector<TradeoffRow> summarize_tradeoff(const SweepResult& result) {
  if (result.config.schemes.size() < 2) {
    throw std::invalid_argument("trade-off summary needs at least two schemes");
  }
  std::vector<TradeoffRow> table;
  const std::size_t width = result.config.schemes.size();
  for (std::size_t start = 0; start + width <= result.rows.size(); start += width) {
    if (!result.rows[start].feasible) continue;
    std::vector<double> sizes;
    std::vector<double> routes;
    for (std::size_t k = 0; k < width; ++k) {
      const auto& row = result.rows[start + k];
      sizes.push_back(row.stat(Metric::kCdsSize).mean);
      routes.push_back(row.stat(Metric::kMrpl).mean);
    }
    const auto size_ranks = competition_ranks(sizes);
    const auto route_ranks = competition_ranks(routes);
    for (std::size_t k = 0; k < width; ++k) {
      const auto& row = result.rows[start + k];
      table.push_back({row.nodes, row.range, row.scheme, sizes[k], size_ranks[k], routes[k],
                       route_ranks[k], size_ranks[k] + route_ranks[k]});
    }
  }
  return table;
}

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buffer.data(), end);
}

void write_instances_csv(std::ostream& out, const SweepResult& result) {
  out << "graph_id,scheme,n,r";
  for (Metric m : kAllMetrics) out << ',' << metric_name(m);
  out << '\n';
  for (const auto& rec : result.instances) {
    out << rec.graph_id << ',' << scheme_name(rec.scheme) << ',' << rec.nodes << ','
        << format_number(rec.range);
    for (Metric m : kAllMetrics) out << ',' << format_number(metric_value(rec.report, m));
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, const SweepResult& result) {
  out << "n,r,scheme,status,instances_used";
  for (Metric m : kAllMetrics) out << ',' << metric_name(m) << "_mean," << metric_name(m) << "_std";
  out << '\n';
  for (const auto& row : result.rows) {
    out << row.nodes << ',' << format_number(row.range) << ',' << scheme_name(row.scheme) << ','
        << (row.feasible ? "ok" : "infeasible") << ',' << row.instances_used;
    for (Metric m : kAllMetrics) {
      if (row.feasible) {
        out << ',' << format_number(row.stat(m).mean) << ',' << format_number(row.stat(m).std_dev);
      } else {
        out << ",,";
      }
    }
    out << '\n';
  }
}

void write_tradeoff_csv(std::ostream& out, const std::vector<TradeoffRow>& rows) {
  out << "n,r,scheme,cds_size_mean,size_rank,mrpl_mean,mrpl_rank,balance\n";
  for (const auto& row : rows) {
    out << row.nodes << ',' << format_number(row.range) << ',' << scheme_name(row.scheme) << ','
        << format_number(row.cds_size_mean) << ',' << row.size_rank << ','
        << format_number(row.mrpl_mean) << ',' << row.mrpl_rank << ',' << row.balance << '\n';
  }
}

}  // namespace cdsbench
