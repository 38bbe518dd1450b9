#include "cdsbench/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cdsbench/backbone.hpp"
#include "cdsbench/harness.hpp"
#include "cdsbench/kernels.hpp"
#include "cdsbench/metrics.hpp"
#include "cdsbench/plot.hpp"
#include "cdsbench/udg.hpp"

namespace cdsbench {

namespace {

/// Usage or input problem; reported on stderr with exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << contents;
}

nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

UnitDiskGraph load_graph(const std::string& path) {
  try {
    return udg_from_json(parse_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void apply_thread_cap() {
  const char* value = std::getenv("CDSBENCH_THREADS");
  if (value == nullptr || *value == '\0') return;
  char* end = nullptr;
  const long threads = std::strtol(value, &end, 10);
  if (*end != '\0' || threads < 0) throw UsageError("CDSBENCH_THREADS must be a count >= 0");
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(static_cast<int>(threads));
#endif
}

struct GenArgs {
  UdgSpec spec;
  std::string out;
};

struct CdsArgs {
  std::string graph;
  std::string scheme = "RESILIENT";
  double alpha = 5.0;
  std::string out;
};

struct RunArgs {
  std::string config;
  std::string out_dir = ".";
  std::string tradeoff;
};

struct VerifyArgs {
  std::string graph;
  std::string backbone;
};

struct PlotArgs {
  std::string input;
  std::string metric = "cds_size";
  std::vector<double> panels;
  std::vector<std::string> schemes;
  std::string out;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  try {
    args.spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto graph = generate_udg(args.spec);
  write_file(args.out, to_json(graph).dump(2) + "\n");
  out << "nodes=" << graph.size() << " edges=" << graph.graph().edge_count() << '\n';
  return kExitOk;
}

int cmd_cds(const CdsArgs& args, std::ostream& out) {
  const auto scheme = parse_scheme(args.scheme);
  if (!scheme) throw UsageError("unknown scheme " + args.scheme);
  if (!(args.alpha >= 1.0)) throw UsageError("--alpha must be >= 1");
  const auto graph = load_graph(args.graph);
  const auto backbone = build_backbone(graph.graph(), *scheme, {args.alpha});
  write_file(args.out, to_json(backbone).dump() + "\n");
  out << "scheme=" << scheme_name(backbone.scheme) << " size=" << backbone.nodes.size() << '\n';
  return kExitOk;
}

int cmd_run(const RunArgs& args, std::ostream& out) {
  const auto config = sweep_config_from_json(read_file(args.config));
  const auto result = run_sweep(config);

  const std::filesystem::path dir(args.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create " + dir.string() + ": " + ec.message());

  std::ostringstream instances;
  write_instances_csv(instances, result);
  write_file((dir / "instances.csv").string(), instances.str());
  std::ostringstream summary;
  write_summary_csv(summary, result);
  write_file((dir / "summary.csv").string(), summary.str());
  if (!args.tradeoff.empty()) {
    std::ostringstream tradeoff;
    write_tradeoff_csv(tradeoff, summarize_tradeoff(result));
    write_file(args.tradeoff, tradeoff.str());
  }

  const std::size_t width = config.schemes.size();
  std::size_t feasible = 0;
  std::size_t points = 0;
  for (std::size_t i = 0; i < result.rows.size(); i += width) {
    ++points;
    if (result.rows[i].feasible) {
      ++feasible;
    } else {
      out << "infeasible grid point n=" << result.rows[i].nodes
          << " r=" << format_number(result.rows[i].range) << '\n';
    }
  }
  out << "grid points: " << points << " (" << feasible << " feasible), instance rows: "
      << result.instances.size() << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const auto graph = load_graph(args.graph);
  Backbone backbone;
  try {
    backbone = backbone_from_json(parse_json_file(args.backbone));
  } catch (const std::exception& e) {
    throw UsageError(args.backbone + ": " + e.what());
  }
  const auto& g = graph.graph();
  if (!backbone.nodes.empty() && backbone.nodes.back() >= g.size()) {
    throw UsageError(args.backbone + ": node index outside graph");
  }
  const auto members = to_membership(g.size(), backbone.nodes);
  const bool dominating = !backbone.nodes.empty() && dominates(g, members);
  const bool connected = !backbone.nodes.empty() && induces_connected(g, members);

  const auto hops = all_pairs_hop_dist(g);
  const auto routed = all_pairs_backbone_dist(g, members);
  bool bounded = true;
  std::int64_t num = 1;
  std::int64_t den = 1;
  for (NodeId a = 0; a < g.size() && bounded; ++a) {
    for (NodeId b = a + 1; b < g.size(); ++b) {
      const std::int64_t d = hops.at(a, b);
      const std::int64_t dd = routed.at(a, b);
      if (dd == DistanceMatrix::kUnreachable) {
        bounded = false;
        break;
      }
      if (dd * den > num * d) {
        num = dd;
        den = d;
      }
    }
  }
  const double stretch = static_cast<double>(num) / static_cast<double>(den);
  const bool within5 = bounded && num <= 5 * den;
  const bool within7 = bounded && num <= 7 * den;

  auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  out << "scheme: " << scheme_name(backbone.scheme) << " size=" << backbone.nodes.size() << '\n';
  out << "domination: " << verdict(dominating) << '\n';
  out << "connectivity: " << verdict(connected) << '\n';
  out << "max_stretch: " << (bounded ? format_number(stretch) : std::string("unbounded")) << '\n';
  out << "stretch<=5: " << verdict(within5) << '\n';
  out << "stretch<=7: " << verdict(within7) << '\n';
  return dominating && connected && within5 && within7 ? kExitOk : kExitVerifyFailed;
}

int cmd_plot(const PlotArgs& args, std::ostream& out) {
  std::istringstream in(read_file(args.input));
  const auto table = read_csv(in);
  PlotSpec spec;
  spec.metric = args.metric;
  spec.panels = args.panels.empty() ? ranges_in(table) : args.panels;
  if (args.schemes.empty()) {
    spec.series = schemes_in(table);
  } else {
    for (const auto& name : args.schemes) {
      const auto scheme = parse_scheme(name);
      if (!scheme) throw UsageError("unknown scheme " + name);
      spec.series.push_back(*scheme);
    }
  }
  write_file(args.out, render_plot(table, spec));
  out << "panels=" << spec.panels.size() << " series=" << spec.series.size() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected dominating set benchmark for unit disk graphs", "cdsbench"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a connected random unit disk graph");
  gen_cmd->add_option("--nodes", gen.spec.node_count, "Node count")->required();
  gen_cmd->add_option("--range", gen.spec.transmission_range, "Transmission range")->required();
  gen_cmd->add_option("--seed", gen.spec.seed, "PRNG seed");
  gen_cmd->add_option("--area-min", gen.spec.area_min, "Lower coordinate bound");
  gen_cmd->add_option("--area-max", gen.spec.area_max, "Upper coordinate bound");
  gen_cmd->add_option("--retries", gen.spec.retry_budget, "Rejection-sampling draw budget");
  gen_cmd->add_option("--out", gen.out, "Graph JSON output path")->required();

  CdsArgs cds;
  auto* cds_cmd = app.add_subcommand("cds", "Build a backbone for a graph file");
  cds_cmd->add_option("--graph", cds.graph, "Graph JSON")->required();
  cds_cmd->add_option("--scheme", cds.scheme, "Scheme identifier");
  cds_cmd->add_option("--alpha", cds.alpha, "ALPHA_MOC multiplier");
  cds_cmd->add_option("--out", cds.out, "Backbone JSON output path")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a sweep and write instances.csv + summary.csv");
  run_cmd->add_option("--config", run.config, "Sweep config JSON")->required();
  run_cmd->add_option("--out", run.out_dir, "Output directory");
  run_cmd->add_option("--tradeoff", run.tradeoff, "Also write the trade-off rank table here");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a backbone against its graph");
  verify_cmd->add_option("--graph", verify.graph, "Graph JSON")->required();
  verify_cmd->add_option("--backbone", verify.backbone, "Backbone JSON")->required();

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render summary.csv as an SVG panel plot");
  plot_cmd->add_option("--input", plot.input, "summary.csv")->required();
  plot_cmd->add_option("--metric", plot.metric, "cds_size, mrpl or arpl");
  plot_cmd->add_option("--panels", plot.panels, "Transmission ranges, one panel each");
  plot_cmd->add_option("--schemes", plot.schemes, "Schemes to draw");
  plot_cmd->add_option("--out", plot.out, "SVG output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    apply_thread_cap();
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (cds_cmd->parsed()) return cmd_cds(cds, out);
    if (run_cmd->parsed()) return cmd_run(run, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (plot_cmd->parsed()) return cmd_plot(plot, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PlotError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConnectivityUnattainable& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cdsbench
