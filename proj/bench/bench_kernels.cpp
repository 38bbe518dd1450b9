// Serial reference vs OpenMP all-pairs kernels on generated unit disk graphs.
#include <benchmark/benchmark.h>

#include "cdsbench/backbone.hpp"
#include "cdsbench/kernels.hpp"
#include "cdsbench/udg.hpp"

namespace {

cdsbench::UnitDiskGraph dense_instance(int nodes) {
  cdsbench::UdgSpec spec;
  spec.node_count = nodes;
  spec.transmission_range = 30.0;
  spec.area_min = 20.0;
  spec.area_max = 120.0;
  spec.seed = 99;
  return cdsbench::generate_udg(spec);
}

void BM_HopDistSerial(benchmark::State& state) {
  const auto udg = dense_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cdsbench::all_pairs_hop_dist_serial(udg.graph()));
}

void BM_HopDistParallel(benchmark::State& state) {
  const auto udg = dense_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cdsbench::all_pairs_hop_dist(udg.graph()));
}

void BM_BackboneDistSerial(benchmark::State& state) {
  const auto udg = dense_instance(static_cast<int>(state.range(0)));
  const auto members =
      cdsbench::to_membership(udg.size(), cdsbench::cds_greedy(udg.graph()).nodes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdsbench::all_pairs_backbone_dist_serial(udg.graph(), members));
  }
}

void BM_BackboneDistParallel(benchmark::State& state) {
  const auto udg = dense_instance(static_cast<int>(state.range(0)));
  const auto members =
      cdsbench::to_membership(udg.size(), cdsbench::cds_greedy(udg.graph()).nodes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cdsbench::all_pairs_backbone_dist(udg.graph(), members));
  }
}

}  // namespace

BENCHMARK(BM_HopDistSerial)->Arg(100)->Arg(400)->Arg(1000);
BENCHMARK(BM_HopDistParallel)->Arg(100)->Arg(400)->Arg(1000);
BENCHMARK(BM_BackboneDistSerial)->Arg(100)->Arg(400)->Arg(1000);
BENCHMARK(BM_BackboneDistParallel)->Arg(100)->Arg(400)->Arg(1000);

BENCHMARK_MAIN();
