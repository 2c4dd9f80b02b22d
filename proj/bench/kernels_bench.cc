// Copyright 2026 The pfgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial versus OpenMP kernels on the default synthetic corpus.

#include <omp.h>

#include <vector>

#include "benchmark/benchmark.h"
#include "pfgraph/kernels.h"
#include "pfgraph/rng.h"
#include "pfgraph/synthetic.h"

namespace pfgraph::kernels {
namespace {

const SyntheticCorpus& Corpus() {
  static const SyntheticCorpus* corpus =
      new SyntheticCorpus(*GenerateSynthetic(SyntheticSpec{}));
  return *corpus;
}

std::vector<EdgeProperty> Queries() {
  const auto& c = Corpus();
  std::vector<EdgeProperty> q;
  for (EdgeIndex e = 0; e < c.graph.edge_count(); e += 5) {
    for (TokenId t = 0; t < 20; ++t) q.push_back({e, t});
  }
  return q;
}

void BM_DegreeStatsSerial(benchmark::State& state) {
  Corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeDegreeStatsSerial(Corpus().graph));
  }
}
BENCHMARK(BM_DegreeStatsSerial)->Unit(benchmark::kMillisecond);

void BM_DegreeStatsParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeDegreeStats(Corpus().graph));
  }
}
BENCHMARK(BM_DegreeStatsParallel)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_CountNeighborsSerial(benchmark::State& state) {
  const auto q = Queries();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CountLabeledNeighborsSerial(Corpus().graph, Corpus().labeling, q));
  }
  state.SetItemsProcessed(state.iterations() * q.size());
}
BENCHMARK(BM_CountNeighborsSerial)->Unit(benchmark::kMillisecond);

void BM_CountNeighborsParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto q = Queries();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CountLabeledNeighbors(Corpus().graph, Corpus().labeling, q));
  }
  state.SetItemsProcessed(state.iterations() * q.size());
}
BENCHMARK(BM_CountNeighborsParallel)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_NgramsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtractNgramsBatchSerial(Corpus().messages));
  }
}
BENCHMARK(BM_NgramsSerial)->Unit(benchmark::kMillisecond);

void BM_NgramsParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtractNgramsBatch(Corpus().messages));
  }
}
BENCHMARK(BM_NgramsParallel)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_LaplaceSerial(benchmark::State& state) {
  std::vector<double> v(1 << 20, 1.0), out(v.size());
  NoiseStream stream(0, "bench", 0);
  for (auto _ : state) {
    AddLaplaceNoiseSerial(v, 10.0, stream, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * v.size());
}
BENCHMARK(BM_LaplaceSerial)->Unit(benchmark::kMillisecond);

void BM_LaplaceParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  std::vector<double> v(1 << 20, 1.0), out(v.size());
  NoiseStream stream(0, "bench", 0);
  for (auto _ : state) {
    AddLaplaceNoise(v, 10.0, stream, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * v.size());
}
BENCHMARK(BM_LaplaceParallel)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pfgraph::kernels

BENCHMARK_MAIN();
