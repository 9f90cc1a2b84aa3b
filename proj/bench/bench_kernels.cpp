#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "semu/generate.hpp"
#include "semu/kernels.hpp"

namespace {

using namespace semu;

/* Torus-like grid with wrap edges, dense enough that the parallel and the
 * serial kernels see identical nontrivial work. */
Csr grid_csr(int side) {
  std::vector<std::pair<int, int>> edges;
  auto id = [side](int x, int y) { return y * side + x; };
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) {
      if (x + 1 < side) edges.push_back({id(x, y), id(x + 1, y)});
      if (y + 1 < side) edges.push_back({id(x, y), id(x, y + 1)});
    }
  return Csr::from_edges(side * side, edges);
}

void bench_allpairs_serial(benchmark::State& state) {
  Csr g = grid_csr((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(allpairs_hops_serial(g));
}
BENCHMARK(bench_allpairs_serial)->Arg(20)->Arg(40);

void bench_allpairs_parallel(benchmark::State& state) {
  Csr g = grid_csr((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(allpairs_hops_parallel(g));
}
BENCHMARK(bench_allpairs_parallel)->Arg(20)->Arg(40);

void bench_dijkstra_serial(benchmark::State& state) {
  Csr g = grid_csr((int)state.range(0));
  std::vector<int64_t> w(g.nbr.size(), 171);
  std::vector<int> sources;
  for (int v = 0; v < g.n; v += 7) sources.push_back(v);
  for (auto _ : state)
    benchmark::DoNotOptimize(multisource_dijkstra_serial(g, w, sources));
}
BENCHMARK(bench_dijkstra_serial)->Arg(20)->Arg(40);

void bench_dijkstra_parallel(benchmark::State& state) {
  Csr g = grid_csr((int)state.range(0));
  std::vector<int64_t> w(g.nbr.size(), 171);
  std::vector<int> sources;
  for (int v = 0; v < g.n; v += 7) sources.push_back(v);
  for (auto _ : state)
    benchmark::DoNotOptimize(multisource_dijkstra_parallel(g, w, sources));
}
BENCHMARK(bench_dijkstra_parallel)->Arg(20)->Arg(40);

std::vector<SegRec> random_segments(int n, uint64_t seed) {
  Splitmix rng{seed};
  std::vector<SegRec> segs;
  segs.reserve(n);
  for (int i = 0; i < n; ++i) {
    Pt a{(long long)rng.below(5000), (long long)rng.below(5000)};
    Pt b{(long long)rng.below(5000), (long long)rng.below(5000)};
    if (a == b) b.x += 1;
    segs.push_back({a, b, i});
  }
  return segs;
}

void bench_segscan_serial(benchmark::State& state) {
  auto segs = random_segments((int)state.range(0), 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_segment_pairs_serial(segs));
}
BENCHMARK(bench_segscan_serial)->Arg(100)->Arg(400);

void bench_segscan_parallel(benchmark::State& state) {
  auto segs = random_segments((int)state.range(0), 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_segment_pairs_parallel(segs));
}
BENCHMARK(bench_segscan_parallel)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
