#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "semu/generate.hpp"
#include "semu/kernels.hpp"

using namespace semu;

namespace {

/* Random connected graph: a path backbone plus extra random edges. */
Csr random_connected(int n, int extra, uint64_t seed) {
  Splitmix rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  for (int k = 0; k < extra; ++k) {
    int u = (int)rng.below(n), v = (int)rng.below(n);
    if (u == v) continue;
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Csr::from_edges(n, edges);
}

std::vector<SegRec> random_segments(int n, int bbox, uint64_t seed) {
  Splitmix rng(seed);
  std::vector<SegRec> segs;
  for (int i = 0; i < n; ++i) {
    Pt a{(int64_t)rng.below(bbox), (int64_t)rng.below(bbox)};
    Pt b{(int64_t)rng.below(bbox), (int64_t)rng.below(bbox)};
    if (a == b) b.x += 1;
    segs.push_back({a, b, i});
  }
  return segs;
}

}  // namespace

TEST_CASE("csr neighbor lists are ascending and symmetric") {
  Csr g = Csr::from_edges(4, {{2, 3}, {0, 1}, {1, 2}, {0, 2}});
  CHECK(g.n == 4);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(2) == 3);
  CHECK(std::vector<int>(g.begin(2), g.end(2)) == std::vector<int>{0, 1, 3});
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 3));
}

TEST_CASE("bfs distances along a path count hops") {
  Csr g = Csr::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<int32_t> d;
  bfs_fill(g, 0, d);
  CHECK(d == std::vector<int32_t>{0, 1, 2, 3, 4});
  bfs_fill(g, 2, d);
  CHECK(d == std::vector<int32_t>{2, 1, 0, 1, 2});
}

TEST_CASE("bfs marks unreachable vertices") {
  Csr g = Csr::from_edges(4, {{0, 1}, {2, 3}});
  std::vector<int32_t> d;
  bfs_fill(g, 0, d);
  CHECK(d[1] == 1);
  CHECK(d[2] == kUnreached);
  CHECK(d[3] == kUnreached);
}

TEST_CASE("masked bfs ignores vertices outside the mask") {
  /* Path 0-1-2-3-4 with 2 masked out splits the line. */
  Csr g = Csr::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<char> mask = {1, 1, 0, 1, 1};
  std::vector<int32_t> d;
  bfs_fill_masked(g, 0, mask, d);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == kUnreached);
  CHECK(d[3] == kUnreached);
  CHECK(d[4] == kUnreached);
}

TEST_CASE("parallel all-pairs hops equals the serial reference") {
  for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    Csr g = random_connected(60, 80, seed);
    CHECK(allpairs_hops_serial(g) == allpairs_hops_parallel(g));
  }
}

TEST_CASE("dijkstra with uniform weights is a scaled bfs") {
  Csr g = random_connected(40, 30, 11);
  std::vector<int64_t> w(g.nbr.size(), 171);
  std::vector<int64_t> dw;
  dijkstra_fill(g, w, 0, dw);
  std::vector<int32_t> dh;
  bfs_fill(g, 0, dh);
  for (int v = 0; v < g.n; ++v) CHECK(dw[v] == 171 * (int64_t)dh[v]);
}

TEST_CASE("dijkstra picks the lighter of two routes") {
  /* Triangle with a heavy direct edge and a light detour. */
  WeightedCsr wg = weighted_from_edges(3, {{0, 1}, {0, 2}, {1, 2}}, {10, 1, 2});
  std::vector<int64_t> d;
  dijkstra_fill(wg.g, wg.w, 0, d);
  CHECK(d == std::vector<int64_t>{0, 3, 1});
}

TEST_CASE("dijkstra marks unreachable vertices") {
  WeightedCsr wg = weighted_from_edges(3, {{0, 1}}, {5});
  std::vector<int64_t> d;
  dijkstra_fill(wg.g, wg.w, 0, d);
  CHECK(d[2] == kFarWeight);
}

TEST_CASE("parallel multisource dijkstra equals the serial reference") {
  for (uint64_t seed : {7u, 8u, 9u}) {
    Csr g = random_connected(50, 70, seed);
    Splitmix rng(seed * 97);
    std::vector<int64_t> w(g.nbr.size());
    /* Weights must agree on both directions of an arc. */
    WeightedCsr wg;
    {
      std::vector<std::pair<int, int>> edges;
      std::vector<int64_t> ew;
      for (int u = 0; u < g.n; ++u)
        for (const int* p = g.begin(u); p != g.end(u); ++p)
          if (u < *p) {
            edges.push_back({u, *p});
            ew.push_back(1 + (int64_t)rng.below(100));
          }
      wg = weighted_from_edges(g.n, edges, ew);
    }
    std::vector<int> sources;
    for (int v = 0; v < g.n; v += 3) sources.push_back(v);
    auto a = multisource_dijkstra_serial(wg.g, wg.w, sources);
    auto b = multisource_dijkstra_parallel(wg.g, wg.w, sources);
    CHECK(a == b);
    /* Each row agrees with a single-source run. */
    std::vector<int64_t> row;
    dijkstra_fill(wg.g, wg.w, sources[1], row);
    CHECK(a[1] == row);
  }
}

TEST_CASE("segment pair scan matches the definitional double loop") {
  for (uint64_t seed : {1u, 5u, 19u}) {
    std::vector<SegRec> segs = random_segments(40, 60, seed);
    std::vector<PairEvent> brute;
    for (int i = 0; i < (int)segs.size(); ++i)
      for (int j = i + 1; j < (int)segs.size(); ++j) {
        SegHit h = seg_contact(segs[i].a, segs[i].b, segs[j].a, segs[j].b);
        if (h.kind != SegContact::None) brute.push_back({i, j, h.kind, h.at});
      }
    std::vector<PairEvent> got = scan_segment_pairs_serial(segs);
    REQUIRE(got.size() == brute.size());
    for (size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].i == brute[k].i);
      CHECK(got[k].j == brute[k].j);
      CHECK(got[k].kind == brute[k].kind);
    }
  }
}

TEST_CASE("parallel segment scan equals the serial reference") {
  for (uint64_t seed : {2u, 3u, 23u}) {
    std::vector<SegRec> segs = random_segments(80, 50, seed);
    auto a = scan_segment_pairs_serial(segs);
    auto b = scan_segment_pairs_parallel(segs);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].i == b[k].i);
      CHECK(a[k].j == b[k].j);
      CHECK(a[k].kind == b[k].kind);
      CHECK(a[k].at == b[k].at);
    }
  }
}

TEST_CASE("splitmix64 reproduces its published sequence") {
  Splitmix a(0);
  CHECK(a.next() == 0xe220a8397b1dcdafull);
  CHECK(a.next() == 0x6e789e6aa1b965f4ull);
  CHECK(a.next() == 0x06c45d188009454full);
  CHECK(a.next() == 0xf88bb8a8724c81ecull);

  Splitmix b(1);
  CHECK(b.next() == 0x910a2dec89025cc1ull);
  CHECK(b.next() == 0xbeeb8da1658eec67ull);

  Splitmix c(42);
  CHECK(c.next() == 0xbdd732262feb6e95ull);

  Splitmix d(7);
  CHECK(d.below(1000) == 389);
  CHECK(d.below(1000) == 16);
  CHECK(d.below(1000) == 900);
}
