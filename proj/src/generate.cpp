#include "semu/generate.hpp"

#include <algorithm>
#include <numeric>

namespace semu {

Instance gen_grid_instance(int w, int h, int k, uint64_t seed) {
  if (w < 1 || h < 1 || k < 1) fail(Err::Parse, "grid dimensions and k must be positive");
  int n = w * h;
  if (k > n) fail(Err::Parse, "more regions than grid vertices");

  std::vector<std::pair<int, Pt>> verts;
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      int v = y * w + x;
      verts.push_back({v, Pt{x, y}});
      if (x + 1 < w) edges.push_back({v, v + 1});
      if (y + 1 < h) edges.push_back({v, v + w});
    }
  PlaneGraph g = build_plane_graph(verts, edges);

  Splitmix rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below((uint64_t)i + 1)]);

  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> grown(k), frontier(k);
  for (int r = 0; r < k; ++r) {
    owner[order[r]] = r;
    grown[r].push_back(order[r]);
    frontier[r].push_back(order[r]);
  }

  auto neighbors = [&](int v, std::vector<int>& out) {
    out.clear();
    int x = v % w, y = v / w;
    if (x > 0) out.push_back(v - 1);
    if (x + 1 < w) out.push_back(v + 1);
    if (y > 0) out.push_back(v - w);
    if (y + 1 < h) out.push_back(v + w);
  };

  /* Round-robin flood: each region claims one random unowned neighbor of a
   * random frontier vertex per turn until the grid is covered. */
  int unclaimed = n - k;
  std::vector<int> nbrs, open;
  while (unclaimed > 0) {
    bool progress = false;
    for (int r = 0; r < k && unclaimed > 0; ++r) {
      while (!frontier[r].empty()) {
        size_t pick = (size_t)rng.below(frontier[r].size());
        neighbors(frontier[r][pick], nbrs);
        open.clear();
        for (int u : nbrs)
          if (owner[u] == -1) open.push_back(u);
        if (open.empty()) {
          std::swap(frontier[r][pick], frontier[r].back());
          frontier[r].pop_back();
          continue;
        }
        int u = open[(size_t)rng.below(open.size())];
        owner[u] = r;
        grown[r].push_back(u);
        frontier[r].push_back(u);
        unclaimed--;
        progress = true;
        break;
      }
    }
    if (!progress) fail(Err::Internal, "grid flood stalled before covering");
  }

  std::vector<std::pair<int, std::vector<int>>> raw;
  for (int r = 0; r < k; ++r) {
    std::sort(grown[r].begin(), grown[r].end());
    raw.push_back({r, grown[r]});
  }
  return make_region_set(g, raw);
}

StringScene gen_segment_scene(int n, int bbox, uint64_t seed) {
  if (n < 1) fail(Err::Parse, "need at least one segment");
  if (bbox < 1 || bbox > kSceneCoordCap) fail(Err::Parse, "bbox out of range");

  Splitmix rng(seed);
  auto coord = [&]() { return (int64_t)rng.below((uint64_t)bbox + 1); };

  for (int attempt = 0; attempt < 64; ++attempt) {
    StringScene scene;
    for (int i = 0; i < n; ++i) {
      Pt a{coord(), coord()};
      Pt b{coord(), coord()};
      while (b == a) b = Pt{coord(), coord()};
      scene.strings.push_back({i, {a, b}});
    }
    try {
      build_arrangement(scene);
      return scene;
    } catch (const Error& e) {
      if (e.kind != Err::GeneralPosition) throw;
    }
  }
  fail(Err::ResampleLimit, "no general-position scene after 64 attempts");
}

StringScene gen_clique_scene(int k) {
  if (k < 2) fail(Err::Parse, "a clique scene needs at least two segments");
  if (k > 300) fail(Err::Parse, "clique scene too large for the coordinate range");

  /* Tangent lines of a parabola: lines i and j meet at ((i+j)/2, i*j) and
   * nowhere touch a third, so the scene is pairwise crossing and exactly in
   * general position. */
  StringScene scene;
  for (int t = 1; t <= k; ++t) {
    Pt a{0, -(int64_t)t * t};
    Pt b{k + 1, 2LL * t * (k + 1) - (int64_t)t * t};
    scene.strings.push_back({t - 1, {a, b}});
  }
  return scene;
}

}  // namespace semu
