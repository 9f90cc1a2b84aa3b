#include "semu/kernels.hpp"

#include <algorithm>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semu {

Csr Csr::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Csr g;
  g.n = n;
  g.off.assign(n + 1, 0);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      fail(Err::Precondition, "bad edge in adjacency build");
    g.off[u + 1]++;
    g.off[v + 1]++;
  }
  for (int i = 0; i < n; ++i) g.off[i + 1] += g.off[i];
  g.nbr.resize(g.off[n]);
  std::vector<int> cur(g.off.begin(), g.off.end() - 1);
  for (auto& [u, v] : edges) {
    g.nbr[cur[u]++] = v;
    g.nbr[cur[v]++] = u;
  }
  for (int v = 0; v < n; ++v) std::sort(g.nbr.begin() + g.off[v], g.nbr.begin() + g.off[v + 1]);
  return g;
}

bool Csr::adjacent(int u, int v) const {
  return std::binary_search(begin(u), end(u), v);
}

void bfs_fill(const Csr& g, int src, std::vector<int32_t>& out) {
  out.assign(g.n, kUnreached);
  std::vector<int> q;
  q.reserve(g.n);
  out[src] = 0;
  q.push_back(src);
  for (size_t h = 0; h < q.size(); ++h) {
    int v = q[h];
    for (const int* p = g.begin(v); p != g.end(v); ++p) {
      if (out[*p] == kUnreached) {
        out[*p] = out[v] + 1;
        q.push_back(*p);
      }
    }
  }
}

void bfs_fill_masked(const Csr& g, int src, const std::vector<char>& mask,
                     std::vector<int32_t>& out) {
  out.assign(g.n, kUnreached);
  if (!mask[src]) fail(Err::Precondition, "masked BFS from outside the mask");
  std::vector<int> q;
  out[src] = 0;
  q.push_back(src);
  for (size_t h = 0; h < q.size(); ++h) {
    int v = q[h];
    for (const int* p = g.begin(v); p != g.end(v); ++p) {
      if (mask[*p] && out[*p] == kUnreached) {
        out[*p] = out[v] + 1;
        q.push_back(*p);
      }
    }
  }
}

std::vector<std::vector<int32_t>> allpairs_hops_serial(const Csr& g) {
  std::vector<std::vector<int32_t>> d(g.n);
  for (int s = 0; s < g.n; ++s) bfs_fill(g, s, d[s]);
  return d;
}

std::vector<std::vector<int32_t>> allpairs_hops_parallel(const Csr& g) {
  std::vector<std::vector<int32_t>> d(g.n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (int s = 0; s < g.n; ++s) bfs_fill(g, s, d[s]);
  return d;
}

WeightedCsr weighted_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int64_t>& weights) {
  if (weights.size() != edges.size())
    fail(Err::Precondition, "one weight per edge required");
  for (int64_t x : weights)
    if (x < 0) fail(Err::Precondition, "negative edge weight");
  WeightedCsr out;
  out.g = Csr::from_edges(n, edges);
  out.w.resize(out.g.nbr.size());
  /* Arcs were sorted per vertex; replay the edges and place each weight at
   * its arc slot by binary search. Parallel edges occupy separate slots. */
  std::vector<int> cur(out.g.off.begin(), out.g.off.end() - 1);
  std::vector<char> used(out.g.nbr.size(), 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      const int* p = std::lower_bound(out.g.begin(a), out.g.end(a), b);
      int slot = (int)(p - out.g.nbr.data());
      while (slot < out.g.off[a + 1] && out.g.nbr[slot] == b && used[slot]) ++slot;
      if (slot >= out.g.off[a + 1] || out.g.nbr[slot] != b)
        fail(Err::Precondition, "duplicate edge in weighted adjacency");
      used[slot] = 1;
      out.w[slot] = weights[i];
    }
  }
  return out;
}

void dijkstra_fill(const Csr& g, const std::vector<int64_t>& w, int src,
                   std::vector<int64_t>& out) {
  if (w.size() != g.nbr.size()) fail(Err::Precondition, "weight array size mismatch");
  out.assign(g.n, kFarWeight);
  using Item = std::pair<int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  out[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (dv != out[v]) continue;
    for (int k = g.off[v]; k < g.off[v + 1]; ++k) {
      int u = g.nbr[k];
      int64_t cand = dv + w[k];
      if (out[u] == kFarWeight || cand < out[u]) {
        out[u] = cand;
        pq.push({cand, u});
      }
    }
  }
}

std::vector<std::vector<int64_t>> multisource_dijkstra_serial(
    const Csr& g, const std::vector<int64_t>& w, const std::vector<int>& sources) {
  std::vector<std::vector<int64_t>> d(sources.size());
  for (size_t i = 0; i < sources.size(); ++i) dijkstra_fill(g, w, sources[i], d[i]);
  return d;
}

std::vector<std::vector<int64_t>> multisource_dijkstra_parallel(
    const Csr& g, const std::vector<int64_t>& w, const std::vector<int>& sources) {
  std::vector<std::vector<int64_t>> d(sources.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (size_t i = 0; i < sources.size(); ++i) dijkstra_fill(g, w, sources[i], d[i]);
  return d;
}

std::vector<PairEvent> scan_segment_pairs_serial(const std::vector<SegRec>& segs) {
  std::vector<PairEvent> out;
  int n = (int)segs.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SegHit h = seg_contact(segs[i].a, segs[i].b, segs[j].a, segs[j].b);
      if (h.kind != SegContact::None) out.push_back(PairEvent{i, j, h.kind, h.at});
    }
  return out;
}

std::vector<PairEvent> scan_segment_pairs_parallel(const std::vector<SegRec>& segs) {
  int n = (int)segs.size();
#ifndef _OPENMP
  return scan_segment_pairs_serial(segs);
#else
  int threads = omp_get_max_threads();
  std::vector<std::vector<PairEvent>> buckets(threads);
#pragma omp parallel
  {
    auto& mine = buckets[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        SegHit h = seg_contact(segs[i].a, segs[i].b, segs[j].a, segs[j].b);
        if (h.kind != SegContact::None) mine.push_back(PairEvent{i, j, h.kind, h.at});
      }
  }
  std::vector<PairEvent> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(),
            [](const PairEvent& a, const PairEvent& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });
  return out;
#endif
}

}  // namespace semu
