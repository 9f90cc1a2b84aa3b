#ifndef SEMU_KERNELS_HPP_
#define SEMU_KERNELS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "semu/geometry.hpp"

namespace semu {

/* Compact adjacency used by every distance computation in the project.
 * Neighbor lists are sorted ascending, which fixes BFS tie-breaking. */
struct Csr {
  int n = 0;
  std::vector<int> off;   /* size n+1 */
  std::vector<int> nbr;

  static Csr from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int degree(int v) const { return off[v + 1] - off[v]; }
  const int* begin(int v) const { return nbr.data() + off[v]; }
  const int* end(int v) const { return nbr.data() + off[v + 1]; }
  bool adjacent(int u, int v) const;
};

constexpr int32_t kUnreached = -1;

/* Hop distances from src; out is resized and overwritten. */
void bfs_fill(const Csr& g, int src, std::vector<int32_t>& out);

/* Hop distances from src restricted to vertices with mask[v] != 0.
 * src must be inside the mask. */
void bfs_fill_masked(const Csr& g, int src, const std::vector<char>& mask,
                     std::vector<int32_t>& out);

/* Full distance matrix, one BFS per source. The parallel variant splits
 * sources across OpenMP threads and produces identical output; the serial
 * variant is the reference the tests and the benchmark compare against. */
std::vector<std::vector<int32_t>> allpairs_hops_serial(const Csr& g);
std::vector<std::vector<int32_t>> allpairs_hops_parallel(const Csr& g);

constexpr int64_t kFarWeight = -1;

/* Adjacency plus per-arc weights, kept aligned with Csr::nbr. */
struct WeightedCsr {
  Csr g;
  std::vector<int64_t> w;
};

/* Builds the weighted adjacency from an undirected edge list; weights[i]
 * belongs to edges[i] and must be nonnegative. */
WeightedCsr weighted_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int64_t>& weights);

/* Nonnegative integer edge weights aligned with Csr::nbr. */
void dijkstra_fill(const Csr& g, const std::vector<int64_t>& w, int src,
                   std::vector<int64_t>& out);
std::vector<std::vector<int64_t>> multisource_dijkstra_serial(
    const Csr& g, const std::vector<int64_t>& w, const std::vector<int>& sources);
std::vector<std::vector<int64_t>> multisource_dijkstra_parallel(
    const Csr& g, const std::vector<int64_t>& w, const std::vector<int>& sources);

/* One straight segment owned by some string or edge. */
struct SegRec {
  Pt a, b;
  int owner = -1;
};

struct PairEvent {
  int i = 0, j = 0;        /* indices into the segment array, i < j */
  SegContact kind = SegContact::None;
  FPoint at;
};

/* Exact contact classification over all segment pairs; only pairs with a
 * contact are reported, sorted by (i, j). The parallel variant distributes
 * the pair loop and merges per-thread buckets back into the same order. */
std::vector<PairEvent> scan_segment_pairs_serial(const std::vector<SegRec>& segs);
std::vector<PairEvent> scan_segment_pairs_parallel(const std::vector<SegRec>& segs);

}  // namespace semu

#endif  // SEMU_KERNELS_HPP_
