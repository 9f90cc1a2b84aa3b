#ifndef SEMU_PLANE_GRAPH_HPP_
#define SEMU_PLANE_GRAPH_HPP_

#include <unordered_map>
#include <utility>
#include <vector>

#include "semu/geometry.hpp"
#include "semu/kernels.hpp"

namespace semu {

/* A graph with a fixed crossing-free straight-line drawing on the integer
 * grid. The combinatorial embedding is never stored independently: the
 * rotation at each vertex is the counterclockwise angular order of its
 * neighbors, recomputed from coordinates whenever a graph is built.
 *
 * Vertices keep their external ids across subgraph operations; internally
 * they are densely indexed in ascending id order, so index comparisons and
 * id comparisons agree. */
struct PlaneGraph {
  std::vector<int> ids;                 /* dense index -> external id, ascending */
  std::vector<Pt> coords;               /* by dense index */
  std::vector<std::pair<int, int>> edges; /* external ids, (min,max), sorted */

  std::vector<std::vector<int>> rot;    /* CCW neighbor order, dense indices */
  Csr adj;                              /* neighbor lists ascending */

  /* Faces as closed walks of directed edges (tail, head); every directed
   * edge lies on exactly one walk. turning[f] is the total turning of walk
   * f in quarter turns: +4 for a bounded face, -4 for an outer walk. */
  std::vector<std::vector<std::pair<int, int>>> faces;
  std::vector<int> turning;

  std::vector<char> outer_mask;         /* dense: vertex on an outer walk, or isolated */
  int outer_face = -1;                  /* index into faces when connected; -1 otherwise */
  int n_components = 0;

  std::unordered_map<int, int> id2idx;

  int n() const { return (int)ids.size(); }
  int idx_of(int id) const;
  bool has_id(int id) const { return id2idx.count(id) != 0; }
  bool is_connected() const { return n_components <= 1; }
};

/* Validates and builds. With check_crossings the drawing is scanned pairwise
 * for forbidden contacts (anything except edges meeting at a shared
 * endpoint); subgraphs of a validated drawing can skip that scan. */
PlaneGraph build_plane_graph(const std::vector<std::pair<int, Pt>>& vertices,
                             const std::vector<std::pair<int, int>>& edge_list,
                             bool check_crossings = true);

/* External ids of outer-walk vertices (plus isolated vertices), ascending. */
std::vector<int> outer_vertices(const PlaneGraph& g);

/* Same drawing restricted to X; fails unless G[X] is connected. */
PlaneGraph induced_plane_subgraph(const PlaneGraph& g, const std::vector<int>& x_ids);

/* Vertices of H that an outer-face edge of h0 joins to W. W empty is the
 * degenerate whole-graph case and yields the lowest-id outer vertex. The
 * geometry guarantees one or two results for valid inputs. */
std::vector<int> critical_vertices(const PlaneGraph& h0, const std::vector<int>& h_ids,
                                   const std::vector<int>& w_ids);

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  /* part indices, (min,max), sorted */
};

/* Contracts each part to one node; parts must partition the vertex set and
 * each part must induce a connected subgraph. */
SimpleGraph contract_partition(const PlaneGraph& g,
                               const std::vector<std::vector<int>>& parts);

/* Doubles all coordinates, then splits every edge at its midpoint. Original
 * vertices keep their ids; midpoints get fresh ids above the maximum, in
 * sorted edge order. midpoint_ids, if given, receives one id per edge. */
PlaneGraph subdivide(const PlaneGraph& g, std::vector<int>* midpoint_ids = nullptr);

/* Connected components of G[subset]; components ordered by smallest member
 * id, members ascending. */
std::vector<std::vector<int>> components_within(const PlaneGraph& g,
                                                const std::vector<int>& subset_ids);

}  // namespace semu

#endif  // SEMU_PLANE_GRAPH_HPP_
