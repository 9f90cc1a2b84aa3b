#ifndef SEMU_REGIONS_HPP_
#define SEMU_REGIONS_HPP_

#include <unordered_map>
#include <vector>

#include "semu/plane_graph.hpp"

namespace semu {

/* A region is a connected set of base-graph vertices. origin chases the
 * provenance chain to the region the instance started with; parent is the
 * region this one was split from (self for instance regions). */
struct Region {
  int id = -1;
  int origin = -1;
  int parent = -1;
  std::vector<int> verts;  /* external vertex ids, ascending */
};

/* Owns every region a pipeline run ever creates. Splitting allocates fresh
 * ids above everything seen so far, so ids are unambiguous run-wide. */
struct RegionStore {
  std::vector<Region> all;
  std::unordered_map<int, int> by_id;
  int next_id = 0;

  const Region& get(int id) const;
  int add(int origin, int parent, std::vector<int> verts);   /* fresh id */
  int add_with_id(int id, std::vector<int> verts);           /* instance region */
};

/* Region ids are kept sorted; the support is the union of the members. */
struct RegionSet {
  std::vector<int> ids;
  std::vector<int> support(const RegionStore& store) const;
};

struct Instance {
  PlaneGraph graph;
  RegionStore store;
  RegionSet regions;
};

/* Validates raw regions against g (nonempty, known vertices, connected),
 * drops vertices no region covers, and rebuilds the graph on what is left.
 * The trimmed graph may be disconnected; callers split it later. */
Instance make_region_set(const PlaneGraph& g,
                         const std::vector<std::pair<int, std::vector<int>>>& raw);

/* Contact graph over a region set: two regions are adjacent when they share
 * a vertex or when a base edge joins them. Nodes are region ids, ascending;
 * the CSR index of a region is its rank in that order. */
struct ContactGraph {
  std::vector<int> nodes;
  std::unordered_map<int, int> rank;
  Csr adj;

  int rank_of(int region_id) const;
};

ContactGraph contact_graph(const PlaneGraph& g, const RegionStore& store,
                           const std::vector<int>& region_ids);

/* Hop distance between two regions, kUnreached when separated. */
int32_t contact_distance(const ContactGraph& cg, int r1, int r2);

/* Splits R along S into the connected pieces of R minus S and of R inter S.
 * A region untouched by the split is returned as-is, keeping its id; real
 * splits allocate fresh ids, pieces ordered by their smallest vertex. */
std::vector<int> shatter(const PlaneGraph& g, RegionStore& store, int region_id,
                         const std::vector<char>& s_mask);

std::vector<int> shatter_all(const PlaneGraph& g, RegionStore& store,
                             const std::vector<int>& region_ids,
                             const std::vector<int>& s_vertex_ids);

/* Rebuilds the instance so that region adjacency means shared vertices and
 * nothing else: every edge is split at its midpoint and a midpoint joins
 * exactly the regions containing both endpoints. Region ids survive. */
Instance intersection_to_contact(const Instance& inst);

/* Definitional double-loop adjacency oracle; refuses graphs over 500
 * vertices. Pairs (i,j), i<j, of region ids. */
std::vector<std::pair<int, int>> brute_force_contact(const PlaneGraph& g,
                                                     const RegionStore& store,
                                                     const std::vector<int>& region_ids);

}  // namespace semu

#endif  // SEMU_REGIONS_HPP_
