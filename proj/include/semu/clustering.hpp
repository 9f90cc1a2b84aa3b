#ifndef SEMU_CLUSTERING_HPP_
#define SEMU_CLUSTERING_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "semu/regions.hpp"

namespace semu {

/* Every numeric knob of the construction. These are fixed; nothing tunes
 * them at runtime. */
struct Constants {
  int cluster_diameter = 170;       /* max contact diameter inside one cluster */
  int64_t hop_bound_reported = 7884864;   /* bound quoted alongside the result */
  int64_t hop_bound_derived = 14017536;   /* 3744^2, what the argument yields */
  int scattering = 3744;            /* single-level scattering bound */
  int spine_spacing = 14;           /* net points every 14th spine region */
  int small_radius = 4;             /* seed ball radius inside a supernode */
  int big_radius = 6;               /* fill ball radius inside an expansion */
  int emulator_weight = 171;        /* uniform edge weight, diameter + 1 */
  int64_t distortion = 4793997141;  /* certified stretch factor */
  int subregion_spread = 24;        /* common-origin pieces stay this close */
  int candidate_limit = 78;         /* clusters one region may meet per pass */
  int close_seed = 4;               /* closeness ladder, seed step */
  int close_sweep = 25;             /*  ..supernode sweep */
  int close_own = 55;               /*  ..expansion step, own supernode */
  int close_ancestor = 85;          /*  ..expansion step, inherited cluster */
};

inline const Constants& constants() {
  static const Constants c;
  return c;
}

/* Assignment phases, in the order the construction runs them. The wire
 * names "3a".."4b" are part of the trace format. */
enum class Phase { SeedBall, SupernodeSweep, BigBallFill, ExpansionSweep };
const char* phase_name(Phase p);
Phase phase_from(const std::string& s);

struct Supernode {
  int id = -1;
  int call_id = -1;
  int parent = -1;             /* supernode id, -1 at the recursion root */
  int creation_index = -1;     /* preorder position within one outer pass */
  std::vector<int> spine;      /* region ids along the shortest contact path */
  std::vector<int> members;    /* region ids, ascending */
  std::vector<int> net_points; /* every spine_spacing-th spine region */
  std::vector<int> expansion;  /* members plus claimed neighbors, ascending */
  std::vector<int> h_verts;    /* vertex set of the subcall that made it */
  std::vector<int> domain;     /* final regions meeting h_verts (instrumented) */
};

/* One outer-pass invocation: which subgraph it worked on, what its region
 * set was, and what the splitting produced. */
struct OuterCall {
  int id = -1;
  int level = 0;
  std::vector<int> h_verts;
  std::vector<int> outer_verts;
  std::vector<int> input_regions;
  std::vector<int> rstar;                      /* final region ids of the pass */
  std::unordered_map<int, int> call_origin;    /* rstar id -> input ancestor */
  std::vector<int> supernode_ids;
};

struct AssignRec {
  Phase phase = Phase::SeedBall;
  int supernode = -1;   /* supernode being processed at assignment time */
  int net_point = -1;   /* region id of the targeted net point */
};

struct ClusterRec {
  int id = -1;
  int net_point = -1;   /* region id */
  int supernode = -1;
  int call_id = -1;
  int level = 0;
  std::vector<int> verts;
};

struct Clustering {
  std::vector<ClusterRec> clusters;            /* by id */
  std::unordered_map<int, int> vertex_cluster; /* vertex id -> cluster id */
  bool instrumented = false;
  std::unordered_map<int, AssignRec> trace;    /* vertex id -> record */
  std::vector<OuterCall> calls;
  std::vector<Supernode> supernodes;           /* by id */
};

struct SelectPathsResult {
  std::vector<int> rstar;
  std::vector<int> supernode_ids;
};

/* Splits the region set along shortest contact paths. h0 is the plane graph
 * the outer pass was invoked on; h_ids the current component, w_ids the
 * vertex set bounding it (empty at the top). Appends supernode records to
 * out and fills call-origin tracking for the final pieces.
 *
 * Exposed separately so the splitting can be tested without the assignment
 * machinery; cluster() drives it internally. */
SelectPathsResult select_paths(const PlaneGraph& h0, RegionStore& store,
                               const std::vector<int>& h_ids,
                               const std::vector<int>& w_ids,
                               const std::vector<int>& region_ids,
                               Clustering& out, int call_id, int parent_supernode);

/* One full outer pass over h: split, expand, and assign every vertex whose
 * region touches the outer face. Returns the vertices left unassigned. */
std::vector<int> cluster_outer(const PlaneGraph& h, RegionStore& store,
                               const std::vector<int>& region_ids,
                               Clustering& state, int level);

/* The recursive driver: outer pass, then recurse into each component of the
 * unassigned rest with the regions split along it. Requires g connected and
 * the region support to equal the vertex set. Every vertex ends up in
 * exactly one cluster. */
Clustering cluster(const PlaneGraph& g, RegionStore& store,
                   const std::vector<int>& region_ids, bool instrument);

/* Like cluster(), but accepts a disconnected graph: each component is
 * clustered on its own and the results are merged with offset ids. */
Clustering cluster_all(const PlaneGraph& g, RegionStore& store,
                       const std::vector<int>& region_ids, bool instrument);

}  // namespace semu

#endif  // SEMU_CLUSTERING_HPP_
