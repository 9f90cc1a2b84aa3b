#pragma once

#include <map>
#include <string>

#include "semu/clustering.hpp"
#include "semu/emulator.hpp"

namespace semu {

/* Which per-region hop bound the scattering check asserts: the reported
 * constant or the larger one the construction actually supports. */
enum class BoundMode { Reported, Derived };

const char* mode_name(BoundMode m);
BoundMode mode_from(const std::string& s);

struct Violation {
  std::string kind;  /* "lower-bound", "upper-bound", "diameter", "scattering",
                        "cluster-coverage", "cluster-overlap",
                        "cluster-connectivity", "outer-coverage",
                        "origin-spread", "closeness", "cluster-count",
                        "structure" */
  std::string detail;
};

struct PairRecord {
  int ra = 0, rb = 0;
  int32_t dist_g = kUnreached;   // contact-graph hops
  int64_t dist_h = kFarWeight;   // emulator weighted distance
};

/* Instrumentation payload written next to a clustering; the per-call and
 * per-supernode records drive the call-level checks. */
struct TraceData {
  std::vector<Supernode> supernodes;
  std::vector<OuterCall> calls;
  std::map<int, AssignRec> assigns;  // vertex id -> provenance

  /* Snapshot of every shattered region the records above reference; these
   * ids do not exist in a freshly loaded instance store. */
  std::map<int, std::vector<int>> regions;
};

struct Report {
  BoundMode mode = BoundMode::Derived;
  bool has_trace = false;
  std::vector<Violation> violations;

  /* Max and min of dist_h/dist_g over pairs with finite dist_g. */
  long long stretch_num = 0, stretch_den = 1;
  long long min_num = 0, min_den = 1;

  int diameter_max = -1;    // largest cluster R-diameter seen
  int scattering_max = -1;  // largest per-region distinct-cluster bound
  std::map<std::string, int> closeness;  // step tag -> max observed distance
  size_t pairs_checked = 0;

  std::vector<PairRecord> pairs;  // filled only when keep_pairs was set

  bool ok() const { return violations.empty(); }
};

struct VerifyInput {
  const PlaneGraph& g;
  const RegionStore& store;
  std::vector<int> region_ids;
  std::vector<ClusterRec> clusters;  // as read back from a clustering document
  const Emulator& emu;               // weights as stored, not re-derived
  const TraceData* trace = nullptr;
  BoundMode mode = BoundMode::Derived;
  size_t max_pairs = 5000;  // 0 checks every pair
  bool keep_pairs = false;
};

Report verify_all(const VerifyInput& in);

/* Minimum number of distinct clusters met by any va-vb walk, by exhaustive
 * search over (vertex, cluster-set) states. Only for small fixtures; the
 * production check uses the contracted-graph formula this validates. */
int min_clusters_on_path_exhaustive(const PlaneGraph& g,
                                    const std::map<int, int>& vertex_cluster,
                                    int va, int vb);

/* Contracted cluster graph plus the vertex -> part index map the scattering
 * check runs BFS on; exposed for the formula-validation tests. */
struct ClusterGraph {
  Csr adj;
  std::vector<int> cluster_ids;        // part index -> cluster id
  std::map<int, int> part_of_vertex;   // vertex id -> part index
};
ClusterGraph cluster_graph_of(const PlaneGraph& g, const std::vector<ClusterRec>& clusters);

}  // namespace semu
