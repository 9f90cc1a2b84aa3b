#pragma once

#include <map>

#include "semu/clustering.hpp"
#include "semu/plane_graph.hpp"
#include "semu/regions.hpp"

namespace semu {

/* Weighted emulator: one node per cluster (contracted base graph), one
 * pendant node per original region attached to its representative cluster,
 * every edge at the uniform weight. Cluster nodes occupy 0..n_clusters-1;
 * the pendant for region_ids[i] is node n_clusters+i. */
struct Emulator {
  int n_clusters = 0;
  std::vector<int> region_ids;  // ascending
  SimpleGraph graph;
  std::vector<int64_t> weights;  // aligned with graph.edges
  std::map<int, int> representative;  // region id -> cluster id

  int nodes() const { return graph.n; }
  int node_of_region(int rid) const;
};

Emulator build_emulator(const PlaneGraph& g, const RegionStore& store,
                        const std::vector<int>& region_ids, const Clustering& cl);

struct EmulatorStats {
  int nodes = 0;
  int cluster_nodes = 0;
  int region_nodes = 0;
  int edges = 0;
  int max_degree = 0;
  long long total_weight = 0;
};

EmulatorStats emulator_stats(const Emulator& e);

// Weighted distance between two pendant region nodes; kFarWeight if separated.
int64_t emulator_distance(const Emulator& e, int ra, int rb);

// Weighted distances from a region's pendant node to every emulator node.
std::vector<int64_t> emulator_distances_from(const Emulator& e, int rid);

}  // namespace semu
