#include "semu/emulator.hpp"

#include <algorithm>

#include "semu/kernels.hpp"

namespace semu {

int Emulator::node_of_region(int rid) const {
  auto it = std::lower_bound(region_ids.begin(), region_ids.end(), rid);
  if (it == region_ids.end() || *it != rid)
    fail(Err::UnknownRegion, "no emulator node for region " + std::to_string(rid));
  return n_clusters + (int)(it - region_ids.begin());
}

Emulator build_emulator(const PlaneGraph& g, const RegionStore& store,
                        const std::vector<int>& region_ids, const Clustering& cl) {
  for (int id : g.ids)
    if (!cl.vertex_cluster.count(id))
      fail(Err::PartialClustering, "vertex " + std::to_string(id) + " has no cluster");

  std::vector<std::vector<int>> parts(cl.clusters.size());
  for (const ClusterRec& c : cl.clusters) {
    if (c.id < 0 || c.id >= (int)parts.size() || !parts[c.id].empty())
      fail(Err::Parse, "cluster ids must be dense and unique");
    parts[c.id] = c.verts;
    std::sort(parts[c.id].begin(), parts[c.id].end());
  }
  SimpleGraph contracted = contract_partition(g, parts);

  Emulator e;
  e.n_clusters = contracted.n;
  e.region_ids = region_ids;
  std::sort(e.region_ids.begin(), e.region_ids.end());
  e.graph.n = contracted.n + (int)e.region_ids.size();
  e.graph.edges = contracted.edges;
  for (int i = 0; i < (int)e.region_ids.size(); ++i) {
    const Region& r = store.get(e.region_ids[i]);
    int rep = cl.vertex_cluster.at(r.verts.front());
    e.representative[e.region_ids[i]] = rep;
    e.graph.edges.push_back({rep, e.n_clusters + i});
  }
  e.weights.assign(e.graph.edges.size(), constants().emulator_weight);
  return e;
}

EmulatorStats emulator_stats(const Emulator& e) {
  EmulatorStats s;
  s.nodes = e.graph.n;
  s.cluster_nodes = e.n_clusters;
  s.region_nodes = (int)e.region_ids.size();
  s.edges = (int)e.graph.edges.size();
  std::vector<int> deg(e.graph.n, 0);
  for (size_t i = 0; i < e.graph.edges.size(); ++i) {
    auto [u, v] = e.graph.edges[i];
    deg[u]++;
    deg[v]++;
    s.total_weight += e.weights[i];
  }
  for (int d : deg) s.max_degree = std::max(s.max_degree, d);
  return s;
}

std::vector<int64_t> emulator_distances_from(const Emulator& e, int rid) {
  WeightedCsr wc = weighted_from_edges(e.graph.n, e.graph.edges, e.weights);
  std::vector<int64_t> d;
  dijkstra_fill(wc.g, wc.w, e.node_of_region(rid), d);
  return d;
}

int64_t emulator_distance(const Emulator& e, int ra, int rb) {
  if (ra == rb) {
    e.node_of_region(ra);
    return 0;
  }
  return emulator_distances_from(e, ra)[e.node_of_region(rb)];
}

}  // namespace semu
