#include "semu/regions.hpp"

#include <algorithm>
#include <set>

namespace semu {

const Region& RegionStore::get(int id) const {
  auto it = by_id.find(id);
  if (it == by_id.end()) fail(Err::UnknownRegion, "region " + std::to_string(id));
  return all[it->second];
}

int RegionStore::add(int origin, int parent, std::vector<int> verts) {
  int id = next_id++;
  by_id[id] = (int)all.size();
  all.push_back(Region{id, origin, parent, std::move(verts)});
  return id;
}

int RegionStore::add_with_id(int id, std::vector<int> verts) {
  if (by_id.count(id)) fail(Err::Parse, "duplicate region id " + std::to_string(id));
  by_id[id] = (int)all.size();
  all.push_back(Region{id, id, id, std::move(verts)});
  next_id = std::max(next_id, id + 1);
  return id;
}

std::vector<int> RegionSet::support(const RegionStore& store) const {
  std::set<int> s;
  for (int id : ids) {
    const Region& r = store.get(id);
    s.insert(r.verts.begin(), r.verts.end());
  }
  return std::vector<int>(s.begin(), s.end());
}

Instance make_region_set(const PlaneGraph& g,
                         const std::vector<std::pair<int, std::vector<int>>>& raw) {
  if (raw.empty()) fail(Err::EmptyRegionSet, "no regions given");
  Instance inst;
  std::set<int> covered;
  std::vector<std::pair<int, std::vector<int>>> cleaned = raw;
  std::sort(cleaned.begin(), cleaned.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [id, verts] : cleaned) {
    if (verts.empty()) fail(Err::EmptyRegion, "region " + std::to_string(id));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) (void)g.idx_of(v);
    if (components_within(g, verts).size() != 1)
      fail(Err::DisconnectedRegion, "region " + std::to_string(id));
    covered.insert(verts.begin(), verts.end());
  }
  std::vector<std::pair<int, Pt>> keep_verts;
  for (int v : covered) keep_verts.push_back({v, g.coords[g.idx_of(v)]});
  std::vector<std::pair<int, int>> keep_edges;
  for (auto& [a, b] : g.edges)
    if (covered.count(a) && covered.count(b)) keep_edges.push_back({a, b});
  inst.graph = build_plane_graph(keep_verts, keep_edges, /*check_crossings=*/false);
  for (auto& [id, verts] : cleaned) {
    inst.store.add_with_id(id, verts);
    inst.regions.ids.push_back(id);
  }
  return inst;
}

int ContactGraph::rank_of(int region_id) const {
  auto it = rank.find(region_id);
  if (it == rank.end()) fail(Err::UnknownRegion, "region " + std::to_string(region_id));
  return it->second;
}

ContactGraph contact_graph(const PlaneGraph& g, const RegionStore& store,
                           const std::vector<int>& region_ids) {
  ContactGraph cg;
  cg.nodes = region_ids;
  std::sort(cg.nodes.begin(), cg.nodes.end());
  for (int i = 0; i < (int)cg.nodes.size(); ++i) cg.rank[cg.nodes[i]] = i;

  /* Incidence lists by dense vertex index; contacts come from vertices that
   * regions share and from base edges between them. */
  std::vector<std::vector<int>> at(g.n());
  for (int i = 0; i < (int)cg.nodes.size(); ++i)
    for (int v : store.get(cg.nodes[i]).verts) at[g.idx_of(v)].push_back(i);

  std::vector<std::pair<int, int>> es;
  auto link = [&](int a, int b) {
    if (a != b) es.push_back(std::minmax(a, b));
  };
  for (int v = 0; v < g.n(); ++v)
    for (size_t i = 0; i < at[v].size(); ++i)
      for (size_t j = i + 1; j < at[v].size(); ++j) link(at[v][i], at[v][j]);
  for (auto& [a, b] : g.edges) {
    int u = g.idx_of(a), v = g.idx_of(b);
    for (int ri : at[u])
      for (int rj : at[v]) link(ri, rj);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  cg.adj = Csr::from_edges((int)cg.nodes.size(), es);
  return cg;
}

int32_t contact_distance(const ContactGraph& cg, int r1, int r2) {
  std::vector<int32_t> d;
  bfs_fill(cg.adj, cg.rank_of(r1), d);
  return d[cg.rank_of(r2)];
}

std::vector<int> shatter(const PlaneGraph& g, RegionStore& store, int region_id,
                         const std::vector<char>& s_mask) {
  const Region r = store.get(region_id);
  /* Both sides split into connected pieces: components of R minus S and
   * components of R inter S. */
  std::vector<int> inside, outside;
  for (int v : r.verts)
    (s_mask[g.idx_of(v)] ? inside : outside).push_back(v);
  if (inside.empty() || outside.empty()) return {region_id};

  std::vector<std::vector<int>> pieces;
  for (auto& c : components_within(g, outside)) pieces.push_back(c);
  for (auto& c : components_within(g, inside)) pieces.push_back(c);
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<int> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) out.push_back(store.add(r.origin, r.id, std::move(p)));
  return out;
}

std::vector<int> shatter_all(const PlaneGraph& g, RegionStore& store,
                             const std::vector<int>& region_ids,
                             const std::vector<int>& s_vertex_ids) {
  std::vector<char> mask(g.n(), 0);
  for (int v : s_vertex_ids) mask[g.idx_of(v)] = 1;
  std::vector<int> sorted = region_ids;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int rid : sorted) {
    auto pieces = shatter(g, store, rid, mask);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

Instance intersection_to_contact(const Instance& inst) {
  Instance out;
  std::vector<int> mids;
  out.graph = subdivide(inst.graph, &mids);
  /* Membership tests against the original per-region vertex sets. */
  for (int rid : inst.regions.ids) {
    const Region& r = inst.store.get(rid);
    std::set<int> in(r.verts.begin(), r.verts.end());
    std::vector<int> verts = r.verts;
    for (int e = 0; e < (int)inst.graph.edges.size(); ++e) {
      auto& [a, b] = inst.graph.edges[e];
      if (in.count(a) && in.count(b)) verts.push_back(mids[e]);
    }
    std::sort(verts.begin(), verts.end());
    out.store.add_with_id(rid, verts);
    out.regions.ids.push_back(rid);
  }
  return out;
}

std::vector<std::pair<int, int>> brute_force_contact(const PlaneGraph& g,
                                                     const RegionStore& store,
                                                     const std::vector<int>& region_ids) {
  if (g.n() > 500) fail(Err::TooLarge, "oracle capped at 500 vertices");
  std::vector<int> ids = region_ids;
  std::sort(ids.begin(), ids.end());
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j) {
      const Region& ra = store.get(ids[i]);
      const Region& rb = store.get(ids[j]);
      bool touch = false;
      for (int u : ra.verts) {
        for (int v : rb.verts)
          if (u == v || g.adj.adjacent(g.idx_of(u), g.idx_of(v))) {
            touch = true;
            break;
          }
        if (touch) break;
      }
      if (touch) out.push_back({ids[i], ids[j]});
    }
  return out;
}

}  // namespace semu
