#include "semu/clustering.hpp"

#include <algorithm>
#include <set>

namespace semu {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::SeedBall: return "3a";
    case Phase::SupernodeSweep: return "3b";
    case Phase::BigBallFill: return "4a";
    case Phase::ExpansionSweep: return "4b";
  }
  return "?";
}

Phase phase_from(const std::string& s) {
  if (s == "3a") return Phase::SeedBall;
  if (s == "3b") return Phase::SupernodeSweep;
  if (s == "4a") return Phase::BigBallFill;
  if (s == "4b") return Phase::ExpansionSweep;
  fail(Err::Parse, "unknown phase tag " + s);
}

namespace {

std::vector<int> union_of_regions(const RegionStore& store, const std::vector<int>& rids) {
  std::set<int> s;
  for (int rid : rids) {
    const Region& r = store.get(rid);
    s.insert(r.verts.begin(), r.verts.end());
  }
  return std::vector<int>(s.begin(), s.end());
}

/* Lexicographically smallest shortest path between two contact nodes:
 * distances from the target, then greedy descent through the lowest-ranked
 * neighbor. Ranks ascend with region ids. */
std::vector<int> canonical_shortest_path(const ContactGraph& cg, int src, int dst) {
  int s = cg.rank_of(src), t = cg.rank_of(dst);
  std::vector<int32_t> dist;
  bfs_fill(cg.adj, t, dist);
  if (dist[s] == kUnreached)
    fail(Err::Internal, "contact graph separated between chosen regions");
  std::vector<int> path{cg.nodes[s]};
  int cur = s;
  while (cur != t) {
    int next = -1;
    for (const int* p = cg.adj.begin(cur); p != cg.adj.end(cur); ++p)
      if (dist[*p] == dist[cur] - 1) {
        next = *p;
        break;
      }
    if (next == -1) fail(Err::Internal, "shortest-path descent stuck");
    path.push_back(cg.nodes[next]);
    cur = next;
  }
  return path;
}

/* Contact ball: region ids within the hop radius of net_point inside the
 * contact graph over exactly `rids`. */
std::vector<int> contact_ball(const PlaneGraph& g, const RegionStore& store,
                              const std::vector<int>& rids, int net_point, int radius) {
  ContactGraph cg = contact_graph(g, store, rids);
  std::vector<int32_t> dist;
  bfs_fill(cg.adj, cg.rank_of(net_point), dist);
  std::vector<int> out;
  for (int i = 0; i < (int)cg.nodes.size(); ++i)
    if (dist[i] != kUnreached && dist[i] <= radius) out.push_back(cg.nodes[i]);
  return out;
}

struct AssignCtx {
  const PlaneGraph& h;
  Clustering& state;
  int call_id;
  int level;

  bool assigned(int vid) const { return state.vertex_cluster.count(vid) != 0; }

  void record(int vid, int cluster_id, Phase ph, int supernode, int net_point) {
    auto [it, fresh] = state.vertex_cluster.insert({vid, cluster_id});
    (void)it;
    if (!fresh) fail(Err::Internal, "vertex assigned twice");
    state.clusters[cluster_id].verts.push_back(vid);
    state.trace[vid] = AssignRec{ph, supernode, net_point};
  }

  int new_cluster(int net_point, int supernode) {
    int id = (int)state.clusters.size();
    state.clusters.push_back(ClusterRec{id, net_point, supernode, call_id, level, {}});
    return id;
  }

  /* Walks a shortest path from v toward cluster `target` inside h[X] and
   * hands v (and everything before the first assigned vertex on the path)
   * to the cluster that vertex belongs to. */
  void assign_walk(int vid, int target_cluster, const std::vector<char>& x_mask,
                   Phase ph, int supernode, int net_point) {
    int v = h.idx_of(vid);
    std::vector<int32_t> dist(h.n(), kUnreached);
    std::vector<int> q;
    for (int cv : state.clusters[target_cluster].verts) {
      int ci = h.idx_of(cv);
      if (x_mask[ci]) {
        dist[ci] = 0;
        q.push_back(ci);
      }
    }
    if (q.empty()) fail(Err::Internal, "target cluster misses the walk domain");
    std::sort(q.begin(), q.end());
    for (size_t head = 0; head < q.size(); ++head) {
      int u = q[head];
      for (const int* p = h.adj.begin(u); p != h.adj.end(u); ++p)
        if (x_mask[*p] && dist[*p] == kUnreached) {
          dist[*p] = dist[u] + 1;
          q.push_back(*p);
        }
    }
    if (dist[v] == kUnreached)
      fail(Err::Internal, "walk domain disconnected from target cluster");

    std::vector<int> path{v};
    int cur = v;
    while (dist[cur] != 0) {
      int next = -1;
      for (const int* p = h.adj.begin(cur); p != h.adj.end(cur); ++p)
        if (x_mask[*p] && dist[*p] == dist[cur] - 1) {
          next = *p;
          break;
        }
      if (next == -1) fail(Err::Internal, "assignment walk stuck");
      path.push_back(next);
      cur = next;
    }
    /* The path ends inside the target cluster, so an assigned vertex
     * exists; everything strictly before it joins that vertex's cluster. */
    int stop = -1, owner = -1;
    for (int i = 0; i < (int)path.size(); ++i) {
      auto it = state.vertex_cluster.find(h.ids[path[i]]);
      if (it != state.vertex_cluster.end()) {
        stop = i;
        owner = it->second;
        break;
      }
    }
    if (stop <= 0) fail(Err::Internal, "assignment walk found no assigned vertex ahead");
    for (int i = 0; i < stop; ++i)
      record(h.ids[path[i]], owner, ph, supernode, net_point);
  }
};

}  // namespace

SelectPathsResult select_paths(const PlaneGraph& h0, RegionStore& store,
                               const std::vector<int>& h_ids,
                               const std::vector<int>& w_ids,
                               const std::vector<int>& region_ids,
                               Clustering& out, int call_id, int parent_supernode) {
  if (region_ids.empty()) fail(Err::EmptyRegionSet, "splitting an empty region set");
  {
    RegionSet rs{region_ids};
    std::vector<int> sup = rs.support(store);
    std::vector<int> want = h_ids;
    std::sort(want.begin(), want.end());
    if (sup != want) fail(Err::SupportMismatch, "region support differs from subgraph");
  }

  std::vector<int> crit = critical_vertices(h0, h_ids, w_ids);

  /* Lowest region id through each chosen vertex. */
  auto lowest_region_at = [&](int vid) {
    int best = -1;
    for (int rid : region_ids) {
      const Region& r = store.get(rid);
      if (std::binary_search(r.verts.begin(), r.verts.end(), vid))
        if (best == -1 || rid < best) best = rid;
    }
    if (best == -1) fail(Err::Internal, "chosen vertex lies in no region");
    return best;
  };
  int r_src = lowest_region_at(crit.front());
  int r_dst = lowest_region_at(crit.back());

  ContactGraph cg = contact_graph(h0, store, region_ids);
  std::vector<int> spine =
      (r_src == r_dst) ? std::vector<int>{r_src} : canonical_shortest_path(cg, r_src, r_dst);

  /* The spine together with its contact neighbors. */
  std::set<int> init(spine.begin(), spine.end());
  for (int rid : spine) {
    int rk = cg.rank_of(rid);
    for (const int* p = cg.adj.begin(rk); p != cg.adj.end(rk); ++p)
      init.insert(cg.nodes[*p]);
  }
  std::vector<int> init_ids(init.begin(), init.end());
  std::vector<int> s_verts = union_of_regions(store, init_ids);

  std::vector<int> rprime = shatter_all(h0, store, region_ids, s_verts);

  std::vector<char> in_s(h0.n(), 0);
  for (int v : s_verts) in_s[h0.idx_of(v)] = 1;

  std::vector<int> members;
  std::vector<int> outside;
  for (int rid : rprime) {
    const Region& r = store.get(rid);
    (in_s[h0.idx_of(r.verts.front())] ? members : outside).push_back(rid);
  }
  std::sort(members.begin(), members.end());

  Supernode sn;
  sn.id = (int)out.supernodes.size();
  sn.call_id = call_id;
  sn.parent = parent_supernode;
  sn.creation_index = 0;
  for (const Supernode& other : out.supernodes)
    if (other.call_id == call_id) sn.creation_index++;
  sn.spine = spine;
  sn.members = members;
  for (int i = 0; i < (int)spine.size(); i += constants().spine_spacing)
    sn.net_points.push_back(spine[i]);
  sn.h_verts = h_ids;
  out.supernodes.push_back(sn);
  int sn_id = sn.id;

  SelectPathsResult res;
  res.rstar = members;
  res.supernode_ids.push_back(sn_id);

  std::vector<int> rest;
  for (int v : h_ids)
    if (!in_s[h0.idx_of(v)]) rest.push_back(v);
  auto comps = components_within(h0, rest);

  std::vector<int> comp_of(h0.n(), -1);
  for (int c = 0; c < (int)comps.size(); ++c)
    for (int v : comps[c]) comp_of[h0.idx_of(v)] = c;
  std::vector<std::vector<int>> comp_regions(comps.size());
  for (int rid : outside)
    comp_regions[comp_of[h0.idx_of(store.get(rid).verts.front())]].push_back(rid);

  for (int c = 0; c < (int)comps.size(); ++c) {
    bool touches_outer = false;
    for (int v : comps[c]) touches_outer |= (bool)h0.outer_mask[h0.idx_of(v)];
    if (touches_outer) {
      SelectPathsResult sub = select_paths(h0, store, comps[c], s_verts,
                                           comp_regions[c], out, call_id, sn_id);
      res.rstar.insert(res.rstar.end(), sub.rstar.begin(), sub.rstar.end());
      res.supernode_ids.insert(res.supernode_ids.end(), sub.supernode_ids.begin(),
                               sub.supernode_ids.end());
    } else {
      std::vector<int> keep = comp_regions[c];
      std::sort(keep.begin(), keep.end());
      res.rstar.insert(res.rstar.end(), keep.begin(), keep.end());
    }
  }
  return res;
}

std::vector<int> cluster_outer(const PlaneGraph& h, RegionStore& store,
                               const std::vector<int>& region_ids,
                               Clustering& state, int level) {
  if (!h.is_connected()) fail(Err::Precondition, "outer pass needs a connected graph");
  const Constants& k = constants();

  OuterCall call;
  call.id = (int)state.calls.size();
  call.level = level;
  call.h_verts = h.ids;
  call.outer_verts = outer_vertices(h);
  call.input_regions = region_ids;
  std::sort(call.input_regions.begin(), call.input_regions.end());

  SelectPathsResult sp = select_paths(h, store, h.ids, {}, region_ids, state,
                                      call.id, -1);
  call.rstar = sp.rstar;
  std::sort(call.rstar.begin(), call.rstar.end());
  call.supernode_ids = sp.supernode_ids;

  {
    std::set<int> inputs(call.input_regions.begin(), call.input_regions.end());
    for (int rid : call.rstar) {
      int cur = rid;
      while (!inputs.count(cur)) {
        int up = store.get(cur).parent;
        if (up == cur) fail(Err::Internal, "piece does not descend from the input set");
        cur = up;
      }
      call.call_origin[rid] = cur;
    }
  }

  /* Expansion: claim each unclaimed contact neighbor for the earliest
   * supernode, in creation order. */
  ContactGraph cstar = contact_graph(h, store, call.rstar);
  std::set<int> claimed;
  for (int sid : call.supernode_ids) {
    const Supernode& s = state.supernodes[sid];
    claimed.insert(s.members.begin(), s.members.end());
  }
  for (int sid : call.supernode_ids) {
    Supernode& s = state.supernodes[sid];
    std::set<int> plus(s.members.begin(), s.members.end());
    for (int rid : s.members) {
      int rk = cstar.rank_of(rid);
      for (const int* p = cstar.adj.begin(rk); p != cstar.adj.end(rk); ++p) {
        int nb = cstar.nodes[*p];
        if (!claimed.count(nb)) {
          claimed.insert(nb);
          plus.insert(nb);
        }
      }
    }
    s.expansion.assign(plus.begin(), plus.end());
  }

  if (state.instrumented) {
    for (int sid : call.supernode_ids) {
      Supernode& s = state.supernodes[sid];
      std::vector<char> in_h(h.n(), 0);
      for (int v : s.h_verts) in_h[h.idx_of(v)] = 1;
      for (int rid : call.rstar) {
        const Region& r = store.get(rid);
        bool meets = false;
        for (int v : r.verts)
          if (in_h[h.idx_of(v)]) {
            meets = true;
            break;
          }
        if (meets) s.domain.push_back(rid);
      }
    }
  }

  AssignCtx ctx{h, state, call.id, level};

  /* Seed one cluster per net point from the small contact ball around it. */
  std::vector<std::vector<int>> cluster_of_net(call.supernode_ids.size());
  for (size_t si = 0; si < call.supernode_ids.size(); ++si) {
    Supernode& s = state.supernodes[call.supernode_ids[si]];
    for (int np : s.net_points) {
      int cid = ctx.new_cluster(np, s.id);
      cluster_of_net[si].push_back(cid);
      auto ball = contact_ball(h, store, s.members, np, k.small_radius);
      for (int v : union_of_regions(store, ball))
        ctx.record(v, cid, Phase::SeedBall, s.id, np);
    }
  }

  /* Sweep the rest of each supernode toward its first net point. */
  for (size_t si = 0; si < call.supernode_ids.size(); ++si) {
    Supernode& s = state.supernodes[call.supernode_ids[si]];
    std::vector<int> xs = union_of_regions(store, s.members);
    std::vector<char> mask(h.n(), 0);
    for (int v : xs) mask[h.idx_of(v)] = 1;
    for (int v : xs)
      if (!ctx.assigned(v))
        ctx.assign_walk(v, cluster_of_net[si][0], mask, Phase::SupernodeSweep,
                        s.id, s.net_points[0]);
  }

  /* Fill the bigger ball around every net point inside the expansion. */
  for (size_t si = 0; si < call.supernode_ids.size(); ++si) {
    Supernode& s = state.supernodes[call.supernode_ids[si]];
    for (size_t pi = 0; pi < s.net_points.size(); ++pi) {
      auto ball = contact_ball(h, store, s.expansion, s.net_points[pi], k.big_radius);
      std::vector<int> xs = union_of_regions(store, ball);
      std::vector<char> mask(h.n(), 0);
      for (int v : xs) mask[h.idx_of(v)] = 1;
      for (int v : xs)
        if (!ctx.assigned(v))
          ctx.assign_walk(v, cluster_of_net[si][pi], mask, Phase::BigBallFill,
                          s.id, s.net_points[pi]);
    }
  }

  /* Sweep whatever the expansion still holds toward the first net point. */
  for (size_t si = 0; si < call.supernode_ids.size(); ++si) {
    Supernode& s = state.supernodes[call.supernode_ids[si]];
    std::vector<int> xs = union_of_regions(store, s.expansion);
    std::vector<char> mask(h.n(), 0);
    for (int v : xs) mask[h.idx_of(v)] = 1;
    for (int v : xs)
      if (!ctx.assigned(v))
        ctx.assign_walk(v, cluster_of_net[si][0], mask, Phase::ExpansionSweep,
                        s.id, s.net_points[0]);
  }

  state.calls.push_back(std::move(call));

  std::vector<int> unassigned;
  for (int v : h.ids)
    if (!state.vertex_cluster.count(v)) unassigned.push_back(v);
  return unassigned;
}

namespace {

void cluster_rec(const PlaneGraph& h, RegionStore& store,
                 const std::vector<int>& region_ids, Clustering& state, int level) {
  std::vector<int> unassigned = cluster_outer(h, store, region_ids, state, level);
  if (unassigned.empty()) return;
  if ((int)unassigned.size() == h.n())
    fail(Err::Internal, "outer pass assigned nothing");

  std::vector<int> pieces = shatter_all(h, store, region_ids, unassigned);
  auto comps = components_within(h, unassigned);
  std::vector<int> comp_of(h.n(), -1);
  for (int c = 0; c < (int)comps.size(); ++c)
    for (int v : comps[c]) comp_of[h.idx_of(v)] = c;

  std::vector<std::vector<int>> comp_regions(comps.size());
  std::vector<char> un(h.n(), 0);
  for (int v : unassigned) un[h.idx_of(v)] = 1;
  for (int rid : pieces) {
    const Region& r = store.get(rid);
    int v0 = h.idx_of(r.verts.front());
    if (un[v0]) comp_regions[comp_of[v0]].push_back(rid);
  }

  for (int c = 0; c < (int)comps.size(); ++c) {
    PlaneGraph sub = induced_plane_subgraph(h, comps[c]);
    cluster_rec(sub, store, comp_regions[c], state, level + 1);
  }
}

}  // namespace

Clustering cluster(const PlaneGraph& g, RegionStore& store,
                   const std::vector<int>& region_ids, bool instrument) {
  if (!g.is_connected()) fail(Err::Precondition, "clustering needs a connected graph");
  {
    RegionSet rs{region_ids};
    if (rs.support(store) != g.ids)
      fail(Err::SupportMismatch, "region support differs from the vertex set");
  }
  Clustering state;
  state.instrumented = instrument;
  cluster_rec(g, store, region_ids, state, 0);
  for (int id : g.ids)
    if (!state.vertex_cluster.count(id))
      fail(Err::Internal, "vertex left unassigned after clustering");
  return state;
}

Clustering cluster_all(const PlaneGraph& g, RegionStore& store,
                       const std::vector<int>& region_ids, bool instrument) {
  if (g.is_connected()) return cluster(g, store, region_ids, instrument);

  Clustering merged;
  merged.instrumented = instrument;
  auto comps = components_within(g, g.ids);
  std::vector<int> comp_of(g.n(), -1);
  for (int c = 0; c < (int)comps.size(); ++c)
    for (int v : comps[c]) comp_of[g.idx_of(v)] = c;

  std::vector<std::vector<int>> comp_regions(comps.size());
  for (int rid : region_ids) {
    const Region& r = store.get(rid);
    comp_regions[comp_of[g.idx_of(r.verts.front())]].push_back(rid);
  }

  for (int c = 0; c < (int)comps.size(); ++c) {
    PlaneGraph sub = induced_plane_subgraph(g, comps[c]);
    Clustering part = cluster(sub, store, comp_regions[c], instrument);

    int dc = (int)merged.clusters.size();
    int ds = (int)merged.supernodes.size();
    int dk = (int)merged.calls.size();
    for (ClusterRec rec : part.clusters) {
      rec.id += dc;
      rec.supernode += ds;
      rec.call_id += dk;
      merged.clusters.push_back(std::move(rec));
    }
    for (auto& [v, cid] : part.vertex_cluster) merged.vertex_cluster[v] = cid + dc;
    for (auto& [v, a] : part.trace) {
      a.supernode += ds;
      merged.trace[v] = a;
    }
    for (Supernode s : part.supernodes) {
      s.id += ds;
      s.call_id += dk;
      if (s.parent >= 0) s.parent += ds;
      merged.supernodes.push_back(std::move(s));
    }
    for (OuterCall call : part.calls) {
      call.id += dk;
      for (int& sid : call.supernode_ids) sid += ds;
      merged.calls.push_back(std::move(call));
    }
  }
  return merged;
}

}  // namespace semu
