#include "semu/verify.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace semu {

const char* mode_name(BoundMode m) {
  return m == BoundMode::Reported ? "paper" : "derived";
}

BoundMode mode_from(const std::string& s) {
  if (s == "paper") return BoundMode::Reported;
  if (s == "derived") return BoundMode::Derived;
  fail(Err::Parse, "unknown mode " + s + " (expected paper or derived)");
}

ClusterGraph cluster_graph_of(const PlaneGraph& g, const std::vector<ClusterRec>& clusters) {
  std::vector<ClusterRec> sorted = clusters;
  std::sort(sorted.begin(), sorted.end(),
            [](const ClusterRec& a, const ClusterRec& b) { return a.id < b.id; });
  ClusterGraph cg;
  std::vector<std::vector<int>> parts;
  for (const ClusterRec& c : sorted) {
    if (!cg.cluster_ids.empty() && cg.cluster_ids.back() == c.id)
      fail(Err::Parse, "duplicate cluster id " + std::to_string(c.id));
    cg.cluster_ids.push_back(c.id);
    parts.push_back(c.verts);
    std::sort(parts.back().begin(), parts.back().end());
    for (int v : c.verts)
      if (!cg.part_of_vertex.insert({v, (int)parts.size() - 1}).second)
        fail(Err::Parse, "vertex " + std::to_string(v) + " in two clusters");
  }
  SimpleGraph contracted = contract_partition(g, parts);
  cg.adj = Csr::from_edges(contracted.n, contracted.edges);
  return cg;
}

int min_clusters_on_path_exhaustive(const PlaneGraph& g,
                                    const std::map<int, int>& vertex_cluster,
                                    int va, int vb) {
  std::vector<int> cluster_ids;
  for (auto& [v, c] : vertex_cluster) {
    (void)v;
    cluster_ids.push_back(c);
  }
  std::sort(cluster_ids.begin(), cluster_ids.end());
  cluster_ids.erase(std::unique(cluster_ids.begin(), cluster_ids.end()), cluster_ids.end());
  if (cluster_ids.size() > 20 || g.n() > 200)
    fail(Err::TooLarge, "exhaustive cluster-path search is for small fixtures");

  auto bit_of = [&](int vid) {
    auto it = vertex_cluster.find(vid);
    if (it == vertex_cluster.end()) fail(Err::Precondition, "unclustered vertex");
    int r = (int)(std::lower_bound(cluster_ids.begin(), cluster_ids.end(), it->second) -
                  cluster_ids.begin());
    return uint32_t(1) << r;
  };

  int a = g.idx_of(va), b = g.idx_of(vb);
  using State = std::pair<int, uint32_t>;  /* popcount ordering drives the search */
  auto count = [](uint32_t m) { return __builtin_popcount(m); };
  std::priority_queue<std::pair<int, State>, std::vector<std::pair<int, State>>,
                      std::greater<>> pq;
  std::set<State> seen;
  uint32_t m0 = bit_of(va);
  pq.push({1, {a, m0}});
  while (!pq.empty()) {
    auto [cost, st] = pq.top();
    pq.pop();
    auto [v, mask] = st;
    if (v == b) return cost;
    if (!seen.insert(st).second) continue;
    for (const int* p = g.adj.begin(v); p != g.adj.end(v); ++p) {
      uint32_t m2 = mask | bit_of(g.ids[*p]);
      State next{*p, m2};
      if (!seen.count(next)) pq.push({count(m2), next});
    }
  }
  return -1;
}

namespace {

bool frac_less(long long an, long long ad, long long bn, long long bd) {
  return (i128)an * bd < (i128)bn * ad;
}

struct Checker {
  const VerifyInput& in;
  Report& rep;
  const Constants& k = constants();

  std::vector<int> rids{};                     /* sorted region ids */
  std::map<int, const ClusterRec*> cluster_by_id{};
  std::map<int, int> vc{};                     /* vertex id -> cluster id */
  bool partition_clean = true;

  std::vector<std::vector<int32_t>> dg{};      /* contact-graph hops */

  /* Instance store plus the trace's shattered-region snapshots; every
   * region lookup in the checks below goes through this copy. */
  RegionStore st{};

  void violate(const std::string& kind, const std::string& detail) {
    rep.violations.push_back({kind, detail});
  }

  void check_partition() {
    for (const ClusterRec& c : in.clusters) {
      if (!cluster_by_id.insert({c.id, &c}).second) {
        violate("structure", "duplicate cluster id " + std::to_string(c.id));
        partition_clean = false;
      }
      if (c.verts.empty())
        violate("structure", "cluster " + std::to_string(c.id) + " is empty");
      for (int v : c.verts) {
        if (!in.g.has_id(v)) {
          violate("structure", "cluster " + std::to_string(c.id) +
                                   " lists unknown vertex " + std::to_string(v));
          partition_clean = false;
          continue;
        }
        auto [it, fresh] = vc.insert({v, c.id});
        if (!fresh) {
          violate("cluster-overlap",
                  "vertex " + std::to_string(v) + " in clusters " +
                      std::to_string(it->second) + " and " + std::to_string(c.id));
          partition_clean = false;
        }
      }
    }
    for (int v : in.g.ids)
      if (!vc.count(v)) {
        violate("cluster-coverage", "vertex " + std::to_string(v) + " unassigned");
        partition_clean = false;
      }
  }

  void check_connectivity() {
    for (const ClusterRec& c : in.clusters) {
      std::vector<int> verts;
      for (int v : c.verts)
        if (in.g.has_id(v)) verts.push_back(v);
      if (verts.empty()) continue;
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      if (components_within(in.g, verts).size() != 1) {
        violate("cluster-connectivity",
                "cluster " + std::to_string(c.id) + " induces a disconnected subgraph");
        partition_clean = false;
      }
    }
  }

  void check_edge_floor() {
    for (size_t i = 0; i < in.emu.graph.edges.size(); ++i)
      if (in.emu.weights[i] < k.emulator_weight) {
        auto [u, v] = in.emu.graph.edges[i];
        violate("lower-bound", "emulator edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ") has weight " +
                                   std::to_string(in.emu.weights[i]) +
                                   " below the floor " +
                                   std::to_string(k.emulator_weight));
      }
  }

  void check_emulator_shape() {
    if (in.emu.region_ids != rids) {
      violate("structure", "emulator region set differs from the instance");
      return;
    }
    std::vector<int> deg(in.emu.graph.n, 0);
    for (auto [u, v] : in.emu.graph.edges) {
      if (u < 0 || u >= in.emu.graph.n || v < 0 || v >= in.emu.graph.n || u == v) {
        violate("structure", "emulator edge endpoints out of range");
        return;
      }
      deg[u]++;
      deg[v]++;
    }
    for (size_t i = 0; i < rids.size(); ++i)
      if (deg[in.emu.n_clusters + (int)i] != 1)
        violate("structure", "region node for region " + std::to_string(rids[i]) +
                                 " has degree " +
                                 std::to_string(deg[in.emu.n_clusters + (int)i]));
    for (auto& [rid, cid] : in.emu.representative) {
      auto itc = cluster_by_id.find(cid);
      if (itc == cluster_by_id.end()) {
        violate("structure", "representative of region " + std::to_string(rid) +
                                 " is not a known cluster");
        continue;
      }
      const Region& r = st.get(rid);
      bool meets = false;
      for (int v : itc->second->verts)
        meets |= std::binary_search(r.verts.begin(), r.verts.end(), v);
      if (!meets)
        violate("structure", "representative cluster " + std::to_string(cid) +
                                 " misses region " + std::to_string(rid));
    }
  }

  int scattering_bound() const {
    return (int)(rep.mode == BoundMode::Reported ? k.hop_bound_reported
                                                 : k.hop_bound_derived);
  }

  /* Per region: hop distance between its touching clusters in the contracted
   * graph, plus one. Equals the minimum number of distinct clusters any path
   * between two of the region's vertices can meet. */
  void check_scattering() {
    if (!partition_clean) return;
    ClusterGraph cg = cluster_graph_of(in.g, in.clusters);
    std::map<int, std::vector<int32_t>> from;  /* part -> BFS distances */
    auto dist_row = [&](int part) -> const std::vector<int32_t>& {
      auto it = from.find(part);
      if (it == from.end()) {
        bfs_fill(cg.adj, part, from[part]);
        it = from.find(part);
      }
      return it->second;
    };
    for (int rid : rids) {
      const Region& r = st.get(rid);
      std::set<int> touch;
      for (int v : r.verts) touch.insert(cg.part_of_vertex.at(v));
      int worst = 0;
      for (int a : touch) {
        const auto& da = dist_row(a);
        for (int b : touch) {
          if (da[b] == kUnreached)
            fail(Err::Internal, "touching clusters separated in the cluster graph");
          worst = std::max(worst, (int)da[b]);
        }
      }
      int value = worst + 1;
      rep.scattering_max = std::max(rep.scattering_max, value);
      if (value > scattering_bound())
        violate("scattering", "region " + std::to_string(rid) + " needs " +
                                  std::to_string(value) +
                                  " clusters on a connecting path, bound " +
                                  std::to_string(scattering_bound()));
    }
  }

  void contact_distances() {
    ContactGraph cg = contact_graph(in.g, st, rids);
    dg = allpairs_hops_parallel(cg.adj);
  }

  /* R-diameter: contact distance between regions touching a common cluster. */
  void check_diameter() {
    std::map<int, std::vector<int>> regions_at;  /* vertex -> region ranks */
    for (size_t i = 0; i < rids.size(); ++i)
      for (int v : st.get(rids[i]).verts) regions_at[v].push_back((int)i);
    for (const ClusterRec& c : in.clusters) {
      std::set<int> touch;
      for (int v : c.verts) {
        auto it = regions_at.find(v);
        if (it != regions_at.end()) touch.insert(it->second.begin(), it->second.end());
      }
      int worst = 0;
      bool split = false;
      for (int a : touch)
        for (int b : touch) {
          if (dg[a][b] == kUnreached)
            split = true;
          else
            worst = std::max(worst, (int)dg[a][b]);
        }
      if (split)
        violate("diameter", "cluster " + std::to_string(c.id) +
                                " touches regions from separate components");
      rep.diameter_max = std::max(rep.diameter_max, worst);
      if (worst > k.cluster_diameter)
        violate("diameter", "cluster " + std::to_string(c.id) + " has R-diameter " +
                                std::to_string(worst) + ", bound " +
                                std::to_string(k.cluster_diameter));
    }
  }

  void check_pairs() {
    if (in.emu.region_ids != rids) return;  /* shape violation already recorded */
    std::vector<int> sources;
    for (size_t i = 0; i < rids.size(); ++i)
      sources.push_back(in.emu.n_clusters + (int)i);
    WeightedCsr wc = weighted_from_edges(in.emu.graph.n, in.emu.graph.edges, in.emu.weights);
    std::vector<std::vector<int64_t>> dh =
        multisource_dijkstra_parallel(wc.g, wc.w, sources);

    size_t total = rids.size() * (rids.size() - 1) / 2;
    size_t stride = 1;
    if (in.max_pairs > 0 && total > in.max_pairs)
      stride = (total + in.max_pairs - 1) / in.max_pairs;

    bool have_stretch = false;
    size_t counter = 0;
    for (size_t i = 0; i < rids.size(); ++i)
      for (size_t j = i + 1; j < rids.size(); ++j) {
        if (counter++ % stride != 0) continue;
        int32_t dgij = dg[i][j];
        int64_t dhij = dh[i][sources[j]];
        rep.pairs_checked++;
        if (in.keep_pairs) rep.pairs.push_back({rids[i], rids[j], dgij, dhij});

        if (dgij == kUnreached) {
          if (dhij != kFarWeight)
            violate("lower-bound", "regions " + std::to_string(rids[i]) + "," +
                                       std::to_string(rids[j]) +
                                       " are separated yet the emulator connects them");
          continue;
        }
        if (dhij == kFarWeight) {
          violate("upper-bound", "regions " + std::to_string(rids[i]) + "," +
                                     std::to_string(rids[j]) +
                                     " are connected yet the emulator separates them");
          continue;
        }
        if (dhij < dgij)
          violate("lower-bound", "regions " + std::to_string(rids[i]) + "," +
                                     std::to_string(rids[j]) + ": emulator " +
                                     std::to_string(dhij) + " under contact " +
                                     std::to_string(dgij));
        if ((i128)dhij > (i128)k.distortion * dgij)
          violate("upper-bound", "regions " + std::to_string(rids[i]) + "," +
                                     std::to_string(rids[j]) + ": emulator " +
                                     std::to_string(dhij) + " over " +
                                     std::to_string(k.distortion) + "x contact " +
                                     std::to_string(dgij));
        if (dgij == 1 && rep.scattering_max >= 1) {
          /* Touching regions with scattering value h admit an emulator path
           * of at most 2h+1 edges: h-1 cluster hops from each representative
           * to the clusters carrying the contact, one hop across it, and the
           * two pendant edges. The bound is attained, e.g. by neighboring
           * single-cluster regions in adjacent clusters. */
          int64_t hops = 2 * (int64_t)rep.scattering_max + 1;
          int64_t edge_bound = hops * k.emulator_weight;
          if (dhij > edge_bound)
            violate("upper-bound", "adjacent regions " + std::to_string(rids[i]) + "," +
                                       std::to_string(rids[j]) + ": emulator " +
                                       std::to_string(dhij) +
                                       " over the per-edge bound " +
                                       std::to_string(edge_bound));
        }
        if (!have_stretch || frac_less(rep.stretch_num, rep.stretch_den, dhij, dgij)) {
          rep.stretch_num = dhij;
          rep.stretch_den = dgij;
        }
        if (!have_stretch || frac_less(dhij, dgij, rep.min_num, rep.min_den)) {
          rep.min_num = dhij;
          rep.min_den = dgij;
        }
        have_stretch = true;
      }
  }

  const Supernode* supernode_by_id(int id) const {
    for (const Supernode& s : in.trace->supernodes)
      if (s.id == id) return &s;
    return nullptr;
  }

  void check_calls() {
    const TraceData& td = *in.trace;
    for (const OuterCall& call : td.calls) {
      std::set<int> outer(call.outer_verts.begin(), call.outer_verts.end());
      std::set<int> call_sns(call.supernode_ids.begin(), call.supernode_ids.end());

      /* Outer regions of the pass must be fully assigned by it. */
      for (int rid : call.input_regions) {
        const Region& r = st.get(rid);
        bool is_outer = false;
        for (int v : r.verts) is_outer |= outer.count(v) != 0;
        if (!is_outer) continue;
        for (int v : r.verts) {
          auto it = td.assigns.find(v);
          if (it == td.assigns.end() || !call_sns.count(it->second.supernode)) {
            violate("outer-coverage", "vertex " + std::to_string(v) +
                                          " of outer region " + std::to_string(rid) +
                                          " not assigned in pass " +
                                          std::to_string(call.id));
            break;
          }
        }
      }

      /* Pieces sharing an input ancestor must stay close among the pass
       * output. */
      ContactGraph cgr = contact_graph(in.g, st, call.rstar);
      std::map<int, std::vector<int>> by_origin;
      for (int rid : call.rstar) {
        auto it = call.call_origin.find(rid);
        if (it == call.call_origin.end()) {
          violate("structure", "piece " + std::to_string(rid) +
                                   " of pass " + std::to_string(call.id) +
                                   " lacks an origin record");
          continue;
        }
        by_origin[it->second].push_back(rid);
      }
      std::vector<int32_t> dist;
      for (auto& [origin, group] : by_origin) {
        if (group.size() < 2) continue;
        for (int rid : group) {
          bfs_fill(cgr.adj, cgr.rank_of(rid), dist);
          for (int other : group) {
            int32_t d = dist[cgr.rank_of(other)];
            if (d == kUnreached || d > k.subregion_spread)
              violate("origin-spread",
                      "pieces " + std::to_string(rid) + "," + std::to_string(other) +
                          " of origin " + std::to_string(origin) + " are " +
                          (d == kUnreached ? std::string("separated")
                                           : std::to_string(d) + " apart") +
                          ", bound " + std::to_string(k.subregion_spread));
          }
        }
      }

      /* Candidate budget: clusters of this pass meeting one of its pieces. */
      for (int rid : call.rstar) {
        const Region& r = st.get(rid);
        std::set<int> met;
        for (int v : r.verts) {
          auto it = vc.find(v);
          if (it == vc.end()) continue;
          auto itc = cluster_by_id.find(it->second);
          if (itc != cluster_by_id.end() && call_sns.count(itc->second->supernode))
            met.insert(it->second);
        }
        if ((int)met.size() > k.candidate_limit)
          violate("cluster-count", "region " + std::to_string(rid) + " meets " +
                                       std::to_string(met.size()) +
                                       " clusters in pass " + std::to_string(call.id) +
                                       ", bound " + std::to_string(k.candidate_limit));
      }
    }
  }

  /* Bound on the distance from any region containing the vertex. A vertex
   * seeded from the small ball can lie in one region just past the ball
   * boundary, one shared-vertex hop beyond the radius; the sweep and fill
   * bounds already absorb that hop. */
  int threshold_for(const AssignRec& a, int owning_supernode) const {
    switch (a.phase) {
      case Phase::SeedBall: return k.close_seed + 1;
      case Phase::SupernodeSweep: return k.close_sweep;
      case Phase::BigBallFill:
      case Phase::ExpansionSweep:
        return a.supernode == owning_supernode ? k.close_own : k.close_ancestor;
    }
    return k.close_ancestor;
  }

  void check_closeness() {
    const TraceData& td = *in.trace;
    for (const Supernode& s : td.supernodes)
      if (s.domain.empty())
        fail(Err::MissingTrace, "trace lacks domain instrumentation for supernode " +
                                    std::to_string(s.id));

    for (auto& [cid, c] : cluster_by_id) {
      (void)cid;
      const Supernode* s = supernode_by_id(c->supernode);
      if (s == nullptr) {
        violate("structure", "cluster " + std::to_string(c->id) +
                                 " references unknown supernode " +
                                 std::to_string(c->supernode));
        continue;
      }
      if (std::find(s->net_points.begin(), s->net_points.end(), c->net_point) ==
          s->net_points.end())
        violate("structure", "cluster " + std::to_string(c->id) +
                                 " owned by a non-net-point region " +
                                 std::to_string(c->net_point));
    }

    for (const Supernode& s : td.supernodes) {
      ContactGraph cgd = contact_graph(in.g, st, s.domain);
      std::map<int, std::vector<int32_t>> from_np;
      for (int np : s.net_points) bfs_fill(cgd.adj, cgd.rank_of(np), from_np[np]);

      /* Min and max distance over the regions of the domain containing each
       * vertex assigned to a cluster of this supernode. */
      struct Span {
        int32_t dmin = INT32_MAX;
        int32_t dmax = -1;
        int rid_max = -1;
        int rid_sep = -1;
      };
      std::map<int, Span> spans;

      for (int rid : s.domain) {
        const Region& r = st.get(rid);
        for (int v : r.verts) {
          auto itv = vc.find(v);
          if (itv == vc.end()) continue;
          auto itc = cluster_by_id.find(itv->second);
          if (itc == cluster_by_id.end() || itc->second->supernode != s.id) continue;
          auto itd = from_np.find(itc->second->net_point);
          if (itd == from_np.end()) continue;  /* structure violation above */
          int32_t d = itd->second[cgd.rank_of(rid)];
          Span& sp = spans[v];
          if (d == kUnreached) {
            sp.rid_sep = rid;
            continue;
          }
          if (d < sp.dmin) sp.dmin = d;
          if (d > sp.dmax) {
            sp.dmax = d;
            sp.rid_max = rid;
          }
        }
      }

      for (auto& [v, sp] : spans) {
        const ClusterRec* c = cluster_by_id.at(vc.at(v));
        auto ita = td.assigns.find(v);
        if (ita == td.assigns.end()) {
          violate("closeness", "vertex " + std::to_string(v) + " has no trace record");
          continue;
        }
        int t = threshold_for(ita->second, s.id);
        std::string tag = phase_name(ita->second.phase);
        if (sp.rid_sep >= 0)
          violate("closeness",
                  "vertex " + std::to_string(v) + " in region " +
                      std::to_string(sp.rid_sep) + " is separated from net point " +
                      std::to_string(c->net_point) + " at step " + tag);
        else if (sp.dmax > t)
          violate("closeness",
                  "vertex " + std::to_string(v) + " in region " +
                      std::to_string(sp.rid_max) + " is " + std::to_string(sp.dmax) +
                      " from net point " + std::to_string(c->net_point) +
                      " at step " + tag + ", bound " + std::to_string(t));
        /* A seeded vertex must come from a region inside the small ball. */
        if (ita->second.phase == Phase::SeedBall && sp.dmin > k.close_seed)
          violate("closeness",
                  "vertex " + std::to_string(v) + " has no region within " +
                      std::to_string(k.close_seed) + " of net point " +
                      std::to_string(c->net_point) + " at step " + tag);
        if (sp.dmax >= 0) {
          auto [it, fresh] = rep.closeness.insert({tag, (int)sp.dmax});
          if (!fresh) it->second = std::max(it->second, (int)sp.dmax);
        }
      }
    }
  }

  void run() {
    rids = in.region_ids;
    std::sort(rids.begin(), rids.end());

    st = in.store;
    if (in.trace != nullptr)
      for (auto& [rid, verts] : in.trace->regions) {
        if (st.by_id.count(rid)) {
          require(st.get(rid).verts == verts, Err::Parse,
                  "trace region " + std::to_string(rid) +
                      " disagrees with the instance");
          continue;
        }
        st.add_with_id(rid, verts);
      }

    check_partition();
    check_connectivity();
    check_edge_floor();
    check_emulator_shape();
    contact_distances();
    check_diameter();
    check_scattering();
    check_pairs();
    if (in.trace != nullptr) {
      rep.has_trace = true;
      for (const char* tag : {"3a", "3b", "4a", "4b"}) rep.closeness.insert({tag, -1});
      check_calls();
      check_closeness();
    }
  }
};

}  // namespace

Report verify_all(const VerifyInput& in) {
  Report rep;
  rep.mode = in.mode;
  Checker ck{in, rep};
  ck.run();
  return rep;
}

}  // namespace semu
