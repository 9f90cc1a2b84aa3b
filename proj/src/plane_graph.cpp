#include "semu/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semu {

int PlaneGraph::idx_of(int id) const {
  auto it = id2idx.find(id);
  if (it == id2idx.end()) fail(Err::DanglingEdge, "unknown vertex id " + std::to_string(id));
  return it->second;
}

/* Quadrant index used by the turning counter. Boundaries are attached so
 * that every nonzero direction lands in exactly one quadrant. */
static int quadrant(Pt d) {
  if (d.x > 0 && d.y >= 0) return 0;
  if (d.x <= 0 && d.y > 0) return 1;
  if (d.x < 0 && d.y <= 0) return 2;
  return 3;
}

/* Signed quarter turns taken when the heading changes from d to d2. A
 * reversal counts as a clockwise half turn: a face walk bouncing off a
 * degree-1 tip wraps the full angle around it. */
static int quarter_turns(Pt d, Pt d2) {
  i128 c = cross(d, d2);
  if (c > 0) return ((quadrant(d2) - quadrant(d)) % 4 + 4) % 4;
  if (c < 0) return -(((quadrant(d) - quadrant(d2)) % 4 + 4) % 4);
  if (dot(d, d2) < 0) return -2;
  return 0;
}

static void compute_embedding(PlaneGraph& g) {
  int n = g.n();
  std::vector<std::pair<int, int>> dense_edges;
  dense_edges.reserve(g.edges.size());
  for (auto& [a, b] : g.edges) dense_edges.push_back({g.idx_of(a), g.idx_of(b)});
  g.adj = Csr::from_edges(n, dense_edges);

  g.rot.assign(n, {});
  for (int v = 0; v < n; ++v) {
    g.rot[v].assign(g.adj.begin(v), g.adj.end(v));
    Pt at = g.coords[v];
    std::sort(g.rot[v].begin(), g.rot[v].end(), [&](int a, int b) {
      return ccw_dir_less(g.coords[a] - at, g.coords[b] - at);
    });
  }

  /* rot_pos[v][u] = position of u in rot[v], for O(1) corner steps. */
  std::vector<std::unordered_map<int, int>> rot_pos(n);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < (int)g.rot[v].size(); ++k) rot_pos[v][g.rot[v][k]] = k;

  g.faces.clear();
  g.turning.clear();
  /* One visited flag per directed edge (v, rot slot). */
  std::vector<std::vector<char>> seen(n);
  for (int v = 0; v < n; ++v) seen[v].assign(g.rot[v].size(), 0);

  for (int v0 = 0; v0 < n; ++v0) {
    for (int s0 = 0; s0 < (int)g.rot[v0].size(); ++s0) {
      if (seen[v0][s0]) continue;
      std::vector<std::pair<int, int>> walk;
      int v = v0, s = s0;
      while (!seen[v][s]) {
        seen[v][s] = 1;
        int u = g.rot[v][s];
        walk.push_back({v, u});
        /* Next corner: at u, leave through the rotation predecessor of v. */
        int pos = rot_pos[u][v];
        int deg = (int)g.rot[u].size();
        int next = (pos - 1 + deg) % deg;
        v = u;
        s = next;
      }
      int quarters = 0;
      int len = (int)walk.size();
      for (int k = 0; k < len; ++k) {
        auto [a, b] = walk[k];
        auto [c, d] = walk[(k + 1) % len];
        quarters += quarter_turns(g.coords[b] - g.coords[a], g.coords[d] - g.coords[c]);
      }
      if (quarters != 4 && quarters != -4)
        fail(Err::Internal, "face walk with turning " + std::to_string(quarters) + "/4");
      g.faces.push_back(std::move(walk));
      g.turning.push_back(quarters);
    }
  }

  /* Component count via plain BFS. */
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> q{v};
    comp[v] = ncomp;
    for (size_t h = 0; h < q.size(); ++h)
      for (const int* p = g.adj.begin(q[h]); p != g.adj.end(q[h]); ++p)
        if (comp[*p] == -1) {
          comp[*p] = ncomp;
          q.push_back(*p);
        }
    ncomp++;
  }
  g.n_components = ncomp;

  g.outer_mask.assign(n, 0);
  int outer_walks = 0, outer_idx = -1;
  for (int f = 0; f < (int)g.faces.size(); ++f) {
    if (g.turning[f] != -4) continue;
    outer_walks++;
    outer_idx = f;
    for (auto& [a, b] : g.faces[f]) {
      g.outer_mask[a] = 1;
      g.outer_mask[b] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (g.rot[v].empty()) g.outer_mask[v] = 1;

  int edged_components = 0;
  {
    std::set<int> with_edges;
    for (auto& [a, b] : dense_edges) with_edges.insert(comp[a]);
    edged_components = (int)with_edges.size();
  }
  if (outer_walks != edged_components)
    fail(Err::Internal, "outer walk count " + std::to_string(outer_walks) +
                            " != edged components " + std::to_string(edged_components));
  g.outer_face = (ncomp == 1 && outer_walks == 1) ? outer_idx : -1;

  /* Euler check per connected drawing. */
  if (ncomp == 1 && n > 0 && !g.edges.empty()) {
    long long f = (long long)g.faces.size();
    if ((long long)n - (long long)g.edges.size() + f != 2)
      fail(Err::Internal, "Euler count broken");
  }
}

static void check_drawing(const PlaneGraph& g) {
  std::vector<SegRec> segs;
  segs.reserve(g.edges.size());
  for (int e = 0; e < (int)g.edges.size(); ++e) {
    int a = g.idx_of(g.edges[e].first), b = g.idx_of(g.edges[e].second);
    segs.push_back(SegRec{g.coords[a], g.coords[b], e});
  }
  auto events = scan_segment_pairs_parallel(segs);
  for (auto& ev : events) {
    auto [a1, b1] = g.edges[ev.i];
    auto [a2, b2] = g.edges[ev.j];
    bool share = (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2);
    if (ev.kind == SegContact::VertexTouch && share) continue;
    fail(Err::CrossingDrawing,
         "edges {" + std::to_string(a1) + "," + std::to_string(b1) + "} and {" +
             std::to_string(a2) + "," + std::to_string(b2) + "} intersect");
  }
}

PlaneGraph build_plane_graph(const std::vector<std::pair<int, Pt>>& vertices,
                             const std::vector<std::pair<int, int>>& edge_list,
                             bool check_crossings) {
  PlaneGraph g;
  std::vector<std::pair<int, Pt>> vs = vertices;
  std::sort(vs.begin(), vs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    if (vs[i].first == vs[i + 1].first)
      fail(Err::Parse, "duplicate vertex id " + std::to_string(vs[i].first));
  g.ids.reserve(vs.size());
  g.coords.reserve(vs.size());
  for (auto& [id, p] : vs) {
    g.id2idx[id] = (int)g.ids.size();
    g.ids.push_back(id);
    g.coords.push_back(p);
  }
  {
    std::set<Pt> used;
    for (auto& p : g.coords)
      if (!used.insert(p).second)
        fail(Err::DuplicateCoordinate, "two vertices share a coordinate");
  }
  std::set<std::pair<int, int>> eset;
  for (auto [a, b] : edge_list) {
    if (!g.has_id(a) || !g.has_id(b))
      fail(Err::DanglingEdge, "edge references unknown vertex");
    if (a == b) fail(Err::DanglingEdge, "self-loop on vertex " + std::to_string(a));
    auto e = std::minmax(a, b);
    if (!eset.insert({e.first, e.second}).second)
      fail(Err::Parse, "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  g.edges.assign(eset.begin(), eset.end());
  if (check_crossings) check_drawing(g);
  compute_embedding(g);
  return g;
}

std::vector<int> outer_vertices(const PlaneGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (g.outer_mask[v]) out.push_back(g.ids[v]);
  return out;
}

PlaneGraph induced_plane_subgraph(const PlaneGraph& g, const std::vector<int>& x_ids) {
  std::vector<char> keep(g.n(), 0);
  std::vector<std::pair<int, Pt>> verts;
  for (int id : x_ids) {
    int v = g.idx_of(id);
    if (keep[v]) fail(Err::Precondition, "duplicate id in induced set");
    keep[v] = 1;
    verts.push_back({id, g.coords[v]});
  }
  std::vector<std::pair<int, int>> es;
  for (auto& [a, b] : g.edges)
    if (keep[g.idx_of(a)] && keep[g.idx_of(b)]) es.push_back({a, b});
  PlaneGraph sub = build_plane_graph(verts, es, /*check_crossings=*/false);
  if (!sub.is_connected() && sub.n() > 0)
    fail(Err::DisconnectedInduced, "induced subgraph is disconnected");
  return sub;
}

std::vector<std::vector<int>> components_within(const PlaneGraph& g,
                                                const std::vector<int>& subset_ids) {
  std::vector<char> in(g.n(), 0);
  for (int id : subset_ids) in[g.idx_of(id)] = 1;
  std::vector<char> done(g.n(), 0);
  std::vector<std::vector<int>> comps;
  /* Dense index order equals id order, so scanning ascending yields
   * components ordered by smallest member. */
  for (int v = 0; v < g.n(); ++v) {
    if (!in[v] || done[v]) continue;
    std::vector<int> q{v};
    done[v] = 1;
    for (size_t h = 0; h < q.size(); ++h)
      for (const int* p = g.adj.begin(q[h]); p != g.adj.end(q[h]); ++p)
        if (in[*p] && !done[*p]) {
          done[*p] = 1;
          q.push_back(*p);
        }
    std::sort(q.begin(), q.end());
    std::vector<int> ids;
    ids.reserve(q.size());
    for (int w : q) ids.push_back(g.ids[w]);
    comps.push_back(std::move(ids));
  }
  return comps;
}

std::vector<int> critical_vertices(const PlaneGraph& h0, const std::vector<int>& h_ids,
                                   const std::vector<int>& w_ids) {
  int n = h0.n();
  std::vector<char> in_h(n, 0), in_w(n, 0);
  for (int id : h_ids) in_h[h0.idx_of(id)] = 1;
  for (int id : w_ids) in_w[h0.idx_of(id)] = 1;
  for (int v = 0; v < n; ++v)
    if (in_h[v] && in_w[v]) fail(Err::NotOuterBounded, "H and W overlap");

  if (w_ids.empty()) {
    if ((int)h_ids.size() != n)
      fail(Err::NotOuterBounded, "empty W requires H to be the whole graph");
    for (int v = 0; v < n; ++v)
      if (h0.outer_mask[v]) return {h0.ids[v]};
    fail(Err::NotOuterBounded, "graph has no outer vertex");
  }

  /* H must be one whole component of h0 minus W. */
  auto comps = components_within(h0, h_ids);
  if (comps.size() != 1) fail(Err::NotOuterBounded, "H is not connected");
  for (int id : h_ids) {
    int v = h0.idx_of(id);
    for (const int* p = h0.adj.begin(v); p != h0.adj.end(v); ++p)
      if (!in_h[*p] && !in_w[*p])
        fail(Err::NotOuterBounded, "H has a neighbor outside W");
  }
  bool h_outer = false, w_outer = false;
  for (int id : h_ids) h_outer |= (bool)h0.outer_mask[h0.idx_of(id)];
  for (int id : w_ids) w_outer |= (bool)h0.outer_mask[h0.idx_of(id)];
  if (!h_outer) fail(Err::NotOuterBounded, "H misses the outer face");
  if (!w_outer) fail(Err::NotOuterBounded, "W misses the outer face");
  if (components_within(h0, w_ids).size() != 1)
    fail(Err::NotOuterBounded, "W is not connected");

  std::set<int> found;
  for (int f = 0; f < (int)h0.faces.size(); ++f) {
    if (h0.turning[f] != -4) continue;
    for (auto& [a, b] : h0.faces[f]) {
      if (in_h[a] && in_w[b]) found.insert(h0.ids[a]);
      if (in_h[b] && in_w[a]) found.insert(h0.ids[b]);
    }
  }
  if (found.empty() || found.size() > 2)
    fail(Err::Internal,
         "critical vertex count " + std::to_string(found.size()) + " out of range");
  return std::vector<int>(found.begin(), found.end());
}

SimpleGraph contract_partition(const PlaneGraph& g,
                               const std::vector<std::vector<int>>& parts) {
  std::vector<int> part_of(g.n(), -1);
  for (int p = 0; p < (int)parts.size(); ++p) {
    if (parts[p].empty()) fail(Err::DisconnectedPart, "empty part");
    for (int id : parts[p]) {
      int v = g.idx_of(id);
      if (part_of[v] != -1) fail(Err::Precondition, "parts overlap");
      part_of[v] = p;
    }
    auto comps = components_within(g, parts[p]);
    if (comps.size() != 1)
      fail(Err::DisconnectedPart, "part " + std::to_string(p) + " is disconnected");
  }
  for (int v = 0; v < g.n(); ++v)
    if (part_of[v] == -1) fail(Err::Precondition, "parts do not cover the vertex set");

  std::set<std::pair<int, int>> es;
  for (auto& [a, b] : g.edges) {
    int pa = part_of[g.idx_of(a)], pb = part_of[g.idx_of(b)];
    if (pa != pb) es.insert(std::minmax(pa, pb));
  }
  SimpleGraph out;
  out.n = (int)parts.size();
  out.edges.assign(es.begin(), es.end());
  /* Contraction of a planar graph stays planar; the edge count bound is the
   * cheap certificate of that. */
  if (out.n >= 3 && (long long)out.edges.size() > 3LL * out.n - 6)
    fail(Err::Internal, "contracted graph exceeds the planar edge bound");
  return out;
}

PlaneGraph subdivide(const PlaneGraph& g, std::vector<int>* midpoint_ids) {
  std::vector<std::pair<int, Pt>> verts;
  verts.reserve(g.n() + g.edges.size());
  int max_id = 0;
  for (int v = 0; v < g.n(); ++v) {
    verts.push_back({g.ids[v], Pt{g.coords[v].x * 2, g.coords[v].y * 2}});
    max_id = std::max(max_id, g.ids[v]);
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(2 * g.edges.size());
  if (midpoint_ids) midpoint_ids->clear();
  int next = max_id + 1;
  for (auto& [a, b] : g.edges) {
    Pt pa = g.coords[g.idx_of(a)], pb = g.coords[g.idx_of(b)];
    int m = next++;
    verts.push_back({m, Pt{pa.x + pb.x, pa.y + pb.y}});
    es.push_back({a, m});
    es.push_back({m, b});
    if (midpoint_ids) midpoint_ids->push_back(m);
  }
  return build_plane_graph(verts, es, /*check_crossings=*/false);
}

}  // namespace semu
