#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "semu/errors.hpp"
#include "semu/generate.hpp"
#include "semu/regions.hpp"

using namespace semu;

namespace {

PlaneGraph make_grid(int w, int h) {
  std::vector<std::pair<int, Pt>> verts;
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) verts.push_back({y * w + x, Pt{x, y}});
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      int v = y * w + x;
      if (x + 1 < w) edges.push_back({v, v + 1});
      if (y + 1 < h) edges.push_back({v, v + w});
    }
  return build_plane_graph(verts, edges);
}

PlaneGraph make_path(int n) { return make_grid(n, 1); }

std::vector<char> mask_of(const PlaneGraph& g, const std::vector<int>& ids) {
  std::vector<char> m(g.n(), 0);
  for (int id : ids) m[g.idx_of(id)] = 1;
  return m;
}

}  // namespace

TEST_CASE("singleton regions covering everything leave the graph unchanged") {
  PlaneGraph g = make_grid(3, 3);
  std::vector<std::pair<int, std::vector<int>>> raw;
  for (int v : g.ids) raw.push_back({v, {v}});
  Instance inst = make_region_set(g, raw);
  CHECK(inst.graph.n() == 9);
  CHECK(inst.graph.edges == g.edges);
  CHECK(inst.regions.ids.size() == 9);
  CHECK(inst.regions.support(inst.store) == g.ids);
}

TEST_CASE("one region covering everything leaves the graph unchanged") {
  PlaneGraph g = make_grid(3, 3);
  Instance inst = make_region_set(g, {{0, g.ids}});
  CHECK(inst.graph.n() == 9);
  CHECK(inst.regions.ids == std::vector<int>{0});
  const Region& r = inst.store.get(0);
  CHECK(r.origin == 0);
  CHECK(r.parent == 0);
}

TEST_CASE("uncovered vertices are trimmed away") {
  PlaneGraph g = make_grid(3, 3);
  /* Two regions covering 7 of the 9 vertices. */
  Instance inst = make_region_set(g, {{0, {0, 1, 2, 5}}, {1, {3, 6, 7}}});
  CHECK(inst.graph.n() == 7);
  CHECK_FALSE(inst.graph.has_id(4));
  CHECK_FALSE(inst.graph.has_id(8));
  CHECK(inst.regions.support(inst.store) == std::vector<int>{0, 1, 2, 3, 5, 6, 7});
}

TEST_CASE("empty and disconnected raw regions are rejected") {
  PlaneGraph g = make_grid(3, 3);
  try {
    make_region_set(g, {{0, {}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == Err::EmptyRegion);
  }
  try {
    make_region_set(g, {{0, {0, 8}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == Err::DisconnectedRegion);
  }
}

TEST_CASE("a single region forms a one-node contact graph") {
  PlaneGraph g = make_grid(2, 2);
  Instance inst = make_region_set(g, {{0, g.ids}});
  ContactGraph cg = contact_graph(inst.graph, inst.store, inst.regions.ids);
  CHECK(cg.nodes == std::vector<int>{0});
  CHECK(cg.adj.nbr.empty());
}

TEST_CASE("a base edge alone joins two disjoint regions") {
  PlaneGraph g = make_path(4);
  Instance inst = make_region_set(g, {{0, {0, 1}}, {1, {2, 3}}});
  ContactGraph cg = contact_graph(inst.graph, inst.store, inst.regions.ids);
  CHECK(cg.adj.adjacent(cg.rank_of(0), cg.rank_of(1)));
}

TEST_CASE("overlapping intervals on a path match the brute-force oracle") {
  PlaneGraph g = make_path(20);
  std::vector<std::pair<int, std::vector<int>>> raw;
  for (int k = 0; k < 5; ++k) {
    std::vector<int> vs;
    for (int v = k * 4; v < std::min(20, k * 4 + 6); ++v) vs.push_back(v);
    raw.push_back({k, vs});
  }
  Instance inst = make_region_set(g, raw);
  ContactGraph cg = contact_graph(inst.graph, inst.store, inst.regions.ids);
  auto brute = brute_force_contact(inst.graph, inst.store, inst.regions.ids);
  std::vector<std::pair<int, int>> got;
  for (int i = 0; i < (int)cg.nodes.size(); ++i)
    for (const int* p = cg.adj.begin(i); p != cg.adj.end(i); ++p)
      if (i < *p) got.push_back({cg.nodes[i], cg.nodes[*p]});
  std::sort(got.begin(), got.end());
  CHECK(got == brute);
}

TEST_CASE("contact distance counts region hops") {
  /* Five intervals, each touching only the next. */
  PlaneGraph g = make_path(10);
  std::vector<std::pair<int, std::vector<int>>> raw = {
      {0, {0, 1}}, {1, {2, 3}}, {2, {4, 5}}, {3, {6, 7}}, {4, {8, 9}}};
  Instance inst = make_region_set(g, raw);
  ContactGraph cg = contact_graph(inst.graph, inst.store, inst.regions.ids);
  CHECK(contact_distance(cg, 0, 0) == 0);
  CHECK(contact_distance(cg, 0, 1) == 1);
  CHECK(contact_distance(cg, 0, 4) == 4);
  CHECK(contact_distance(cg, 1, 4) == 3);
}

TEST_CASE("separated regions report unreachable contact distance") {
  PlaneGraph g = build_plane_graph(
      {{0, Pt{0, 0}}, {1, Pt{1, 0}}, {2, Pt{5, 0}}, {3, Pt{6, 0}}}, {{0, 1}, {2, 3}});
  Instance inst = make_region_set(g, {{0, {0, 1}}, {1, {2, 3}}});
  ContactGraph cg = contact_graph(inst.graph, inst.store, inst.regions.ids);
  CHECK(contact_distance(cg, 0, 1) == kUnreached);
}

TEST_CASE("shattering with a disjoint set returns the region unchanged") {
  PlaneGraph g = make_path(5);
  Instance inst = make_region_set(g, {{0, {0, 1, 2}}, {1, {3, 4}}});
  std::vector<int> out = shatter(g, inst.store, 0, mask_of(g, {3, 4}));
  CHECK(out == std::vector<int>{0});
}

TEST_CASE("shattering a region inside the set returns it unchanged") {
  PlaneGraph g = make_path(5);
  Instance inst = make_region_set(g, {{0, g.ids}});
  std::vector<int> out = shatter(g, inst.store, 0, mask_of(g, g.ids));
  CHECK(out == std::vector<int>{0});
}

TEST_CASE("shattering a path at its middle vertex yields three pieces") {
  PlaneGraph g = make_path(5);
  Instance inst = make_region_set(g, {{0, g.ids}});
  std::vector<int> out = shatter(g, inst.store, 0, mask_of(g, {2}));
  REQUIRE(out.size() == 3);
  /* Pieces ordered by smallest vertex, all with the split region's origin. */
  CHECK(inst.store.get(out[0]).verts == std::vector<int>{0, 1});
  CHECK(inst.store.get(out[1]).verts == std::vector<int>{2});
  CHECK(inst.store.get(out[2]).verts == std::vector<int>{3, 4});
  for (int id : out) {
    CHECK(inst.store.get(id).origin == 0);
    CHECK(inst.store.get(id).parent == 0);
  }
  /* Fresh ids, and the pieces partition the original. */
  std::set<int> covered;
  for (int id : out) {
    CHECK(id > 0);
    for (int v : inst.store.get(id).verts) CHECK(covered.insert(v).second);
  }
  CHECK(covered.size() == 5);
}

TEST_CASE("shatter_all with an empty or full set keeps every region") {
  PlaneGraph g = make_grid(4, 4);
  Instance inst = gen_grid_instance(4, 4, 5, 3);
  std::vector<int> before = inst.regions.ids;
  CHECK(shatter_all(inst.graph, inst.store, before, {}) == before);
  CHECK(shatter_all(inst.graph, inst.store, before, inst.graph.ids) == before);
}

TEST_CASE("shatter_all splits crossing path regions at the shared vertex") {
  /* A plus sign: horizontal 0-1-2-3-4, vertical 5-6-2-7-8. */
  PlaneGraph g = build_plane_graph(
      {{0, Pt{-2, 0}}, {1, Pt{-1, 0}}, {2, Pt{0, 0}}, {3, Pt{1, 0}}, {4, Pt{2, 0}},
       {5, Pt{0, -2}}, {6, Pt{0, -1}}, {7, Pt{0, 1}}, {8, Pt{0, 2}}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {2, 6}, {2, 7}, {7, 8}});
  Instance inst = make_region_set(g, {{0, {0, 1, 2, 3, 4}}, {1, {5, 6, 2, 7, 8}}});
  std::vector<int> out = shatter_all(inst.graph, inst.store, inst.regions.ids, {2});
  REQUIRE(out.size() == 6);
  std::vector<std::vector<int>> pieces;
  for (int id : out) pieces.push_back(inst.store.get(id).verts);
  std::sort(pieces.begin(), pieces.end());
  std::vector<std::vector<int>> want = {{0, 1}, {2}, {2}, {3, 4}, {5, 6}, {7, 8}};
  CHECK(pieces == want);
}

TEST_CASE("shattering preserves contact distances of the origins") {
  Instance inst = gen_grid_instance(6, 6, 8, 21);
  ContactGraph before = contact_graph(inst.graph, inst.store, inst.regions.ids);
  Splitmix rng(5);
  std::vector<int> cut;
  for (int v : inst.graph.ids)
    if (rng.below(3) == 0) cut.push_back(v);
  std::vector<int> after_ids = shatter_all(inst.graph, inst.store, inst.regions.ids, cut);
  ContactGraph after = contact_graph(inst.graph, inst.store, after_ids);
  /* Pieces can only be farther apart than the regions they came from. */
  for (int a : after_ids)
    for (int b : after_ids) {
      if (a == b) continue;
      int32_t da = contact_distance(after, a, b);
      if (da == kUnreached) continue;
      int oa = inst.store.get(a).origin, ob = inst.store.get(b).origin;
      int32_t dorig = contact_distance(before, oa, ob);
      CHECK(dorig != kUnreached);
      CHECK(dorig <= da);
    }
}

TEST_CASE("subdividing turns edge adjacency into vertex sharing only") {
  /* Two regions adjacent only through the base edge. */
  PlaneGraph g = build_plane_graph({{0, Pt{0, 0}}, {1, Pt{1, 0}}}, {{0, 1}});
  Instance inst = make_region_set(g, {{0, {0}}, {1, {1}}});
  Instance conv = intersection_to_contact(inst);
  ContactGraph cg = contact_graph(conv.graph, conv.store, conv.regions.ids);
  CHECK_FALSE(cg.adj.adjacent(cg.rank_of(0), cg.rank_of(1)));
}

TEST_CASE("vertex-sharing regions stay adjacent after conversion") {
  PlaneGraph g = make_path(3);
  Instance inst = make_region_set(g, {{0, {0, 1}}, {1, {1, 2}}});
  Instance conv = intersection_to_contact(inst);
  ContactGraph cg = contact_graph(conv.graph, conv.store, conv.regions.ids);
  CHECK(cg.adj.adjacent(cg.rank_of(0), cg.rank_of(1)));
}

TEST_CASE("conversion makes contact adjacency match set intersection") {
  Instance inst = gen_grid_instance(5, 5, 7, 9);
  Instance conv = intersection_to_contact(inst);
  ContactGraph cg = contact_graph(conv.graph, conv.store, conv.regions.ids);
  for (int a : inst.regions.ids)
    for (int b : inst.regions.ids) {
      if (a >= b) continue;
      const auto& va = inst.store.get(a).verts;
      const auto& vb = inst.store.get(b).verts;
      std::vector<int> inter;
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                            std::back_inserter(inter));
      CHECK(cg.adj.adjacent(cg.rank_of(a), cg.rank_of(b)) == !inter.empty());
    }
}

TEST_CASE("contact adjacency equals the brute-force oracle on random grids") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = gen_grid_instance(6, 5, 6 + (int)(seed % 5), seed);
    ContactGraph cg = contact_graph(inst.graph, inst.store, inst.regions.ids);
    auto brute = brute_force_contact(inst.graph, inst.store, inst.regions.ids);
    std::vector<std::pair<int, int>> got;
    for (int i = 0; i < (int)cg.nodes.size(); ++i)
      for (const int* p = cg.adj.begin(i); p != cg.adj.end(i); ++p)
        if (i < *p) got.push_back({cg.nodes[i], cg.nodes[*p]});
    std::sort(got.begin(), got.end());
    CHECK(got == brute);
  }
}

TEST_CASE("brute-force contact refuses oversized graphs") {
  Instance inst = gen_grid_instance(30, 20, 10, 1);
  try {
    brute_force_contact(inst.graph, inst.store, inst.regions.ids);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == Err::TooLarge);
  }
}
