#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "semu/errors.hpp"
#include "semu/plane_graph.hpp"

using namespace semu;

namespace {

/* w x h grid, ids row-major from 0, unit spacing. */
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

PlaneGraph make_triangle() {
  return build_plane_graph({{0, Pt{0, 0}}, {1, Pt{2, 0}}, {2, Pt{1, 2}}},
                           {{0, 1}, {0, 2}, {1, 2}});
}

/* Convex hexagon cycle v0..v5. */
PlaneGraph make_hexagon() {
  return build_plane_graph({{0, Pt{0, 0}},
                            {1, Pt{2, -1}},
                            {2, Pt{4, 0}},
                            {3, Pt{4, 2}},
                            {4, Pt{2, 3}},
                            {5, Pt{0, 2}}},
                           {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

size_t directed_edge_total(const PlaneGraph& g) {
  size_t total = 0;
  for (const auto& f : g.faces) total += f.size();
  return total;
}

int outer_walk_count(const PlaneGraph& g) {
  int c = 0;
  for (int t : g.turning)
    if (t == -4) ++c;
  return c;
}

}  // namespace

TEST_CASE("triangle embeds with one bounded and one outer face") {
  PlaneGraph g = make_triangle();
  CHECK(g.n() == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.faces.size() == 2);
  CHECK(g.is_connected());
  CHECK(g.outer_face >= 0);
  CHECK(g.faces[g.outer_face].size() == 3);
  CHECK(g.turning[g.outer_face] == -4);
  CHECK(outer_walk_count(g) == 1);
}

TEST_CASE("single edge has one face covering both directions") {
  PlaneGraph g = build_plane_graph({{4, Pt{0, 0}}, {9, Pt{3, 0}}}, {{4, 9}});
  CHECK(g.faces.size() == 1);
  CHECK(g.faces[0].size() == 2);
  CHECK(g.turning[0] == -4);
  CHECK(g.outer_face == 0);
}

TEST_CASE("3x3 grid satisfies the Euler relation") {
  PlaneGraph g = make_grid(3, 3);
  CHECK(g.n() == 9);
  CHECK(g.edges.size() == 12);
  CHECK(g.faces.size() == 5);
  CHECK(g.n() - (int)g.edges.size() + (int)g.faces.size() == 2);
  CHECK(outer_walk_count(g) == 1);
}

TEST_CASE("face walks cover every directed edge exactly once") {
  for (const PlaneGraph& g : {make_triangle(), make_grid(3, 3), make_grid(4, 2), make_hexagon()}) {
    CHECK(directed_edge_total(g) == 2 * g.edges.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& f : g.faces)
      for (const auto& de : f) CHECK(seen.insert(de).second);
  }
}

TEST_CASE("outer vertices of a triangle are all three corners") {
  std::vector<int> out = outer_vertices(make_triangle());
  CHECK(out == std::vector<int>{0, 1, 2});
}

TEST_CASE("outer vertices of a 3x3 grid exclude the center") {
  std::vector<int> out = outer_vertices(make_grid(3, 3));
  CHECK(out == std::vector<int>{0, 1, 2, 3, 5, 6, 7, 8});
}

TEST_CASE("an isolated vertex is its own outer vertex") {
  PlaneGraph g = build_plane_graph({{7, Pt{1, 1}}}, {});
  CHECK(outer_vertices(g) == std::vector<int>{7});
}

TEST_CASE("inducing on the full vertex set reproduces the graph") {
  PlaneGraph g = make_grid(3, 3);
  PlaneGraph h = induced_plane_subgraph(g, g.ids);
  CHECK(h.ids == g.ids);
  CHECK(h.edges == g.edges);
  CHECK(h.faces.size() == g.faces.size());
}

TEST_CASE("grid minus its center induces an 8-cycle") {
  PlaneGraph g = make_grid(3, 3);
  PlaneGraph h = induced_plane_subgraph(g, {0, 1, 2, 3, 5, 6, 7, 8});
  CHECK(h.n() == 8);
  CHECK(h.edges.size() == 8);
  CHECK(h.faces.size() == 2);
  for (int i = 0; i < h.n(); ++i) CHECK(h.adj.off[i + 1] - h.adj.off[i] == 2);
}

TEST_CASE("inducing a disconnected subset is rejected") {
  PlaneGraph g = make_grid(3, 3);
  CHECK_THROWS_AS_MESSAGE(induced_plane_subgraph(g, {0, 8}), Error, doctest::Contains("disconnected"));
  try {
    induced_plane_subgraph(g, {0, 8});
  } catch (const Error& e) {
    CHECK(e.kind == Err::DisconnectedInduced);
  }
}

TEST_CASE("empty bounding set marks the lowest outer vertex critical") {
  PlaneGraph g = make_grid(3, 3);
  CHECK(critical_vertices(g, g.ids, {}) == std::vector<int>{0});
}

TEST_CASE("removing one hexagon vertex leaves its two ring neighbors critical") {
  PlaneGraph g = make_hexagon();
  std::vector<int> h = {1, 2, 3, 4, 5};
  CHECK(critical_vertices(g, h, {0}) == std::vector<int>{1, 5});
}

TEST_CASE("critical vertices lie in H on the outer walk with a neighbor in W") {
  PlaneGraph g = make_grid(4, 4);
  /* W = right column, H = the rest. */
  std::vector<int> w = {3, 7, 11, 15};
  std::vector<int> h;
  for (int v : g.ids)
    if (std::find(w.begin(), w.end(), v) == w.end()) h.push_back(v);
  std::vector<int> crit = critical_vertices(g, h, w);
  CHECK(crit.size() >= 1);
  CHECK(crit.size() <= 2);
  std::vector<int> outer = outer_vertices(g);
  for (int v : crit) {
    CHECK(std::find(h.begin(), h.end(), v) != h.end());
    CHECK(std::find(outer.begin(), outer.end(), v) != outer.end());
    bool touches_w = false;
    for (int u : w)
      for (const auto& e : g.edges)
        if (e == std::make_pair(std::min(u, v), std::max(u, v))) touches_w = true;
    CHECK(touches_w);
  }
  CHECK(crit == std::vector<int>{2, 14});
}

TEST_CASE("contracting singleton parts keeps the edge structure") {
  PlaneGraph g = make_grid(3, 2);
  std::vector<std::vector<int>> parts;
  for (int v : g.ids) parts.push_back({v});
  SimpleGraph s = contract_partition(g, parts);
  CHECK(s.n == g.n());
  CHECK(s.edges.size() == g.edges.size());
}

TEST_CASE("contracting everything into one part leaves a single bare node") {
  PlaneGraph g = make_grid(3, 2);
  SimpleGraph s = contract_partition(g, {{0, 1, 2, 3, 4, 5}});
  CHECK(s.n == 1);
  CHECK(s.edges.empty());
}

TEST_CASE("contracting a 2x3 grid by rows yields a two-node path") {
  PlaneGraph g = make_grid(3, 2);
  SimpleGraph s = contract_partition(g, {{0, 1, 2}, {3, 4, 5}});
  CHECK(s.n == 2);
  CHECK(s.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("subdividing a single edge yields a three-vertex path") {
  PlaneGraph g = build_plane_graph({{0, Pt{0, 0}}, {1, Pt{2, 0}}}, {{0, 1}});
  std::vector<int> mids;
  PlaneGraph s = subdivide(g, &mids);
  CHECK(s.n() == 3);
  CHECK(s.edges.size() == 2);
  CHECK(mids.size() == 1);
  CHECK(mids[0] == 2);
  /* Coordinates double so midpoints stay integral. */
  CHECK(s.coords[s.idx_of(0)] == Pt{0, 0});
  CHECK(s.coords[s.idx_of(1)] == Pt{4, 0});
  CHECK(s.coords[s.idx_of(2)] == Pt{2, 0});
}

TEST_CASE("subdividing a triangle yields a six-cycle") {
  PlaneGraph s = subdivide(make_triangle());
  CHECK(s.n() == 6);
  CHECK(s.edges.size() == 6);
  CHECK(s.faces.size() == 2);
  for (int i = 0; i < s.n(); ++i) CHECK(s.adj.off[i + 1] - s.adj.off[i] == 2);
}

TEST_CASE("subdividing the 3x3 grid produces 21 vertices and 24 edges") {
  std::vector<int> mids;
  PlaneGraph s = subdivide(make_grid(3, 3), &mids);
  CHECK(s.n() == 21);
  CHECK(s.edges.size() == 24);
  CHECK(mids.size() == 12);
  /* Midpoint ids are fresh, above every original id. */
  for (int m : mids) CHECK(m >= 9);
  std::set<int> uniq(mids.begin(), mids.end());
  CHECK(uniq.size() == mids.size());
}

TEST_CASE("components_within orders components by smallest member") {
  PlaneGraph g = make_grid(5, 1);
  auto comps = components_within(g, {4, 2, 0, 3});
  CHECK(comps == std::vector<std::vector<int>>{{0}, {2, 3, 4}});
}

TEST_CASE("a crossing drawing is rejected") {
  try {
    build_plane_graph({{0, Pt{0, 0}}, {1, Pt{2, 2}}, {2, Pt{0, 2}}, {3, Pt{2, 0}}},
                      {{0, 1}, {2, 3}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == Err::CrossingDrawing);
  }
}

TEST_CASE("two vertices on one point are rejected") {
  try {
    build_plane_graph({{0, Pt{1, 1}}, {1, Pt{1, 1}}}, {});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == Err::DuplicateCoordinate);
  }
}

TEST_CASE("an edge naming an unknown vertex is rejected") {
  try {
    build_plane_graph({{0, Pt{0, 0}}, {1, Pt{1, 0}}}, {{0, 7}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == Err::DanglingEdge);
  }
}
