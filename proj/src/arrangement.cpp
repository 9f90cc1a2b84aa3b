#include "semu/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace semu {

namespace {

struct SegId {
  int str;   /* rank into the sorted string list */
  int seg;   /* segment index within the polyline */
};

struct SceneView {
  std::vector<StringScene::Str> strings;  /* sorted by id */
  std::vector<SegRec> segs;
  std::vector<SegId> seg_ids;
  std::vector<std::pair<int, Pt>> lone_points;  /* (string rank, point) */
};

SceneView prepare(const StringScene& scene) {
  SceneView v;
  v.strings = scene.strings;
  std::sort(v.strings.begin(), v.strings.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < v.strings.size(); ++i)
    if (v.strings[i].id == v.strings[i + 1].id)
      fail(Err::Parse, "duplicate string id " + std::to_string(v.strings[i].id));
  for (int s = 0; s < (int)v.strings.size(); ++s) {
    const auto& str = v.strings[s];
    if (str.pts.empty()) fail(Err::Parse, "string with no points");
    for (const Pt& p : str.pts)
      if (std::llabs(p.x) > kSceneCoordCap || std::llabs(p.y) > kSceneCoordCap)
        fail(Err::Parse, "scene coordinate beyond the documented cap");
    if (str.pts.size() == 1) {
      v.lone_points.push_back({s, str.pts[0]});
      continue;
    }
    for (size_t k = 0; k + 1 < str.pts.size(); ++k) {
      if (str.pts[k] == str.pts[k + 1])
        fail(Err::GeneralPosition, "zero-length segment in string " + std::to_string(str.id));
      v.segs.push_back(SegRec{str.pts[k], str.pts[k + 1], s});
      v.seg_ids.push_back(SegId{s, (int)k});
    }
  }
  return v;
}

bool consecutive_same_string(const SceneView& v, int i, int j) {
  return v.seg_ids[i].str == v.seg_ids[j].str &&
         std::abs(v.seg_ids[i].seg - v.seg_ids[j].seg) == 1;
}

std::string pair_msg(const SceneView& v, int i, int j, const char* what) {
  return std::string(what) + " between strings " +
         std::to_string(v.strings[v.seg_ids[i].str].id) + " and " +
         std::to_string(v.strings[v.seg_ids[j].str].id);
}

/* Sort key for points on segment (a,b): the coordinate along the dominant
 * axis, flipped so that it grows from a to b. Monotone in the position on
 * the segment and free of extra products. */
Frac param_along(Pt a, Pt b, const FPoint& p) {
  Pt d = b - a;
  Frac k = (std::llabs(d.x) >= std::llabs(d.y)) ? p.x : p.y;
  int64_t s = (std::llabs(d.x) >= std::llabs(d.y)) ? d.x : d.y;
  if (s < 0) k.num = -k.num;
  return k;
}

}  // namespace

ArrangementOutput build_arrangement(const StringScene& scene) {
  SceneView v = prepare(scene);
  int ns = (int)v.strings.size();

  auto events = scan_segment_pairs_parallel(v.segs);

  /* Exact point -> set of string ranks through it. Every polyline vertex is
   * registered; crossings join in below. */
  std::map<FPoint, std::set<int>> at_point;
  for (int s = 0; s < ns; ++s)
    for (const Pt& p : v.strings[s].pts)
      at_point[FPoint{Frac::whole(p.x), Frac::whole(p.y)}].insert(s);

  std::vector<std::vector<FPoint>> interior(v.segs.size());
  std::set<FPoint> crossing_points;
  std::set<std::pair<int, int>> touches;

  for (const auto& ev : events) {
    bool same = v.seg_ids[ev.i].str == v.seg_ids[ev.j].str;
    switch (ev.kind) {
      case SegContact::Overlap:
        fail(Err::GeneralPosition, pair_msg(v, ev.i, ev.j, "collinear overlap"));
      case SegContact::EndpointOnInterior:
        fail(Err::GeneralPosition, pair_msg(v, ev.i, ev.j, "endpoint inside a segment"));
      case SegContact::VertexTouch:
        if (!same)
          touches.insert(std::minmax(v.strings[v.seg_ids[ev.i].str].id,
                                     v.strings[v.seg_ids[ev.j].str].id));
        break;
      case SegContact::ProperCross: {
        if (consecutive_same_string(v, ev.i, ev.j))
          fail(Err::Internal, "consecutive segments crossing properly");
        interior[ev.i].push_back(ev.at);
        interior[ev.j].push_back(ev.at);
        crossing_points.insert(ev.at);
        auto& owners = at_point[ev.at];
        owners.insert(v.seg_ids[ev.i].str);
        owners.insert(v.seg_ids[ev.j].str);
        break;
      }
      case SegContact::None:
        break;
    }
  }

  for (auto& [s, p] : v.lone_points) {
    (void)s;
    for (const SegRec& seg : v.segs)
      if (strictly_between(seg.a, seg.b, p))
        fail(Err::GeneralPosition, "isolated string point inside a segment");
  }

  for (auto& [p, owners] : at_point)
    if (owners.size() >= 3)
      fail(Err::GeneralPosition, "three strings through one point (" +
                                     frac_str(p.x) + "," + frac_str(p.y) + ")");

  /* Vertex ids in exact coordinate order. */
  std::map<FPoint, int> vid;
  std::vector<FPoint> vpos;
  for (auto& [p, owners] : at_point) {
    vid[p] = (int)vpos.size();
    vpos.push_back(p);
  }

  std::set<std::pair<int, int>> edge_set;
  for (int k = 0; k < (int)v.segs.size(); ++k) {
    const SegRec& s = v.segs[k];
    FPoint pa{Frac::whole(s.a.x), Frac::whole(s.a.y)};
    FPoint pb{Frac::whole(s.b.x), Frac::whole(s.b.y)};
    std::vector<std::pair<Frac, FPoint>> chain;
    chain.push_back({param_along(s.a, s.b, pa), pa});
    chain.push_back({param_along(s.a, s.b, pb), pb});
    for (const FPoint& p : interior[k]) chain.push_back({param_along(s.a, s.b, p), p});
    std::sort(chain.begin(), chain.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      int a = vid.at(chain[i].second), b = vid.at(chain[i + 1].second);
      if (a == b) continue;  /* duplicate crossing entry on this segment */
      edge_set.insert(std::minmax(a, b));
    }
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());

  /* Realize on the integer grid. Growing the scale always converges for a
   * scene in general position: the exact drawing has positive feature
   * separation and rounding error stays below one unit. */
  ArrangementOutput out;
  bool built = false;
  std::string last_reason;
  for (int attempt = 0; attempt < 16 && !built; ++attempt) {
    int64_t f = 1;
    for (int k = 0; k < attempt; ++k) f *= 4;
    std::vector<std::pair<int, Pt>> verts;
    verts.reserve(vpos.size());
    for (int i = 0; i < (int)vpos.size(); ++i)
      verts.push_back({i, Pt{scaled_round(vpos[i].x, f), scaled_round(vpos[i].y, f)}});
    try {
      out.graph = build_plane_graph(verts, edges, /*check_crossings=*/true);
      out.scale = f;
      built = true;
    } catch (const Error& e) {
      if (e.kind != Err::CrossingDrawing && e.kind != Err::DuplicateCoordinate) throw;
      last_reason = e.what();
    }
  }
  if (!built)
    fail(Err::GeneralPosition,
         "scene too tight to realize on the integer grid (" + last_reason + ")");

  for (int s = 0; s < ns; ++s) out.string_ids.push_back(v.strings[s].id);
  out.regions.assign(ns, {});
  for (auto& [p, owners] : at_point)
    for (int s : owners) out.regions[s].push_back(vid.at(p));
  for (auto& r : out.regions) std::sort(r.begin(), r.end());
  out.endpoint_touches.assign(touches.begin(), touches.end());
  out.proper_crossings = (int)crossing_points.size();
  return out;
}

Instance arrangement_instance(const ArrangementOutput& arr) {
  std::vector<std::pair<int, std::vector<int>>> raw;
  for (size_t i = 0; i < arr.string_ids.size(); ++i)
    raw.push_back({arr.string_ids[i], arr.regions[i]});
  return make_region_set(arr.graph, raw);
}

Instance scene_to_instance(const StringScene& scene) {
  ArrangementOutput arr = build_arrangement(scene);
  return intersection_to_contact(arrangement_instance(arr));
}

std::vector<std::pair<int, int>> geometric_intersection_pairs(const StringScene& scene) {
  if (scene.strings.size() > 50) fail(Err::TooLarge, "oracle capped at 50 strings");
  SceneView v = prepare(scene);
  std::set<std::pair<int, int>> out;
  auto events = scan_segment_pairs_serial(v.segs);
  for (const auto& ev : events) {
    int a = v.seg_ids[ev.i].str, b = v.seg_ids[ev.j].str;
    if (a != b && ev.kind != SegContact::None)
      out.insert(std::minmax(v.strings[a].id, v.strings[b].id));
  }
  /* Points with no segments still intersect whatever passes through them. */
  for (auto& [s, p] : v.lone_points) {
    for (int k = 0; k < (int)v.segs.size(); ++k)
      if (v.seg_ids[k].str != s && on_closed_segment(v.segs[k].a, v.segs[k].b, p))
        out.insert(std::minmax(v.strings[s].id, v.strings[v.seg_ids[k].str].id));
    for (auto& [s2, p2] : v.lone_points)
      if (s != s2 && p == p2)
        out.insert(std::minmax(v.strings[s].id, v.strings[s2].id));
  }
  return std::vector<std::pair<int, int>>(out.begin(), out.end());
}

}  // namespace semu
