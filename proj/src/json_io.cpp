#include "semu/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace semu {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(Err::Parse, path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) fail(Err::Parse, "cannot write " + path);
  out << doc.dump(2) << '\n';
  if (!out) fail(Err::Parse, "write failed for " + path);
}

json scene_to_json(const StringScene& s) {
  json strings = json::array();
  for (const auto& str : s.strings) {
    json pts = json::array();
    for (const Pt& p : str.pts) pts.push_back({p.x, p.y});
    strings.push_back({{"id", str.id}, {"points", pts}});
  }
  return {{"strings", strings}};
}

StringScene scene_from_json(const json& j) {
  try {
    StringScene s;
    for (const json& str : j.at("strings")) {
      StringScene::Str rec;
      rec.id = str.at("id").get<int>();
      for (const json& p : str.at("points"))
        rec.pts.push_back(Pt{p.at(0).get<int64_t>(), p.at(1).get<int64_t>()});
      s.strings.push_back(std::move(rec));
    }
    return s;
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("scene document: ") + e.what());
  }
}

json instance_to_json(const Instance& inst) {
  json verts = json::array();
  for (int i = 0; i < inst.graph.n(); ++i)
    verts.push_back({{"id", inst.graph.ids[i]},
                     {"x", inst.graph.coords[i].x},
                     {"y", inst.graph.coords[i].y}});
  json edges = json::array();
  for (auto& [u, v] : inst.graph.edges) edges.push_back({u, v});
  json regions = json::array();
  for (int rid : inst.regions.ids) {
    const Region& r = inst.store.get(rid);
    regions.push_back({{"id", rid}, {"vertices", r.verts}});
  }
  return {{"vertices", verts}, {"edges", edges}, {"regions", regions}};
}

Instance instance_from_json(const json& j) {
  try {
    std::vector<std::pair<int, Pt>> verts;
    for (const json& v : j.at("vertices"))
      verts.push_back({v.at("id").get<int>(),
                       Pt{v.at("x").get<int64_t>(), v.at("y").get<int64_t>()}});
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.at("edges"))
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    PlaneGraph g = build_plane_graph(verts, edges);

    std::vector<std::pair<int, std::vector<int>>> raw;
    for (const json& r : j.at("regions"))
      raw.push_back({r.at("id").get<int>(), r.at("vertices").get<std::vector<int>>()});
    return make_region_set(g, raw);
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("instance document: ") + e.what());
  }
}

json clustering_to_json(const Clustering& cl, const std::string& trace_file) {
  std::vector<const ClusterRec*> order;
  for (const ClusterRec& c : cl.clusters) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const ClusterRec* a, const ClusterRec* b) { return a->id < b->id; });
  json clusters = json::array();
  for (const ClusterRec* c : order) {
    std::vector<int> verts = c->verts;
    std::sort(verts.begin(), verts.end());
    clusters.push_back({{"id", c->id},
                        {"vertices", verts},
                        {"supernode", c->supernode},
                        {"net_point_region", c->net_point}});
  }
  json doc = {{"clusters", clusters}};
  if (!trace_file.empty()) doc["trace_file"] = trace_file;
  return doc;
}

ClusteringDoc clustering_doc_from_json(const json& j) {
  try {
    ClusteringDoc doc;
    for (const json& c : j.at("clusters")) {
      ClusterRec rec;
      rec.id = c.at("id").get<int>();
      rec.verts = c.at("vertices").get<std::vector<int>>();
      rec.supernode = c.at("supernode").get<int>();
      rec.net_point = c.at("net_point_region").get<int>();
      doc.clusters.push_back(std::move(rec));
    }
    if (j.contains("trace_file")) doc.trace_file = j.at("trace_file").get<std::string>();
    return doc;
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("clustering document: ") + e.what());
  }
}

json trace_to_json(const Clustering& cl, const RegionStore& store) {
  std::vector<int> vids;
  for (auto& [v, rec] : cl.trace) {
    (void)rec;
    vids.push_back(v);
  }
  std::sort(vids.begin(), vids.end());
  json verts = json::array();
  for (int v : vids) {
    const AssignRec& a = cl.trace.at(v);
    verts.push_back({{"id", v},
                     {"phase", phase_name(a.phase)},
                     {"supernode", a.supernode},
                     {"net_point", a.net_point}});
  }

  json sns = json::array();
  for (const Supernode& s : cl.supernodes)
    sns.push_back({{"id", s.id},
                   {"call", s.call_id},
                   {"parent", s.parent},
                   {"creation_index", s.creation_index},
                   {"spine", s.spine},
                   {"members", s.members},
                   {"net_points", s.net_points},
                   {"expansion", s.expansion},
                   {"h_vertices", s.h_verts},
                   {"domain", s.domain}});

  json calls = json::array();
  for (const OuterCall& c : cl.calls) {
    std::vector<std::pair<int, int>> origin(c.call_origin.begin(), c.call_origin.end());
    std::sort(origin.begin(), origin.end());
    json origin_doc = json::array();
    for (auto& [rid, anc] : origin) origin_doc.push_back({rid, anc});
    calls.push_back({{"id", c.id},
                     {"level", c.level},
                     {"h_vertices", c.h_verts},
                     {"outer_vertices", c.outer_verts},
                     {"input_regions", c.input_regions},
                     {"rstar", c.rstar},
                     {"origin", origin_doc},
                     {"supernodes", c.supernode_ids}});
  }

  /* Shattered regions only live in the run's store, so the trace snapshots
   * every region id its records mention. */
  std::set<int> rids;
  for (const Supernode& s : cl.supernodes) {
    rids.insert(s.spine.begin(), s.spine.end());
    rids.insert(s.members.begin(), s.members.end());
    rids.insert(s.net_points.begin(), s.net_points.end());
    rids.insert(s.domain.begin(), s.domain.end());
  }
  for (const OuterCall& c : cl.calls) {
    rids.insert(c.input_regions.begin(), c.input_regions.end());
    rids.insert(c.rstar.begin(), c.rstar.end());
    for (auto& [rid, anc] : c.call_origin) {
      rids.insert(rid);
      rids.insert(anc);
    }
  }
  json regions = json::array();
  for (int rid : rids)
    regions.push_back({{"id", rid}, {"vertices", store.get(rid).verts}});

  return {{"vertices", verts},
          {"supernodes", sns},
          {"calls", calls},
          {"regions", regions}};
}

TraceData trace_from_json(const json& j) {
  try {
    TraceData td;
    for (const json& v : j.at("vertices")) {
      AssignRec a;
      a.phase = phase_from(v.at("phase").get<std::string>());
      a.supernode = v.at("supernode").get<int>();
      a.net_point = v.at("net_point").get<int>();
      td.assigns[v.at("id").get<int>()] = a;
    }
    for (const json& s : j.at("supernodes")) {
      Supernode sn;
      sn.id = s.at("id").get<int>();
      sn.call_id = s.at("call").get<int>();
      sn.parent = s.at("parent").get<int>();
      sn.creation_index = s.at("creation_index").get<int>();
      sn.spine = s.at("spine").get<std::vector<int>>();
      sn.members = s.at("members").get<std::vector<int>>();
      sn.net_points = s.at("net_points").get<std::vector<int>>();
      sn.expansion = s.at("expansion").get<std::vector<int>>();
      sn.h_verts = s.at("h_vertices").get<std::vector<int>>();
      sn.domain = s.at("domain").get<std::vector<int>>();
      td.supernodes.push_back(std::move(sn));
    }
    for (const json& c : j.at("calls")) {
      OuterCall call;
      call.id = c.at("id").get<int>();
      call.level = c.at("level").get<int>();
      call.h_verts = c.at("h_vertices").get<std::vector<int>>();
      call.outer_verts = c.at("outer_vertices").get<std::vector<int>>();
      call.input_regions = c.at("input_regions").get<std::vector<int>>();
      call.rstar = c.at("rstar").get<std::vector<int>>();
      for (const json& o : c.at("origin"))
        call.call_origin[o.at(0).get<int>()] = o.at(1).get<int>();
      call.supernode_ids = c.at("supernodes").get<std::vector<int>>();
      td.calls.push_back(std::move(call));
    }
    for (const json& r : j.at("regions")) {
      std::vector<int> verts = r.at("vertices").get<std::vector<int>>();
      std::sort(verts.begin(), verts.end());
      td.regions[r.at("id").get<int>()] = std::move(verts);
    }
    return td;
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("trace document: ") + e.what());
  }
}

json emulator_to_json(const Emulator& e) {
  json nodes = json::array();
  for (int c = 0; c < e.n_clusters; ++c)
    nodes.push_back({{"id", c}, {"kind", "cluster"}});
  for (size_t i = 0; i < e.region_ids.size(); ++i)
    nodes.push_back({{"id", e.n_clusters + (int)i},
                     {"kind", "region"},
                     {"region", e.region_ids[i]}});
  json edges = json::array();
  for (size_t i = 0; i < e.graph.edges.size(); ++i)
    edges.push_back({e.graph.edges[i].first, e.graph.edges[i].second, e.weights[i]});
  json rep = json::object();
  for (auto& [rid, cid] : e.representative) rep[std::to_string(rid)] = cid;
  return {{"nodes", nodes}, {"edges", edges}, {"representative", rep}};
}

Emulator emulator_from_json(const json& j) {
  try {
    Emulator e;
    int next = 0;
    bool in_regions = false;
    for (const json& nd : j.at("nodes")) {
      int id = nd.at("id").get<int>();
      std::string kind = nd.at("kind").get<std::string>();
      if (id != next++)
        fail(Err::Parse, "emulator nodes must be densely numbered in order");
      if (kind == "cluster") {
        if (in_regions) fail(Err::Parse, "cluster node after region nodes");
        e.n_clusters++;
      } else if (kind == "region") {
        in_regions = true;
        e.region_ids.push_back(nd.at("region").get<int>());
      } else {
        fail(Err::Parse, "unknown emulator node kind " + kind);
      }
    }
    if (!std::is_sorted(e.region_ids.begin(), e.region_ids.end()))
      fail(Err::Parse, "emulator region nodes out of order");
    e.graph.n = next;
    for (const json& ed : j.at("edges")) {
      e.graph.edges.push_back({ed.at(0).get<int>(), ed.at(1).get<int>()});
      e.weights.push_back(ed.at(2).get<int64_t>());
    }
    for (auto& [key, val] : j.at("representative").items()) {
      try {
        e.representative[std::stoi(key)] = val.get<int>();
      } catch (const std::logic_error&) {
        fail(Err::Parse, "bad representative key " + key);
      }
    }
    return e;
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("emulator document: ") + e.what());
  }
}

json report_to_json(const Report& r) {
  json violations = json::array();
  for (const Violation& v : r.violations)
    violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  json closeness = json::object();
  for (auto& [tag, value] : r.closeness) closeness[tag] = value;
  return {{"mode", mode_name(r.mode)},
          {"ok", r.ok()},
          {"has_trace", r.has_trace},
          {"max_stretch", {{"num", r.stretch_num}, {"den", r.stretch_den}}},
          {"min_stretch", {{"num", r.min_num}, {"den", r.min_den}}},
          {"violations", violations},
          {"diameter_max", r.diameter_max},
          {"scattering_max", r.scattering_max},
          {"closeness", closeness},
          {"pairs_checked", r.pairs_checked}};
}

std::string decimal_ratio(long long num, long long den, int places) {
  if (den <= 0 || num < 0) fail(Err::Precondition, "ratio wants num >= 0, den > 0");
  std::string out = std::to_string(num / den);
  long long rem = num % den;
  if (places <= 0) return out;
  out += '.';
  for (int i = 0; i < places; ++i) {
    rem *= 10;
    out += char('0' + rem / den);
    rem %= den;
  }
  return out;
}

}  // namespace semu
