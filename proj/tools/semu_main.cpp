#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "semu/arrangement.hpp"
#include "semu/clustering.hpp"
#include "semu/emulator.hpp"
#include "semu/errors.hpp"
#include "semu/generate.hpp"
#include "semu/json_io.hpp"
#include "semu/kernels.hpp"
#include "semu/regions.hpp"
#include "semu/verify.hpp"

namespace {

using namespace semu;

void write_instance(const std::string& path, const Instance& inst) {
  save_json_file(path, instance_to_json(inst));
  std::cout << "wrote " << path << " (" << inst.graph.n() << " vertices, "
            << inst.graph.edges.size() << " edges, "
            << inst.regions.ids.size() << " regions)\n";
}

void write_scene(const std::string& path, const StringScene& scene) {
  save_json_file(path, scene_to_json(scene));
  std::cout << "wrote " << path << " (" << scene.strings.size() << " strings)\n";
}

struct GenOpts {
  std::string family;
  std::string out;
  uint64_t seed = 1;
  int rows = 5;
  int cols = 5;
  int regions = 4;
  int count = 8;
  int bbox = 1000;
};

void run_gen(const GenOpts& o) {
  if (o.family == "grid") {
    write_instance(o.out, gen_grid_instance(o.cols, o.rows, o.regions, o.seed));
  } else if (o.family == "segments") {
    write_scene(o.out, gen_segment_scene(o.count, o.bbox, o.seed));
  } else if (o.family == "clique") {
    write_scene(o.out, gen_clique_scene(o.count));
  } else {
    fail(Err::Parse, "unknown family " + o.family);
  }
}

void run_convert(const std::string& in, const std::string& out) {
  StringScene scene = scene_from_json(load_json_file(in));
  write_instance(out, scene_to_instance(scene));
}

void run_cluster(const std::string& in, const std::string& out,
                 const std::string& trace) {
  Instance inst = instance_from_json(load_json_file(in));
  Clustering cl =
      cluster_all(inst.graph, inst.store, inst.regions.ids, !trace.empty());
  if (!trace.empty()) save_json_file(trace, trace_to_json(cl, inst.store));
  save_json_file(out, clustering_to_json(cl, trace));
  std::cout << "wrote " << out << " (" << cl.clusters.size() << " clusters";
  if (!trace.empty()) std::cout << ", trace " << trace;
  std::cout << ")\n";
}

/* The document carries just the partition; the emulator needs the id
 * membership map as well, so rebuild it and insist on disjoint clusters. */
Clustering clustering_from_doc(const ClusteringDoc& doc) {
  Clustering cl;
  cl.clusters = doc.clusters;
  for (const ClusterRec& rec : cl.clusters)
    for (int v : rec.verts) {
      auto [it, fresh] = cl.vertex_cluster.emplace(v, rec.id);
      if (!fresh && it->second != rec.id)
        fail(Err::Parse, "vertex " + std::to_string(v) + " in two clusters");
    }
  return cl;
}

void run_emulate(const std::string& instance_path,
                 const std::string& clustering_path, const std::string& out) {
  Instance inst = instance_from_json(load_json_file(instance_path));
  ClusteringDoc doc = clustering_doc_from_json(load_json_file(clustering_path));
  Clustering cl = clustering_from_doc(doc);
  Emulator emu = build_emulator(inst.graph, inst.store, inst.regions.ids, cl);
  save_json_file(out, emulator_to_json(emu));
  EmulatorStats st = emulator_stats(emu);
  std::cout << "wrote " << out << " (" << st.nodes << " nodes, " << st.edges
            << " edges)\n";
}

/* A clustering document may name its trace file; a relative name is read
 * next to the document itself. An explicit --trace wins over both. */
std::string resolve_trace(const std::string& flag,
                          const std::string& clustering_path,
                          const std::string& from_doc) {
  if (!flag.empty()) return flag;
  if (from_doc.empty()) return "";
  namespace fs = std::filesystem;
  fs::path p(from_doc);
  if (p.is_relative()) {
    fs::path beside = fs::path(clustering_path).parent_path() / p;
    if (fs::exists(beside) || !fs::exists(p)) p = beside;
  }
  if (!fs::exists(p)) fail(Err::Parse, "trace file not found: " + p.string());
  return p.string();
}

struct VerifyOpts {
  std::string instance;
  std::string clustering;
  std::string emulator;
  std::string trace;
  std::string mode = "derived";
  std::string out;
  size_t max_pairs = 5000;
};

int run_verify(const VerifyOpts& o) {
  Instance inst = instance_from_json(load_json_file(o.instance));
  ClusteringDoc doc = clustering_doc_from_json(load_json_file(o.clustering));
  Emulator emu = emulator_from_json(load_json_file(o.emulator));

  TraceData trace;
  bool has_trace = false;
  std::string trace_path = resolve_trace(o.trace, o.clustering, doc.trace_file);
  if (!trace_path.empty()) {
    trace = trace_from_json(load_json_file(trace_path));
    has_trace = true;
  }

  VerifyInput in{inst.graph,
                 inst.store,
                 inst.regions.ids,
                 doc.clusters,
                 emu,
                 has_trace ? &trace : nullptr,
                 mode_from(o.mode),
                 o.max_pairs,
                 false};
  Report rep = verify_all(in);
  if (!o.out.empty()) save_json_file(o.out, report_to_json(rep));

  for (const Violation& v : rep.violations)
    std::cout << "violation " << v.kind << ": " << v.detail << "\n";
  if (rep.ok()) {
    std::cout << "verification passed (" << rep.pairs_checked
              << " region pairs, max stretch "
              << decimal_ratio(rep.stretch_num, rep.stretch_den, 6) << ")\n";
    return 0;
  }
  std::cout << "verification FAILED (" << rep.violations.size()
            << " violations)\n";
  return 1;
}

struct ReportOpts {
  std::string instance;
  std::string emulator;
  std::string out;
  size_t max_pairs = 0;
};

/* Stretch histogram over region pairs: one CSV row per distinct reduced
 * ratio distance-in-emulator / distance-in-contact-graph. */
void run_report(const ReportOpts& o) {
  Instance inst = instance_from_json(load_json_file(o.instance));
  Emulator emu = emulator_from_json(load_json_file(o.emulator));

  const std::vector<int>& rids = inst.regions.ids;
  ContactGraph cg = contact_graph(inst.graph, inst.store, rids);
  auto dg = allpairs_hops_parallel(cg.adj);

  WeightedCsr wg = weighted_from_edges(emu.nodes(), emu.graph.edges, emu.weights);
  std::vector<int> sources;
  sources.reserve(rids.size());
  for (int rid : rids) sources.push_back(emu.node_of_region(rid));
  auto dh = multisource_dijkstra_parallel(wg.g, wg.w, sources);

  size_t m = rids.size();
  size_t total = m * (m - 1) / 2;
  size_t stride = 1;
  if (o.max_pairs > 0 && total > o.max_pairs)
    stride = (total + o.max_pairs - 1) / o.max_pairs;

  std::map<std::pair<int64_t, int64_t>, size_t> hist;
  size_t pairs = 0;
  size_t flat = 0;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j, ++flat) {
      if (flat % stride != 0) continue;
      int32_t dist_g = dg[cg.rank_of(rids[i])][cg.rank_of(rids[j])];
      int64_t dist_h = dh[i][emu.node_of_region(rids[j])];
      if (dist_g == kUnreached || dist_h == kFarWeight) continue;
      int64_t g = std::gcd(dist_h, (int64_t)dist_g);
      hist[{dist_h / g, dist_g / g}]++;
      pairs++;
    }

  std::ofstream fout(o.out);
  require(fout.good(), Err::Parse, "cannot write " + o.out);
  fout << "stretch_num,stretch_den,stretch,count\n";
  for (const auto& [ratio, count] : hist)
    fout << ratio.first << "," << ratio.second << ","
         << decimal_ratio(ratio.first, ratio.second, 6) << "," << count << "\n";
  require(fout.good(), Err::Parse, "cannot write " + o.out);
  std::cout << "wrote " << o.out << " (" << hist.size() << " distinct ratios, "
            << pairs << " pairs)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string-graph emulator pipeline"};
  app.require_subcommand(1);
  int rc = 0;

  GenOpts gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a scene or instance");
  cmd_gen->add_option("--family", gen.family, "grid, segments, or clique")
      ->required();
  cmd_gen->add_option("--out", gen.out, "output file")->required();
  cmd_gen->add_option("--seed", gen.seed, "generator seed");
  cmd_gen->add_option("--rows", gen.rows, "grid rows");
  cmd_gen->add_option("--cols", gen.cols, "grid columns");
  cmd_gen->add_option("--regions", gen.regions, "grid region count");
  cmd_gen->add_option("--count", gen.count, "string count");
  cmd_gen->add_option("--bbox", gen.bbox, "segment coordinate bound");
  cmd_gen->callback([&] { run_gen(gen); });

  std::string conv_in, conv_out;
  CLI::App* cmd_conv =
      app.add_subcommand("convert", "build an instance from a scene");
  cmd_conv->add_option("--in", conv_in, "scene file")->required();
  cmd_conv->add_option("--out", conv_out, "instance file")->required();
  cmd_conv->callback([&] { run_convert(conv_in, conv_out); });

  std::string cl_in, cl_out, cl_trace;
  CLI::App* cmd_cl = app.add_subcommand("cluster", "cluster an instance");
  cmd_cl->add_option("--in", cl_in, "instance file")->required();
  cmd_cl->add_option("--out", cl_out, "clustering file")->required();
  cmd_cl->add_option("--trace", cl_trace, "also write an assignment trace");
  cmd_cl->callback([&] { run_cluster(cl_in, cl_out, cl_trace); });

  std::string em_inst, em_cl, em_out;
  CLI::App* cmd_em =
      app.add_subcommand("emulate", "build the emulator for a clustering");
  cmd_em->add_option("--instance", em_inst, "instance file")->required();
  cmd_em->add_option("--clustering", em_cl, "clustering file")->required();
  cmd_em->add_option("--out", em_out, "emulator file")->required();
  cmd_em->callback([&] { run_emulate(em_inst, em_cl, em_out); });

  VerifyOpts ver;
  CLI::App* cmd_ver =
      app.add_subcommand("verify", "check every guarantee and report");
  cmd_ver->add_option("--instance", ver.instance, "instance file")->required();
  cmd_ver->add_option("--clustering", ver.clustering, "clustering file")
      ->required();
  cmd_ver->add_option("--emulator", ver.emulator, "emulator file")->required();
  cmd_ver->add_option("--trace", ver.trace, "assignment trace file");
  cmd_ver->add_option("--mode", ver.mode, "hop bound: paper or derived");
  cmd_ver->add_option("--max-pairs", ver.max_pairs,
                      "sample cap for the pair check, 0 checks all");
  cmd_ver->add_option("--out", ver.out, "also write the report as JSON");
  cmd_ver->callback([&] { rc = run_verify(ver); });

  ReportOpts rep;
  CLI::App* cmd_rep =
      app.add_subcommand("report", "stretch histogram as CSV");
  cmd_rep->add_option("--instance", rep.instance, "instance file")->required();
  cmd_rep->add_option("--emulator", rep.emulator, "emulator file")->required();
  cmd_rep->add_option("--out", rep.out, "CSV file")->required();
  cmd_rep->add_option("--max-pairs", rep.max_pairs,
                      "sample cap, 0 keeps every pair");
  cmd_rep->callback([&] { run_report(rep); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error (" << err_name(e.kind) << "): " << e.what() << "\n";
    return exit_code_for(e.kind);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
