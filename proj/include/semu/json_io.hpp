#pragma once

#include <json.hpp>

#include "semu/arrangement.hpp"
#include "semu/clustering.hpp"
#include "semu/emulator.hpp"
#include "semu/verify.hpp"

namespace semu {

/* All document writers emit arrays in a fixed order and rely on sorted
 * object keys, so a given in-memory value always serializes to the same
 * bytes. */

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& doc);

nlohmann::json scene_to_json(const StringScene& s);
StringScene scene_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

struct ClusteringDoc {
  std::vector<ClusterRec> clusters;
  std::string trace_file;  /* empty when the document names none */
};

nlohmann::json clustering_to_json(const Clustering& cl, const std::string& trace_file);
ClusteringDoc clustering_doc_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const Clustering& cl, const RegionStore& store);
TraceData trace_from_json(const nlohmann::json& j);

nlohmann::json emulator_to_json(const Emulator& e);
Emulator emulator_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);

/* num/den as a decimal string with the given number of places, truncated;
 * exact integer arithmetic so every platform prints the same bytes. */
std::string decimal_ratio(long long num, long long den, int places);

}  // namespace semu
