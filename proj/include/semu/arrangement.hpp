#ifndef SEMU_ARRANGEMENT_HPP_
#define SEMU_ARRANGEMENT_HPP_

#include <vector>

#include "semu/regions.hpp"

namespace semu {

/* A scene of strings: each string is a polyline with at least one point.
 * Coordinates are integers capped at |x|,|y| <= 1e5 so that every exact
 * intersection computation fits comfortably in 128 bits. */
struct StringScene {
  struct Str {
    int id = -1;
    std::vector<Pt> pts;
  };
  std::vector<Str> strings;
};

constexpr int64_t kSceneCoordCap = 100000;

struct ArrangementOutput {
  PlaneGraph graph;          /* vertices: polyline vertices + proper crossings */
  std::vector<int> string_ids;              /* ascending */
  std::vector<std::vector<int>> regions;    /* aligned with string_ids */
  std::vector<std::pair<int, int>> endpoint_touches; /* string id pairs, sorted */
  int proper_crossings = 0;  /* distinct crossing points */
  int64_t scale = 1;         /* grid factor the realization needed */
};

/* Computes the arrangement exactly (rational crossing points, exact order
 * along every segment), then realizes it on the integer grid: scale up,
 * round each crossing point, and keep growing the scale until the rounded
 * drawing passes the full crossing-free validation. The combinatorics never
 * depend on the rounding. */
ArrangementOutput build_arrangement(const StringScene& scene);

/* The arrangement as an instance whose regions are the strings. Adjacency
 * still means shared vertices or base edges here; route the result through
 * intersection_to_contact before clustering. */
Instance arrangement_instance(const ArrangementOutput& arr);

/* Full pipeline front end: arrangement, then edge subdivision, so that the
 * contact graph of the result is exactly the intersection graph of the
 * strings. */
Instance scene_to_instance(const StringScene& scene);

/* Pairwise geometric intersection test, the oracle the acceptance suite
 * compares contact graphs against. Capped at 50 strings. */
std::vector<std::pair<int, int>> geometric_intersection_pairs(const StringScene& scene);

}  // namespace semu

#endif  // SEMU_ARRANGEMENT_HPP_
