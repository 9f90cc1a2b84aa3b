#pragma once

#include <cstdint>

#include "semu/arrangement.hpp"
#include "semu/regions.hpp"

namespace semu {

/* splitmix64: tiny, well-known, and easy to reimplement bit-for-bit in any
 * language, which keeps generated fixtures portable. */
struct Splitmix {
  uint64_t state;

  explicit Splitmix(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /* Uniform value in [0, n) by 128-bit multiply, no modulo bias worth
   * caring about at fixture scale. */
  uint64_t below(uint64_t n) {
    return (uint64_t)(((unsigned __int128)next() * n) >> 64);
  }
};

/* w x h grid graph with k connected regions covering every vertex. */
Instance gen_grid_instance(int w, int h, int k, uint64_t seed);

/* n random integer segments inside [0,bbox]^2, resampled until the scene is
 * in general position. */
StringScene gen_segment_scene(int n, int bbox, uint64_t seed);

/* k pairwise-crossing segments whose intersection graph is the complete
 * graph K_k; fully deterministic. */
StringScene gen_clique_scene(int k);

}  // namespace semu
