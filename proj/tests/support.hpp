#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "pinloop/arrangement.hpp"
#include "pinloop/combmap.hpp"
#include "pinloop/error.hpp"
#include "pinloop/fixtures.hpp"

namespace testing {

using namespace pinloop;

inline Multiloop load(const std::string& name) { return fixture(name).loop; }

// Connected 4-regular map with n edges on a random surface.
inline CombinatorialMap random_map(std::mt19937_64& rng, int n) {
  std::vector<int> hs;
  for (int i = 1; i <= n; ++i) {
    hs.push_back(i);
    hs.push_back(-i);
  }
  for (;;) {
    std::shuffle(hs.begin(), hs.end(), rng);
    std::vector<std::vector<int>> cycles;
    for (std::size_t i = 0; i < hs.size(); i += 4) cycles.push_back({hs[i], hs[i + 1], hs[i + 2], hs[i + 3]});
    auto m = CombinatorialMap::from_cycles(cycles, true);
    if (m.connected()) return m;
  }
}

// Closed polylines with integer corners in [0, size]^2, traced; retried
// until generic, connected, with vertex count in [lo, hi].
inline Multiloop random_plane_multiloop(std::mt19937_64& rng, int lo, int hi, int strands = 1, int size = 40) {
  std::uniform_int_distribution<int> coord(0, size), corners(3, 8);
  for (;;) {
    std::vector<std::vector<Point>> loops(strands);
    for (auto& l : loops) {
      int k = corners(rng);
      for (int i = 0; i < k; ++i) l.push_back({coord(rng), coord(rng)});
    }
    try {
      auto d = trace_polylines(loops);
      auto map = CombinatorialMap::from_cycles(d.sigma, true);
      if (!map.connected() || map.n_vertices() < lo || map.n_vertices() > hi) continue;
      return d.multiloop();
    } catch (const Error&) {
    }
  }
}

inline std::vector<int> reversed_walk(const std::vector<int>& w) {
  std::vector<int> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

}  // namespace testing
