#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinloop/arrangement.hpp"
#include "pinloop/combmap.hpp"
#include "pinloop/pinning.hpp"
#include "pinloop/region_set.hpp"

namespace pinloop {

// Straight-line plane graph with exact coordinates.
struct PlaneGraph {
  std::vector<Point> vertices;
  std::vector<std::pair<int, int>> edges;
};

// Throws Error("BadGraph") (self-loop, repeated edge, crossing edges, vertex
// on an edge, disconnected, no edge) or Error("ParallelEdges").
void validate_plane_graph(const PlaneGraph& g);

// Brute force over vertex subsets.
int min_vertex_cover(const PlaneGraph& g);

// The loop of edge gadgets, before tracing.
struct GadgetArrangement {
  mpq_class epsilon;
  std::vector<std::vector<Point>> gadget_paths;  // per edge: left window with the whole core, then right window
  std::vector<Point> loop;                       // closed polyline (windows joined by boundary chords)
  std::vector<Point> boundary_windows;           // exit points of the edge lines, clockwise
  // Probe points, per edge: p1 p2 q1 p3 p4 q2 (outside the boundary), M_e.
  std::vector<std::vector<Point>> probes;
};

struct Reduction {
  PlaneGraph graph;
  GadgetArrangement arrangement;
  Multiloop loop;
  std::vector<int> vertex_region;                  // region holding each graph vertex
  std::vector<std::vector<int>> edge_forced;       // per edge, its six forced-pin regions
  std::vector<int> edge_bigon;                     // region holding the midpoint of each edge
  RegionSet forced_pins;
  int expected_crossings = 0;                      // 12 |E| + 4 C(|E|, 2)
};

// Throws Error("EpsilonUnderflow") when no admissible epsilon is found.
Reduction vc_to_loop(const PlaneGraph& g);

// Pinning number through the mobidisc formula and the hitting-set solver.
int reduction_pinning_number(const Reduction& r, const SearchOptions& opt = {});

// True when k is the minimum vertex cover size and the loop's pinning number
// is 6 |E| + k.
bool verify_correspondence(const PlaneGraph& g, int k, const SearchOptions& opt = {});

}  // namespace pinloop
