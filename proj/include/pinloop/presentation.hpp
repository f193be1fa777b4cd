#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pinloop/combmap.hpp"
#include "pinloop/freewords.hpp"
#include "pinloop/region_set.hpp"

namespace pinloop {

// Spanning tree of the dual map rooted at a region, plus (in genus > 0) the
// leftover dual edges completing a cut system whose complement is a disc.
struct DualSpanningTree {
  int root = 0;
  std::vector<int> parent;                 // parent region, -1 at the root
  std::vector<int> parent_edge;            // map edge id (> 0) crossed, 0 at the root
  std::vector<std::vector<int>> children;  // counterclockwise after the parent edge
  std::vector<int> preorder;
  // Per map edge (index 1..n): generator id of the cut edge, -1 when not cut.
  // Tree edges carry their child region id; leftover edges carry n_regions + i.
  std::vector<int> edge_generator;
  // Per map edge: the half-edge on the head side of the cut edge (the child
  // side for tree edges), 0 when not cut.
  std::vector<int> edge_head;
  std::vector<int> leftover_edges;

  bool is_cut(int edge) const { return edge_generator[edge] >= 0; }
  bool in_subtree(int region, int ancestor) const;
};

// Breadth-first tree, deterministic in (map, root).
DualSpanningTree build_tree(const Multiloop& m, int root);
// Tree made of the given map edges (must span the dual graph without cycles).
DualSpanningTree tree_from_edges(const Multiloop& m, int root, const std::vector<int>& edges);
// Uniformly shuffled Kruskal tree; used to check tree independence.
DualSpanningTree build_random_tree(const Multiloop& m, int root, std::mt19937_64& rng);

struct FullPresentation {
  DualSpanningTree tree;
  std::vector<int> generators;  // tree generators in preorder, then leftover ones
  CyclicOrder order;
  std::vector<Word> strand_words;  // free-reduced, one per oriented strand
};

FullPresentation full_presentation(const Multiloop& m, const DualSpanningTree& tree);

// Word read counterclockwise around a non-root region, starting with its own
// generator: length = number of cut edges on its boundary.
Word region_relator(const Multiloop& m, const DualSpanningTree& tree, int region);

struct RewriteRule {
  int region = 0;  // eliminated generator
  Word image;      // over the generators of its children (and leftover ones)
};

struct PinnedPresentation {
  RegionSet pins;
  DualSpanningTree tree;
  std::vector<int> generators;  // surviving generators
  CyclicOrder order;            // restriction of the full cyclic order
  std::vector<RewriteRule> rules;        // one per filled non-root region, preorder
  std::vector<Word> rewritten_words;     // free-reduced images of the strand words
  std::vector<Word> strand_words;        // cyclically reduced (canonical rotation)
};

// Requires pins to contain the tree root.
PinnedPresentation pin_presentation(const Multiloop& m, const FullPresentation& full,
                                    const RegionSet& pins);
// Builds the tree itself, rooted at the lowest index of pins (or region 0).
PinnedPresentation pin_presentation(const Multiloop& m, const RegionSet& pins);

struct WindingTable {
  std::vector<int> generators;  // rows
  std::vector<int> punctures;   // columns: pins other than the root
  std::vector<std::vector<int>> entries;
};

WindingTable winding_table(const PinnedPresentation& pinned);
// Winding numbers of a word around each puncture, relative to the root.
std::vector<int> winding_vector(const Word& w, const WindingTable& table);

// sigma_P(gamma): Throws Error("EmptyPinSetUnsupported") for P empty in genus > 0.
std::int64_t self_intersection(const Multiloop& m, const RegionSet& pins);
std::int64_t self_intersection(const Multiloop& m, const PinnedPresentation& pinned);

}  // namespace pinloop
