#include "pinloop/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "pinloop/error.hpp"

namespace pinloop {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Orients a spanning set of dual edges away from the root and fills in the
// derived data (child order, preorder, cotree leftovers).
DualSpanningTree finish_tree(const Multiloop& m, int root, const std::vector<char>& in_tree) {
  const auto& mp = m.map();
  int nr = m.n_regions(), ne = m.n_edges();
  DualSpanningTree t;
  t.root = root;
  t.parent.assign(nr, -1);
  t.parent_edge.assign(nr, 0);
  t.children.assign(nr, {});
  t.edge_generator.assign(ne + 1, -1);
  t.edge_head.assign(ne + 1, 0);

  std::vector<char> seen(nr, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int r = queue.front();
    queue.pop_front();
    for (int h : m.region_orbit(r)) {
      int k = std::abs(h);
      if (!in_tree[k]) continue;
      int s = mp.face_of(-h);
      if (seen[s]) continue;
      seen[s] = 1;
      t.parent[s] = r;
      t.parent_edge[s] = k;
      t.edge_generator[k] = s;
      t.edge_head[k] = -h;
      queue.push_back(s);
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != nr)
    throw Error("Disconnected", "dual graph is not connected");

  for (int r = 0; r < nr; ++r) {
    const auto& orbit = m.region_orbit(r);
    std::size_t start = 0;
    if (r != root) {
      start = static_cast<std::size_t>(
          std::find(orbit.begin(), orbit.end(), t.edge_head[t.parent_edge[r]]) - orbit.begin());
    }
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      int h = orbit[(start + i) % orbit.size()];
      int k = std::abs(h);
      if (t.edge_generator[k] >= 0 && t.edge_head[k] == -h) t.children[r].push_back(mp.face_of(-h));
    }
  }

  std::vector<int> stack{root};
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    t.preorder.push_back(r);
    for (auto it = t.children[r].rbegin(); it != t.children[r].rend(); ++it) stack.push_back(*it);
  }

  // Cotree: a primal spanning forest among edges the dual tree does not cross.
  UnionFind uf(m.n_vertices());
  std::vector<int> rest;
  for (int k = 1; k <= ne; ++k) {
    if (t.edge_generator[k] >= 0) continue;
    if (!uf.unite(mp.vertex_of(k), mp.vertex_of(-k))) rest.push_back(k);
  }
  if (static_cast<int>(rest.size()) != 2 * m.genus())
    throw Error("InternalError", "tree-cotree decomposition has the wrong size");
  for (std::size_t i = 0; i < rest.size(); ++i) {
    int k = rest[i];
    t.leftover_edges.push_back(k);
    t.edge_generator[k] = nr + static_cast<int>(i);
    t.edge_head[k] = k;
  }
  return t;
}

Letter tour_label(const DualSpanningTree& t, int g) {
  int k = std::abs(g);
  return {t.edge_generator[k], t.edge_head[k] == -g ? -1 : 1};
}

}  // namespace

bool DualSpanningTree::in_subtree(int region, int ancestor) const {
  for (int r = region; r != -1; r = parent[r])
    if (r == ancestor) return true;
  return false;
}

DualSpanningTree build_tree(const Multiloop& m, int root) {
  if (root < 0 || root >= m.n_regions()) throw Error("BadRegion", "root region out of range");
  const auto& mp = m.map();
  std::vector<char> in_tree(m.n_edges() + 1, 0);
  std::vector<char> seen(m.n_regions(), 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int r = queue.front();
    queue.pop_front();
    for (int h : m.region_orbit(r)) {
      int s = mp.face_of(-h);
      if (seen[s]) continue;
      seen[s] = 1;
      in_tree[std::abs(h)] = 1;
      queue.push_back(s);
    }
  }
  return finish_tree(m, root, in_tree);
}

DualSpanningTree tree_from_edges(const Multiloop& m, int root, const std::vector<int>& edges) {
  if (root < 0 || root >= m.n_regions()) throw Error("BadRegion", "root region out of range");
  if (static_cast<int>(edges.size()) != m.n_regions() - 1)
    throw Error("BadTree", "a spanning tree needs one edge per non-root region");
  std::vector<char> in_tree(m.n_edges() + 1, 0);
  for (int k : edges) {
    if (k < 1 || k > m.n_edges()) throw Error("BadTree", "tree edge out of range");
    in_tree[k] = 1;
  }
  return finish_tree(m, root, in_tree);
}

DualSpanningTree build_random_tree(const Multiloop& m, int root, std::mt19937_64& rng) {
  if (root < 0 || root >= m.n_regions()) throw Error("BadRegion", "root region out of range");
  const auto& mp = m.map();
  std::vector<int> edges(m.n_edges());
  std::iota(edges.begin(), edges.end(), 1);
  std::shuffle(edges.begin(), edges.end(), rng);
  UnionFind uf(m.n_regions());
  std::vector<char> in_tree(m.n_edges() + 1, 0);
  for (int k : edges)
    if (uf.unite(mp.face_of(k), mp.face_of(-k))) in_tree[k] = 1;
  return finish_tree(m, root, in_tree);
}

FullPresentation full_presentation(const Multiloop& m, const DualSpanningTree& tree) {
  const auto& mp = m.map();
  FullPresentation fp;
  fp.tree = tree;
  for (int r : tree.preorder)
    if (r != tree.root) fp.generators.push_back(r);
  for (int k : tree.leftover_edges) fp.generators.push_back(tree.edge_generator[k]);

  // Walk once around the disc obtained by cutting along the cut edges.
  int start = 0;
  for (int h : mp.half_edges())
    if (tree.is_cut(std::abs(h))) {
      start = h;
      break;
    }
  std::vector<Letter> seq;
  if (start != 0) {
    int g = start;
    std::size_t limit = 2 * static_cast<std::size_t>(mp.n_edges()) + 1;
    do {
      seq.push_back(tour_label(tree, g));
      int x = mp.phi(-g);
      while (!tree.is_cut(std::abs(x))) x = mp.phi(x);
      g = x;
      if (seq.size() > limit) throw Error("InternalError", "tour does not close");
    } while (g != start);
    if (seq.size() != 2 * fp.generators.size())
      throw Error("InternalError", "tour misses some cut edges");
  }
  fp.order = CyclicOrder(seq);

  for (const auto& strand : m.strands()) {
    Word w;
    for (int h : strand) {
      int k = std::abs(h);
      if (!tree.is_cut(k)) continue;
      w.push_back({tree.edge_generator[k], tree.edge_head[k] == -h ? 1 : -1});
    }
    fp.strand_words.push_back(free_reduce(w));
  }
  return fp;
}

Word region_relator(const Multiloop& m, const DualSpanningTree& tree, int region) {
  if (region == tree.root) throw Error("BadRegion", "the root region has no relator");
  const auto& orbit = m.region_orbit(region);
  int p = tree.edge_head[tree.parent_edge[region]];
  std::size_t start = static_cast<std::size_t>(std::find(orbit.begin(), orbit.end(), p) - orbit.begin());
  Word w;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    int h = orbit[(start + i) % orbit.size()];
    int k = std::abs(h);
    if (!tree.is_cut(k)) continue;
    w.push_back({tree.edge_generator[k], tree.edge_head[k] == h ? 1 : -1});
  }
  return w;
}

PinnedPresentation pin_presentation(const Multiloop& m, const FullPresentation& full,
                                    const RegionSet& pins) {
  const auto& tree = full.tree;
  if (!pins.contains(tree.root)) throw Error("BadRoot", "pin set must contain the tree root");
  int nr = m.n_regions();
  PinnedPresentation pp;
  pp.pins = pins;
  pp.tree = tree;

  int n_gens = nr + static_cast<int>(tree.leftover_edges.size());
  std::vector<Word> image(n_gens);
  for (int k : tree.leftover_edges) image[tree.edge_generator[k]] = {{tree.edge_generator[k], 1}};
  auto substitute = [&](const Word& w) {
    Word out;
    for (const auto& x : w) {
      const Word& im = image[x.gen];
      if (x.sign > 0)
        out.insert(out.end(), im.begin(), im.end());
      else {
        Word inv = inverse(im);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    }
    return free_reduce(out);
  };

  std::vector<Word> rule_of(nr);
  for (auto it = tree.preorder.rbegin(); it != tree.preorder.rend(); ++it) {
    int r = *it;
    if (r == tree.root) continue;
    if (pins.contains(r)) {
      image[r] = {{r, 1}};
      continue;
    }
    Word rel = region_relator(m, tree, r);
    rule_of[r] = inverse(Word(rel.begin() + 1, rel.end()));
    image[r] = substitute(rule_of[r]);
  }
  for (int r : tree.preorder) {
    if (r == tree.root) continue;
    if (pins.contains(r))
      pp.generators.push_back(r);
    else
      pp.rules.push_back({r, rule_of[r]});
  }
  for (int k : tree.leftover_edges) pp.generators.push_back(tree.edge_generator[k]);
  pp.order = full.order.restrict_to(pp.generators);
  for (const auto& w : full.strand_words) {
    Word r = substitute(w);
    pp.rewritten_words.push_back(r);
    pp.strand_words.push_back(cyclic_reduce(r).cyclic);
  }
  return pp;
}

PinnedPresentation pin_presentation(const Multiloop& m, const RegionSet& pins) {
  if (pins.universe() != m.n_regions()) throw Error("BadRegion", "pin set has the wrong universe");
  if (pins.empty() && m.genus() > 0)
    throw Error("EmptyPinSetUnsupported", "closed surfaces of positive genus are not supported");
  int root = pins.empty() ? 0 : pins.elements().front();
  RegionSet with_root = pins;
  with_root.insert(root);  // sphere minus a point is simply connected
  auto full = full_presentation(m, build_tree(m, root));
  auto pp = pin_presentation(m, full, with_root);
  pp.pins = pins;
  return pp;
}

WindingTable winding_table(const PinnedPresentation& pinned) {
  const auto& tree = pinned.tree;
  if (!tree.leftover_edges.empty())
    throw Error("GenusUnsupported", "winding numbers need a plane multiloop");
  WindingTable t;
  for (int r : pinned.pins.elements())
    if (r != tree.root) t.punctures.push_back(r);
  t.generators = pinned.generators;
  for (int g : t.generators) {
    std::vector<int> row;
    for (int o : t.punctures) row.push_back(tree.in_subtree(o, g) ? 1 : 0);
    t.entries.push_back(row);
  }
  return t;
}

std::vector<int> winding_vector(const Word& w, const WindingTable& table) {
  std::vector<int> out(table.punctures.size(), 0);
  for (const auto& x : w) {
    auto it = std::find(table.generators.begin(), table.generators.end(), x.gen);
    if (it == table.generators.end()) throw Error("BadLetter", "letter outside the pinned generators");
    const auto& row = table.entries[static_cast<std::size_t>(it - table.generators.begin())];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += x.sign * row[i];
  }
  return out;
}

std::int64_t self_intersection(const Multiloop& m, const PinnedPresentation& pinned) {
  (void)m;
  std::int64_t total = 0;
  const auto& ws = pinned.strand_words;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    if (ws[k].empty()) continue;
    total += self_intersection_word(ws[k], pinned.order);
    for (std::size_t l = k + 1; l < ws.size(); ++l) {
      if (ws[l].empty()) continue;
      total += intersection_number(ws[k], ws[l], pinned.order);
    }
  }
  return total;
}

std::int64_t self_intersection(const Multiloop& m, const RegionSet& pins) {
  return self_intersection(m, pin_presentation(m, pins));
}

}  // namespace pinloop
