#include "pinloop/mobidisc.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "pinloop/error.hpp"
#include "pinloop/presentation.hpp"

namespace pinloop {

namespace {

void require_sphere_loop(const Multiloop& m) {
  if (m.n_strands() != 1) throw Error("MultiStrand", "monorbigons are defined for loops (one strand) only");
  if (m.genus() != 0) throw Error("GenusUnsupported", "immersed discs are only detected on the sphere");
}

void check_region(const Multiloop& m, int r) {
  if (r < 0 || r >= m.n_regions()) throw Error("BadRegion", "no region " + std::to_string(r));
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

void check_walk(const Multiloop& m, const std::vector<int>& walk) {
  const auto& mp = m.map();
  if (walk.empty()) throw Error("BadWalk", "empty walk");
  std::vector<char> used(m.n_edges() + 1, 0);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int g = walk[i], k = std::abs(g);
    if (g == 0 || k > m.n_edges()) throw Error("BadWalk", "unknown half-edge " + std::to_string(g));
    if (used[k]++) throw Error("BadWalk", "the walk uses edge " + std::to_string(k) + " twice");
    int next = walk[(i + 1) % walk.size()];
    if (mp.vertex_of(g) != mp.vertex_of(-next)) throw Error("BadWalk", "the walk is not closed");
  }
}

std::vector<int> reversed(const std::vector<int>& walk) {
  std::vector<int> r;
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) r.push_back(-*it);
  return r;
}

// Regions merged across the edges the walk does not use.
std::vector<int> walk_faces(const Multiloop& m, const std::vector<int>& walk) {
  std::vector<char> used(m.n_edges() + 1, 0);
  for (int g : walk) used[std::abs(g)] = 1;
  UnionFind uf(m.n_regions());
  for (int k = 1; k <= m.n_edges(); ++k)
    if (!used[k]) uf.unite(m.region_of(k), m.region_of(-k));
  std::vector<int> face(m.n_regions());
  for (int r = 0; r < m.n_regions(); ++r) face[r] = uf.find(r);
  return face;
}

int position_in(const std::vector<int>& cycle, int h) {
  return static_cast<int>(std::find(cycle.begin(), cycle.end(), h) - cycle.begin());
}

}  // namespace

std::vector<Monorbigon> singular_monorbigons(const Multiloop& loop) {
  require_sphere_loop(loop);
  const auto& mp = loop.map();
  const auto& s = loop.strands()[0];
  int L = static_cast<int>(s.size());
  std::vector<std::vector<int>> pass(loop.n_vertices());
  for (int t = 0; t < L; ++t) pass[mp.vertex_of(s[t])].push_back(t);

  auto arc = [&](int p, int q) { return std::make_pair((p + 1) % L, ((q - p) % L + L) % L); };
  auto forward = [&](std::pair<int, int> a, std::vector<int>& out) {
    for (int i = 0; i < a.second; ++i) out.push_back(s[(a.first + i) % L]);
  };
  auto backward = [&](std::pair<int, int> a, std::vector<int>& out) {
    for (int i = a.second - 1; i >= 0; --i) out.push_back(-s[(a.first + i) % L]);
  };

  std::vector<Monorbigon> out;
  for (int x = 0; x < loop.n_vertices(); ++x) {
    int a = pass[x][0], b = pass[x][1];
    for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
      Monorbigon mb;
      mb.kind = Monorbigon::Kind::Monogon;
      mb.arcs = {arc(p, q)};
      mb.marked_points = {x};
      forward(mb.arcs[0], mb.subloop);
      out.push_back(std::move(mb));
    }
  }
  for (int x = 0; x < loop.n_vertices(); ++x)
    for (int y = x + 1; y < loop.n_vertices(); ++y) {
      std::vector<std::pair<int, int>> ps;  // (passage, vertex)
      for (int t : pass[x]) ps.emplace_back(t, x);
      for (int t : pass[y]) ps.emplace_back(t, y);
      std::sort(ps.begin(), ps.end());
      for (int first = 0; first < 2; ++first) {
        auto p0 = ps[first], p1 = ps[first + 1], p2 = ps[first + 2], p3 = ps[(first + 3) % 4];
        if (p0.second == p1.second || p2.second == p3.second) continue;
        Monorbigon mb;
        mb.kind = Monorbigon::Kind::Bigon;
        mb.arcs = {arc(p0.first, p1.first), arc(p2.first, p3.first)};
        mb.marked_points = {p0.second, p1.second};
        forward(mb.arcs[0], mb.subloop);
        mb.second_reversed = p2.second != p1.second;
        if (mb.second_reversed)
          backward(mb.arcs[1], mb.subloop);
        else
          forward(mb.arcs[1], mb.subloop);
        out.push_back(std::move(mb));
      }
    }
  return out;
}

std::vector<Monorbigon> singular_monorbigons(const Multiloop& loop, int infinity) {
  check_region(loop, infinity);
  return singular_monorbigons(loop);
}

std::vector<int> winding_numbers(const Multiloop& m, const std::vector<int>& walk, int infinity) {
  check_region(m, infinity);
  check_walk(m, walk);
  std::vector<int> net(m.n_edges() + 1, 0);
  for (int g : walk) net[std::abs(g)] += g > 0 ? 1 : -1;
  std::vector<int> w(m.n_regions(), 0);
  std::vector<char> seen(m.n_regions(), 0);
  std::deque<int> queue{infinity};
  seen[infinity] = 1;
  while (!queue.empty()) {
    int r = queue.front();
    queue.pop_front();
    for (int h : m.region_orbit(r)) {
      int s = m.region_of(-h);
      int ws = w[r] + (h > 0 ? net[h] : -net[-h]);
      if (!seen[s]) {
        seen[s] = 1;
        w[s] = ws;
        queue.push_back(s);
      } else if (w[s] != ws) {
        throw Error("GenusUnsupported", "the walk is not null-homologous");
      }
    }
  }
  return w;
}

int turning_number(const Multiloop& m, const std::vector<int>& walk, int infinity) {
  if (m.genus() != 0) throw Error("GenusUnsupported", "turning numbers are computed in the plane");
  auto w = winding_numbers(m, walk, infinity);
  const auto& mp = m.map();
  auto face = walk_faces(m, walk);

  int total = 0;
  std::set<int> faces;
  for (int r = 0; r < m.n_regions(); ++r)
    if (faces.insert(face[r]).second && face[r] != face[infinity]) total += w[r];

  std::vector<int> visits(m.n_vertices(), 0);
  std::vector<char> straight(m.n_vertices(), 1);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int g = walk[i], next = walk[(i + 1) % walk.size()];
    int v = mp.vertex_of(g);
    ++visits[v];
    if (mp.sigma(mp.sigma(g)) != -next) straight[v] = 0;
  }
  for (int v = 0; v < m.n_vertices(); ++v) {
    if (visits[v] < 2) continue;
    if (!straight[v]) throw Error("BadWalk", "the walk touches itself at a corner");
    int sum = 0;
    for (int h : mp.vertices()[v]) sum += w[mp.face_of(h)];
    total -= sum / 4;
  }
  return total;
}

BlankWord blank_word(const Multiloop& m, const std::vector<int>& walk, int infinity) {
  if (m.genus() != 0) throw Error("GenusUnsupported", "Blank words are defined in the plane");
  auto w = winding_numbers(m, walk, infinity);
  auto face = walk_faces(m, walk);
  auto tree = build_tree(m, infinity);
  int nr = m.n_regions();

  BlankWord bw;
  std::map<int, int> ray_of_face;
  std::vector<int> ray_start(nr, -1);
  for (int r = 0; r < nr; ++r) {
    if (face[r] == face[infinity] || ray_of_face.count(face[r])) continue;
    int id = static_cast<int>(ray_of_face.size());
    ray_of_face[face[r]] = id;
    ray_start[r] = id;
    bw.face_winding.push_back(w[r]);
  }

  std::vector<int> depth(nr, 0);
  for (int r : tree.preorder)
    if (r != tree.root) depth[r] = depth[tree.parent[r]] + 1;
  // Rays leaving each region through its parent edge, left to right when
  // looking toward the root.
  std::vector<std::vector<int>> bundle(nr);
  for (auto it = tree.preorder.rbegin(); it != tree.preorder.rend(); ++it) {
    int r = *it;
    if (ray_start[r] >= 0) bundle[r].push_back(ray_start[r]);
    for (int c : tree.children[r]) bundle[r].insert(bundle[r].end(), bundle[c].begin(), bundle[c].end());
  }

  for (int g : walk) {
    int k = std::abs(g);
    int c = tree.edge_generator[k];
    if (c < 0) continue;
    int sign = tree.edge_head[k] == -g ? 1 : -1;
    const auto& b = bundle[c];
    if (sign > 0)
      for (auto it = b.rbegin(); it != b.rend(); ++it) bw.letters.push_back({*it, 1, depth[c]});
    else
      for (int ray : b) bw.letters.push_back({ray, -1, depth[c]});
  }
  return bw;
}

bool groupable(const BlankWord& bw) {
  const auto& a = bw.letters;
  int L = static_cast<int>(a.size());
  if (L == 0) return false;
  // A chord runs along its ray from the inner (negative) crossing out to the
  // outer (positive) one.
  auto chord = [&](int i, int j) {
    if (a[i].ray != a[j].ray || a[i].sign == a[j].sign) return false;
    const auto& neg = a[i].sign < 0 ? a[i] : a[j];
    const auto& pos = a[i].sign < 0 ? a[j] : a[i];
    return neg.depth > pos.depth;
  };
  // ok[i][j]: letters i..j-1 admit non-crossing chords covering every
  // negative letter. Chords never cross the cut between L-1 and 0 without
  // loss of generality, so one linear pass suffices.
  std::vector<std::vector<char>> ok(L + 1, std::vector<char>(L + 1, 0));
  for (int i = 0; i <= L; ++i) ok[i][i] = 1;
  for (int len = 1; len <= L; ++len)
    for (int i = 0; i + len <= L; ++i) {
      int j = i + len;
      bool r = a[i].sign > 0 && ok[i + 1][j];
      for (int k = i + 1; k < j && !r; ++k) r = chord(i, k) && ok[i + 1][k] && ok[k + 1][j];
      ok[i][j] = r;
    }
  return ok[0][L];
}

bool bounds_immersed_disc(const Multiloop& m, const std::vector<int>& walk, int infinity) {
  int tn = turning_number(m, walk, infinity);
  if (tn != 1 && tn != -1) return false;
  const auto oriented = tn == 1 ? walk : reversed(walk);
  auto bw = blank_word(m, oriented, infinity);
  for (int x : bw.face_winding)
    if (x < 0) return false;
  return groupable(bw);
}

bool bounds_immersed_disc(const Multiloop& m, const Monorbigon& b, int infinity) {
  require_sphere_loop(m);
  return bounds_immersed_disc(m, b.subloop, infinity);
}

namespace {

// Copies of each region glued along edges into a surface; see
// count_disc_extensions.
class DiscSearch {
 public:
  DiscSearch(const Multiloop& m, const std::vector<int>& walk, int infinity, int limit)
      : m_(m), mp_(m.map()), walk_(walk), limit_(limit) {
    w_ = winding_numbers(m, walk, infinity);
    ne_ = m.n_edges();
    boundary_.assign(ne_ + 1, -1);
    for (std::size_t t = 0; t < walk.size(); ++t) boundary_[std::abs(walk[t])] = static_cast<int>(t);
    ma_.assign(ne_ + 1, {});
    mb_.assign(ne_ + 1, {});
    assigned_.assign(ne_ + 1, 0);
  }

  int run() {
    for (int x : w_)
      if (x < 0) return 0;
    if (!order_edges()) return 0;
    touched_.assign(m_.n_regions(), 0);
    search(0);
    return static_cast<int>(found_.size());
  }

 private:
  int side_a(int k) const { return mp_.face_of(k); }
  int side_b(int k) const { return mp_.face_of(-k); }

  bool order_edges() {
    int nv = m_.n_vertices();
    vertex_edges_.assign(nv, {});
    for (int v = 0; v < nv; ++v)
      for (int h : mp_.vertices()[v]) vertex_edges_[v].push_back(std::abs(h));
    std::vector<char> seen_v(nv, 0), seen_e(ne_ + 1, 0);
    std::deque<int> queue{mp_.vertex_of(walk_[0])};
    seen_v[queue.front()] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int h : mp_.vertices()[v]) {
        int k = std::abs(h);
        if (!seen_e[k]) {
          seen_e[k] = 1;
          order_.push_back(k);
        }
        int u = mp_.vertex_of(-h);
        if (!seen_v[u]) {
          seen_v[u] = 1;
          queue.push_back(u);
        }
      }
    }
    for (int k = 1; k <= ne_; ++k) {
      int na = w_[side_a(k)], nb = w_[side_b(k)];
      if (boundary_[k] < 0 && na != nb) return false;
      if (boundary_[k] >= 0 && std::abs(na - nb) != 1) return false;
    }
    return true;
  }

  // Copy of the region on the face_of(h) side that has no partner across |h|.
  int free_copy(int h) const {
    const auto& v = h > 0 ? ma_[h] : mb_[-h];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0) return static_cast<int>(i);
    return -1;
  }

  // Copy reached from copy c of face_of(-h) by crossing h counterclockwise.
  int cross(int h, int c) const { return h > 0 ? mb_[h][c] : ma_[-h][c]; }

  bool vertex_ok(int v) const {
    const auto& rot = mp_.vertices()[v];
    std::vector<std::vector<char>> used(4);
    for (int i = 0; i < 4; ++i) used[i].assign(w_[mp_.face_of(rot[i])], 0);
    for (std::size_t t = 0; t < walk_.size(); ++t) {
      int in = walk_[t];
      if (mp_.vertex_of(in) != v) continue;
      int out = -walk_[(t + 1) % walk_.size()];
      int i = position_in(rot, out), j = position_in(rot, in);
      int d = ((j - i) % 4 + 4) % 4;
      int c = free_copy(out);
      if (c < 0) return false;
      for (int step = 0; step < d; ++step) {
        int corner = (i + step) % 4;
        if (used[corner][c]) return false;
        used[corner][c] = 1;
        int h = rot[(corner + 1) % 4];
        int next = cross(h, c);
        if (step + 1 < d) {
          if (next < 0) return false;
          c = next;
        } else if (next >= 0 || h != in) {
          return false;
        }
      }
    }
    for (int i = 0; i < 4; ++i)
      for (std::size_t c0 = 0; c0 < used[i].size(); ++c0) {
        if (used[i][c0]) continue;
        int c = static_cast<int>(c0);
        for (int step = 0; step < 4; ++step) {
          int corner = (i + step) % 4;
          if (used[corner][c]) return false;
          used[corner][c] = 1;
          c = cross(rot[(corner + 1) % 4], c);
          if (c < 0) return false;
        }
        if (c != static_cast<int>(c0)) return false;
      }
    return true;
  }

  bool complete(int v) const {
    for (int k : vertex_edges_[v])
      if (!assigned_[k]) return false;
    return true;
  }

  bool check_vertices_of(int k) const {
    for (int v : {mp_.vertex_of(k), mp_.vertex_of(-k)})
      if (complete(v) && !vertex_ok(v)) return false;
    return true;
  }

  void finish() {
    int nr = m_.n_regions();
    std::vector<int> base(nr + 1, 0);
    for (int r = 0; r < nr; ++r) base[r + 1] = base[r] + w_[r];
    int faces = base[nr];
    UnionFind uf(faces);
    long edges = 0;
    for (int k = 1; k <= ne_; ++k) {
      edges += std::max(ma_[k].size(), mb_[k].size());
      for (std::size_t c = 0; c < ma_[k].size(); ++c)
        if (ma_[k][c] >= 0) uf.unite(base[side_a(k)] + static_cast<int>(c), base[side_b(k)] + ma_[k][c]);
    }
    long verts = 0;
    for (int v = 0; v < m_.n_vertices(); ++v) {
      int sectors = 0, fans = 0, fan_sectors = 0;
      const auto& rot = mp_.vertices()[v];
      for (int h : rot) sectors += w_[mp_.face_of(h)];
      for (std::size_t t = 0; t < walk_.size(); ++t) {
        if (mp_.vertex_of(walk_[t]) != v) continue;
        int i = position_in(rot, -walk_[(t + 1) % walk_.size()]), j = position_in(rot, walk_[t]);
        ++fans;
        fan_sectors += ((j - i) % 4 + 4) % 4;
      }
      verts += fans + (sectors - fan_sectors) / 4;
    }
    std::set<int> comps;
    for (int f = 0; f < faces; ++f) comps.insert(uf.find(f));
    if (comps.size() != 1 || verts - edges + faces != 1) return;
    found_.insert(canonical(base));
  }

  // Matchings relabelled by discovery order from the boundary copy of the
  // first walk edge.
  std::vector<int> canonical(const std::vector<int>& base) const {
    int nr = m_.n_regions();
    std::vector<int> label(base[nr], -1);
    int next = 0;
    int h0 = -walk_[0];
    std::deque<std::pair<int, int>> queue{{mp_.face_of(h0), free_copy(h0)}};
    label[base[queue.front().first] + queue.front().second] = next++;
    while (!queue.empty()) {
      auto [r, c] = queue.front();
      queue.pop_front();
      for (int h : m_.region_orbit(r)) {
        int k = std::abs(h);
        int d = h > 0 ? ma_[k][c] : mb_[k][c];
        if (d < 0) continue;
        int s = mp_.face_of(-h);
        if (label[base[s] + d] < 0) {
          label[base[s] + d] = next++;
          queue.emplace_back(s, d);
        }
      }
    }
    std::vector<int> form;
    for (int k = 1; k <= ne_; ++k) {
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t c = 0; c < ma_[k].size(); ++c) {
        int d = ma_[k][c];
        pairs.emplace_back(label[base[side_a(k)] + static_cast<int>(c)], d < 0 ? -1 : label[base[side_b(k)] + d]);
      }
      std::sort(pairs.begin(), pairs.end());
      for (auto [x, y] : pairs) form.insert(form.end(), {x, y});
      form.push_back(-2);
    }
    return form;
  }

  void assign(int k, const std::vector<int>& a_to_b, int nb) {
    ma_[k] = a_to_b;
    mb_[k].assign(nb, -1);
    for (std::size_t c = 0; c < a_to_b.size(); ++c)
      if (a_to_b[c] >= 0) mb_[k][a_to_b[c]] = static_cast<int>(c);
    assigned_[k] = 1;
  }

  void search(std::size_t idx) {
    if (static_cast<int>(found_.size()) >= limit_) return;
    if (idx == order_.size()) {
      finish();
      return;
    }
    int k = order_[idx];
    int A = side_a(k), B = side_b(k);
    int na = w_[A], nb = w_[B];
    auto saved_touched = touched_;
    auto try_map = [&](const std::vector<int>& a_to_b) {
      assign(k, a_to_b, nb);
      touched_[A] = touched_[B] = 1;
      if (check_vertices_of(k)) search(idx + 1);
      assigned_[k] = 0;
      touched_ = saved_touched;
    };
    if (A != B && (!touched_[A] || !touched_[B])) {
      // One side is still unlabelled: relabel it to make the matching the
      // identity, choosing only which copy of a larger labelled side stays free.
      bool a_labelled = touched_[A];
      bool b_labelled = touched_[B];
      if (na == nb || (na < nb && !b_labelled) || (na > nb && !a_labelled)) {
        std::vector<int> f(na, -1);
        for (int c = 0; c < std::min(na, nb); ++c) f[c] = c;
        try_map(f);
      } else if (na > nb) {
        for (int skip = 0; skip < na; ++skip) {
          std::vector<int> f(na, -1);
          for (int c = 0, d = 0; c < na; ++c)
            if (c != skip) f[c] = d++;
          try_map(f);
        }
      } else {
        for (int skip = 0; skip < nb; ++skip) {
          std::vector<int> f(na, -1);
          for (int c = 0, d = 0; c < na; ++c, ++d) f[c] = d == skip ? ++d : d;
          try_map(f);
        }
      }
      return;
    }
    // Both sides labelled: every injection of the smaller side.
    int small = std::min(na, nb), big = std::max(na, nb);
    std::vector<int> perm(big);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<int>> tried;
    do {
      std::vector<int> f(na, -1);
      if (na <= nb) {
        for (int c = 0; c < na; ++c) f[c] = perm[c];
      } else {
        for (int c = 0; c < na; ++c) f[c] = perm[c] < nb ? perm[c] : -1;
      }
      if (!tried.insert(f).second) continue;
      try_map(f);
      if (static_cast<int>(found_.size()) >= limit_) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)small;
  }

  const Multiloop& m_;
  const CombinatorialMap& mp_;
  std::vector<int> walk_;
  int limit_;
  int ne_ = 0;
  std::vector<int> w_, boundary_, order_;
  std::vector<std::vector<int>> ma_, mb_, vertex_edges_;
  std::vector<char> assigned_, touched_;
  std::set<std::vector<int>> found_;
};

}  // namespace

int count_disc_extensions(const Multiloop& m, const std::vector<int>& walk, int infinity, int limit) {
  if (m.genus() != 0) throw Error("GenusUnsupported", "disc extensions are searched in the plane");
  check_region(m, infinity);
  DiscSearch s(m, walk, infinity, limit);
  return s.run();
}

RegionSet mobidisc_of(const Multiloop& m, const Monorbigon& b, int infinity) {
  if (!bounds_immersed_disc(m, b, infinity))
    throw Error("NotImmersed", "the monorbigon does not bound an immersed disc avoiding region " +
                                   std::to_string(infinity));
  auto w = winding_numbers(m, b.subloop, infinity);
  RegionSet disc(m.n_regions());
  for (int r = 0; r < m.n_regions(); ++r)
    if (w[r] != 0) disc.insert(r);
  return disc;
}

std::vector<RegionSet> mobidisc_set(const Multiloop& loop, const MobidiscOptions& opt) {
  auto monorbigons = singular_monorbigons(loop);
  int nr = loop.n_regions();
  std::set<RegionSet> discs;
  std::mutex mu;
  auto work = [&](int inf) {
    std::set<RegionSet> local;
    for (const auto& b : monorbigons) {
      if (!bounds_immersed_disc(loop, b.subloop, inf)) continue;
      auto w = winding_numbers(loop, b.subloop, inf);
      RegionSet disc(nr);
      for (int r = 0; r < nr; ++r)
        if (w[r] != 0) disc.insert(r);
      local.insert(disc);
    }
    std::lock_guard<std::mutex> lock(mu);
    discs.insert(local.begin(), local.end());
  };
  int jobs = std::max(1, std::min(opt.jobs, nr));
  if (jobs == 1) {
    for (int inf = 0; inf < nr; ++inf) work(inf);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        for (int inf = j; inf < nr; inf += jobs) work(inf);
      });
    for (auto& t : pool) t.join();
  }
  return {discs.begin(), discs.end()};
}

MobidiscFormula prune_clauses(int variables, std::vector<RegionSet> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  MobidiscFormula f;
  f.variables = variables;
  for (const auto& c : clauses) {
    bool redundant = false;
    for (const auto& k : f.clauses)
      if (k.subset_of(c)) {
        redundant = true;
        break;
      }
    if (!redundant) f.clauses.push_back(c);
  }
  return f;
}

MobidiscFormula mobidisc_formula(const Multiloop& loop, const MobidiscOptions& opt) {
  return prune_clauses(loop.n_regions(), mobidisc_set(loop, opt));
}

bool satisfies(const MobidiscFormula& f, const RegionSet& s) {
  for (const auto& c : f.clauses)
    if (!c.intersects(s)) return false;
  return true;
}

namespace {

class HittingSearch {
 public:
  HittingSearch(const MobidiscFormula& f, const SearchOptions& opt) : f_(f), opt_(opt) {}

  // All hitting sets of minimum size.
  std::vector<RegionSet> minimum() {
    best_ = static_cast<int>(f_.clauses.size()) + 1;
    RegionSet chosen(f_.variables), banned(f_.variables);
    rec(chosen, banned);
    std::vector<RegionSet> out(found_.begin(), found_.end());
    return out;
  }

 private:
  void tick() {
    if (opt_.budget && ++nodes_ > *opt_.budget)
      throw Error("BudgetExceeded", "hitting-set search exceeded " + std::to_string(*opt_.budget) + " nodes");
  }

  // Number of pairwise disjoint clauses left unhit: a lower bound.
  int packing(const RegionSet& chosen, const RegionSet& banned) const {
    RegionSet used(f_.variables);
    int count = 0;
    for (const auto& c : f_.clauses) {
      if (c.intersects(chosen)) continue;
      RegionSet avail = c - banned;
      if (!avail.intersects(used)) {
        ++count;
        used = used | avail;
      }
    }
    return count;
  }

  void rec(const RegionSet& chosen, const RegionSet& banned) {
    tick();
    const RegionSet* pick = nullptr;
    int pick_size = 0;
    for (const auto& c : f_.clauses) {
      if (c.intersects(chosen)) continue;
      int avail = (c - banned).size();
      if (avail == 0) return;
      if (!pick || avail < pick_size) {
        pick = &c;
        pick_size = avail;
      }
    }
    if (!pick) {
      if (chosen.size() < best_) {
        best_ = chosen.size();
        found_.clear();
      }
      if (chosen.size() == best_) found_.insert(chosen);
      return;
    }
    if (chosen.size() + packing(chosen, banned) > best_) return;
    RegionSet ban = banned;
    for (int x : (*pick - banned).elements()) {
      RegionSet next = chosen;
      next.insert(x);
      rec(next, ban);
      ban.insert(x);
    }
  }

  const MobidiscFormula& f_;
  const SearchOptions& opt_;
  int best_ = 0;
  std::int64_t nodes_ = 0;
  std::set<RegionSet> found_;
};

// Minimal transversals, one clause at a time.
std::vector<RegionSet> minimal_transversals(const MobidiscFormula& f, const SearchOptions& opt) {
  std::vector<RegionSet> current{RegionSet(f.variables)};
  std::int64_t work = 0;
  for (const auto& c : f.clauses) {
    std::set<RegionSet> next;
    for (const auto& t : current) {
      if (t.intersects(c)) {
        next.insert(t);
        continue;
      }
      for (int x : c.elements()) {
        RegionSet u = t;
        u.insert(x);
        next.insert(u);
      }
    }
    std::vector<RegionSet> cand(next.begin(), next.end());
    current.clear();
    for (const auto& t : cand) {
      if (opt.budget && (work += static_cast<std::int64_t>(current.size()) + 1) > *opt.budget)
        throw Error("BudgetExceeded", "dualization exceeded " + std::to_string(*opt.budget) + " steps");
      bool minimal = true;
      for (const auto& u : current)
        if (u.subset_of(t)) {
          minimal = false;
          break;
        }
      if (minimal) current.push_back(t);
    }
  }
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace

PinningReport solve_hitting(const MobidiscFormula& f, HittingMode mode, const SearchOptions& opt) {
  if (mode == HittingMode::AllMinimal) return report_from_minimal_sets(minimal_transversals(f, opt), f.variables);
  HittingSearch search(f, opt);
  PinningReport rep;
  rep.optimal_sets = search.minimum();
  rep.pinning_number = rep.optimal_sets.empty() ? 0 : rep.optimal_sets.front().size();
  rep.forced_regions = RegionSet(f.variables);
  for (const auto& c : f.clauses)
    if (c.size() == 1) rep.forced_regions = rep.forced_regions | c;
  return rep;
}

std::string to_dimacs(const MobidiscFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.variables << " " << f.clauses.size() << "\n";
  for (const auto& c : f.clauses) {
    for (int x : c.elements()) os << x + 1 << " ";
    os << "0\n";
  }
  return os.str();
}

MobidiscFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  MobidiscFormula f;
  long expected = -1;
  std::vector<int> lits;
  std::vector<std::vector<int>> raw;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> f.variables >> expected) || fmt != "cnf" || f.variables < 0)
        throw Error("BadDimacs", "malformed problem line: " + line);
      continue;
    }
    if (expected < 0) throw Error("BadDimacs", "clause before the problem line");
    do {
      long v;
      try {
        std::size_t used = 0;
        v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error("BadDimacs", "not a literal: " + tok);
      }
      if (v == 0) {
        raw.push_back(lits);
        lits.clear();
      } else if (v < 0) {
        throw Error("BadDimacs", "negative literal " + tok + " in a positive formula");
      } else if (v > f.variables) {
        throw Error("BadDimacs", "variable " + tok + " exceeds the declared count");
      } else {
        lits.push_back(static_cast<int>(v) - 1);
      }
    } while (ls >> tok);
  }
  if (expected < 0) throw Error("BadDimacs", "missing problem line");
  if (!lits.empty()) raw.push_back(lits);
  if (static_cast<long>(raw.size()) != expected)
    throw Error("BadDimacs", "expected " + std::to_string(expected) + " clauses, found " + std::to_string(raw.size()));
  for (const auto& c : raw) f.clauses.emplace_back(f.variables, c);
  return f;
}

std::optional<Monorbigon> linking_obstruction(const Multiloop& loop, const RegionSet& pins) {
  if (pins.empty()) throw Error("EmptyPinSet", "linking obstructions need at least one pinned region");
  for (auto& b : singular_monorbigons(loop)) {
    auto w = winding_numbers(loop, b.subloop, 0);
    auto members = pins.elements();
    bool flat = std::all_of(members.begin(), members.end(), [&](int p) { return w[p] == w[members[0]]; });
    if (flat) return b;
  }
  return std::nullopt;
}

}  // namespace pinloop
