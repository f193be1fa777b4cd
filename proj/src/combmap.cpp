#include "pinloop/combmap.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

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

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

std::vector<std::string> CombinatorialMap::diagnose(const std::vector<std::vector<int>>& cycles,
                                                    bool require_four_regular) {
  std::vector<std::string> issues;
  int max_abs = 0;
  std::size_t total = 0;
  for (const auto& c : cycles) {
    if (c.empty()) issues.push_back("empty cycle");
    for (int h : c) {
      if (h == 0) issues.push_back("half-edge id 0 is not allowed");
      max_abs = std::max(max_abs, std::abs(h));
    }
    total += c.size();
    if (require_four_regular && c.size() != 4)
      issues.push_back("vertex cycle of length " + std::to_string(c.size()) + " (expected 4)");
  }
  if (cycles.empty()) issues.push_back("no cycles");
  std::vector<int> seen(2 * static_cast<std::size_t>(max_abs), 0);
  for (const auto& c : cycles)
    for (int h : c)
      if (h != 0) ++seen[index(h)];
  for (int i = 0; i < 2 * max_abs; ++i) {
    int h = from_index(i);
    if (seen[i] == 0) issues.push_back("missing half-edge " + std::to_string(h));
    if (seen[i] > 1) issues.push_back("half-edge " + std::to_string(h) + " repeated");
  }
  if (issues.empty() && total != 2 * static_cast<std::size_t>(max_abs))
    issues.push_back("support size mismatch");
  return issues;
}

CombinatorialMap CombinatorialMap::from_cycles(const std::vector<std::vector<int>>& cycles,
                                               bool require_four_regular) {
  auto issues = diagnose(cycles, false);
  if (!issues.empty()) throw Error("MalformedPermutation", join(issues));
  if (require_four_regular) {
    auto deg = diagnose(cycles, true);
    if (!deg.empty()) throw Error("NotFourRegular", join(deg));
  }
  CombinatorialMap m;
  int max_abs = 0;
  for (const auto& c : cycles)
    for (int h : c) max_abs = std::max(max_abs, std::abs(h));
  m.n_ = max_abs;
  int hn = 2 * max_abs;
  m.sigma_.assign(hn, 0);
  m.sigma_inv_.assign(hn, 0);
  m.vertex_of_.assign(hn, -1);
  for (std::size_t v = 0; v < cycles.size(); ++v) {
    const auto& c = cycles[v];
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      m.sigma_[index(a)] = b;
      m.sigma_inv_[index(b)] = a;
      m.vertex_of_[index(a)] = static_cast<int>(v);
    }
  }
  m.vertices_ = cycles;

  // Faces: orbits of phi, canonical start and order.
  m.face_of_.assign(hn, -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < hn; ++i) {
    int h = from_index(i);
    if (m.face_of_[i] != -1) continue;
    std::vector<int> orbit;
    int x = h;
    do {
      m.face_of_[index(x)] = 0;
      orbit.push_back(x);
      x = m.phi(x);
    } while (x != h);
    // from_index walks 1,-1,2,-2,...: h is already the canonical start.
    orbits.push_back(std::move(orbit));
  }
  m.faces_ = std::move(orbits);
  for (std::size_t f = 0; f < m.faces_.size(); ++f)
    for (int h : m.faces_[f]) m.face_of_[index(h)] = static_cast<int>(f);
  return m;
}

int CombinatorialMap::genus() const {
  int chi = euler_characteristic();
  if (chi % 2 != 0) throw Error("OddEulerCharacteristic", "chi = " + std::to_string(chi));
  return (2 - chi) / 2;
}

bool CombinatorialMap::connected() const {
  UnionFind uf(n_vertices());
  for (int k = 1; k <= n_; ++k) uf.unite(vertex_of(k), vertex_of(-k));
  int roots = 0;
  for (int v = 0; v < n_vertices(); ++v)
    if (uf.find(v) == v) ++roots;
  return roots == 1;
}

std::vector<int> CombinatorialMap::half_edges() const {
  std::vector<int> out;
  out.reserve(2 * n_);
  for (int i = 0; i < 2 * n_; ++i) out.push_back(from_index(i));
  return out;
}

Multiloop Multiloop::from_map(CombinatorialMap map, const std::vector<int>& orientation,
                              const std::map<int, std::string>& labels) {
  for (const auto& v : map.vertices())
    if (v.size() != 4)
      throw Error("NotFourRegular", "vertex cycle of length " + std::to_string(v.size()));
  if (!map.connected()) throw Error("Disconnected", "the map has more than one component");
  Multiloop m;
  m.map_ = std::move(map);
  const auto& mp = m.map_;
  int hn = mp.n_half_edges();
  std::vector<int> orbit_id(hn, -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < hn; ++i) {
    if (orbit_id[i] != -1) continue;
    int h = CombinatorialMap::from_index(i);
    std::vector<int> orbit;
    int x = h;
    do {
      orbit_id[CombinatorialMap::index(x)] = static_cast<int>(orbits.size());
      orbit.push_back(x);
      x = mp.delta(x);
    } while (x != h);
    orbits.push_back(std::move(orbit));
  }
  auto orbit_of = [&](int h) { return orbit_id[CombinatorialMap::index(h)]; };
  auto rotate_to = [&](int h) {
    std::vector<int> o = orbits[orbit_of(h)];
    auto it = std::find(o.begin(), o.end(), h);
    std::rotate(o.begin(), it, o.end());
    return o;
  };
  // Unoriented strand = {orbit(h), orbit(-h)}; key by the smaller orbit id.
  auto strand_key = [&](int h) { return std::min(orbit_of(h), orbit_of(-h)); };
  if (orientation.empty()) {
    std::set<int> done;
    for (int k = 1; k <= mp.n_edges(); ++k) {
      int key = strand_key(k);
      if (done.count(key)) continue;
      done.insert(key);
      m.orientation_.push_back(k);
      m.strands_.push_back(rotate_to(k));
    }
  } else {
    std::set<int> done;
    for (int h : orientation) {
      if (h == 0 || std::abs(h) > mp.n_edges())
        throw Error("BadOrientation", "orientation half-edge " + std::to_string(h) + " out of range");
      int key = strand_key(h);
      if (done.count(key))
        throw Error("BadOrientation", "two orientation entries on one strand");
      done.insert(key);
      m.orientation_.push_back(h);
      m.strands_.push_back(rotate_to(h));
    }
    std::set<int> all;
    for (int k = 1; k <= mp.n_edges(); ++k) all.insert(strand_key(k));
    if (all.size() != done.size())
      throw Error("BadOrientation", "orientation must name one half-edge per strand");
  }
  for (const auto& [r, name] : labels) {
    if (r < 0 || r >= mp.n_faces())
      throw Error("BadLabel", "label for region " + std::to_string(r) + " out of range");
  }
  m.labels_ = labels;
  return m;
}

std::string Multiloop::region_name(int r) const {
  auto it = labels_.find(r);
  return it == labels_.end() ? std::to_string(r) : it->second;
}

std::optional<int> Multiloop::find_region(const std::string& name) const {
  for (const auto& [r, lab] : labels_)
    if (lab == name) return r;
  if (!name.empty() && std::all_of(name.begin(), name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    int r = std::stoi(name);
    if (r >= 0 && r < n_regions()) return r;
  }
  return std::nullopt;
}

bool degree_identity_check(const std::vector<int>& degrees, int chi) {
  long long s = 0;
  for (int d : degrees) s += d - 4;
  return s == -4LL * chi;
}

bool degree_identity_check(const Multiloop& m) {
  std::vector<int> deg;
  for (int r = 0; r < m.n_regions(); ++r) deg.push_back(m.degree(r));
  return degree_identity_check(deg, m.euler_characteristic());
}

std::vector<ComponentProfile> subsurface_profile(const Multiloop& m, const RegionSet& s) {
  const auto& mp = m.map();
  int nr = m.n_regions();
  UnionFind uf(nr);
  for (int k = 1; k <= mp.n_edges(); ++k) {
    int a = mp.face_of(k), b = mp.face_of(-k);
    if (s.contains(a) && s.contains(b)) uf.unite(a, b);
  }
  std::map<int, int> comp_index;
  std::vector<ComponentProfile> out;
  for (int r = 0; r < nr; ++r) {
    if (!s.contains(r)) continue;
    int root = uf.find(r);
    if (!comp_index.count(root)) {
      comp_index[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[comp_index[root]].regions.push_back(r);
  }
  for (auto& comp : out) {
    RegionSet c(nr, comp.regions);
    auto inside = [&](int h) { return c.contains(mp.face_of(h)); };
    int faces = static_cast<int>(comp.regions.size());
    int edges = 0;
    for (int k = 1; k <= mp.n_edges(); ++k) {
      bool a = inside(k), b = inside(-k);
      if (a && b) ++edges;
      else if (a || b) ++edges;  // one boundary side
    }
    // Vertex classes: corners (g, sigma(g)) belong to face_of(g); consecutive
    // corners are glued across edge |g| when both of its sides are inside.
    int verts = 0;
    for (const auto& cyc : mp.vertices()) {
      int d = static_cast<int>(cyc.size());
      int in_corners = 0, joins = 0;
      for (int i = 0; i < d; ++i) {
        int g = cyc[i];
        if (inside(g)) ++in_corners;
        if (inside(g) && inside(-g)) ++joins;
      }
      if (in_corners == 0) continue;
      verts += (joins == d) ? 1 : in_corners - joins;
    }
    comp.euler_characteristic = verts - edges + faces;
    // Boundary cycles.
    std::vector<int> sides;
    for (int h : mp.half_edges())
      if (inside(h) && !inside(-h)) sides.push_back(h);
    std::set<int> seen;
    int cycles = 0;
    for (int h : sides) {
      if (seen.count(h)) continue;
      ++cycles;
      int x = h;
      do {
        seen.insert(x);
        int g = mp.phi(x);
        while (inside(-g)) g = mp.phi(-g);
        x = g;
      } while (x != h);
    }
    comp.boundary_components = cycles;
    comp.genus = (2 - comp.euler_characteristic - cycles) / 2;
  }
  return out;
}

ConnectivityFlags connectivity_flags(const Multiloop& m) {
  if (m.genus() != 0) throw Error("GenusUnsupported", "connectivity flags need a plane multiloop");
  const auto& mp = m.map();
  ConnectivityFlags f;
  for (const auto& orbit : mp.faces()) {
    std::set<int> vs;
    for (int h : orbit)
      if (!vs.insert(mp.vertex_of(-h)).second) f.irreducible = false;
  }
  std::map<std::pair<int, int>, int> sides;
  for (int k = 1; k <= mp.n_edges(); ++k) {
    int a = mp.face_of(k), b = mp.face_of(-k);
    if (a == b) {
      f.indecomposible = false;  // bridge
      continue;
    }
    if (++sides[{std::min(a, b), std::max(a, b)}] > 1) f.indecomposible = false;
  }
  return f;
}

}  // namespace pinloop
