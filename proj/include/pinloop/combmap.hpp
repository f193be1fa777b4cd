#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pinloop/region_set.hpp"

namespace pinloop {

// Pair of permutations on the signed half-edges {±1..±n}: sigma is given,
// the edge involution is negation.
//   phi(h)   = sigma^-1(-h)   region orbits (region of h lies left of the walk v(h) -> v(-h))
//   delta(h) = -sigma^2(h)    oriented strands (h runs from v(-h) to v(h))
class CombinatorialMap {
 public:
  // Throws Error("MalformedPermutation") or Error("NotFourRegular") when
  // require_four_regular is set and some cycle has length != 4.
  static CombinatorialMap from_cycles(const std::vector<std::vector<int>>& cycles,
                                      bool require_four_regular = false);

  // Returns the list of violations, empty when the input is a valid map.
  static std::vector<std::string> diagnose(const std::vector<std::vector<int>>& cycles,
                                           bool require_four_regular);

  int n_edges() const { return n_; }
  int n_half_edges() const { return 2 * n_; }

  int sigma(int h) const { return sigma_[index(h)]; }
  int sigma_inv(int h) const { return sigma_inv_[index(h)]; }
  int phi(int h) const { return sigma_inv(-h); }
  int delta(int h) const { return -sigma(sigma(h)); }

  // Vertices in input cycle order; faces in canonical order (smallest |h|
  // first, positive before negative on ties), each orbit starting at that element.
  const std::vector<std::vector<int>>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int vertex_of(int h) const { return vertex_of_[index(h)]; }
  int face_of(int h) const { return face_of_[index(h)]; }

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_faces() const { return static_cast<int>(faces_.size()); }

  int euler_characteristic() const { return n_vertices() - n_ + n_faces(); }
  // Throws Error("OddEulerCharacteristic") on odd chi.
  int genus() const;
  bool connected() const;

  // All half-edges in the order 1,-1,2,-2,...
  std::vector<int> half_edges() const;

  static int index(int h) { return h > 0 ? 2 * (h - 1) : 2 * (-h - 1) + 1; }
  static int from_index(int i) { return (i % 2 == 0) ? i / 2 + 1 : -(i / 2 + 1); }

 private:
  int n_ = 0;
  std::vector<int> sigma_, sigma_inv_;
  std::vector<std::vector<int>> vertices_, faces_;
  std::vector<int> vertex_of_, face_of_;
};

// A validated 4-regular map together with a chosen orientation per strand
// and optional display names for regions.
class Multiloop {
 public:
  // orientation: one half-edge per unoriented strand selecting its delta-orbit;
  // empty selects, for each strand, the orbit holding its smallest positive id.
  static Multiloop from_map(CombinatorialMap map, const std::vector<int>& orientation = {},
                            const std::map<int, std::string>& labels = {});

  const CombinatorialMap& map() const { return map_; }
  int n_vertices() const { return map_.n_vertices(); }  // #gamma, the double points
  int n_edges() const { return map_.n_edges(); }
  int n_regions() const { return map_.n_faces(); }
  int region_of(int h) const { return map_.face_of(h); }
  int degree(int r) const { return static_cast<int>(map_.faces()[r].size()); }
  const std::vector<int>& region_orbit(int r) const { return map_.faces()[r]; }
  int euler_characteristic() const { return map_.euler_characteristic(); }
  int genus() const { return map_.genus(); }

  // Oriented strands: chosen delta-orbits, starting at the orientation half-edge.
  const std::vector<std::vector<int>>& strands() const { return strands_; }
  int n_strands() const { return static_cast<int>(strands_.size()); }
  const std::vector<int>& orientation() const { return orientation_; }

  // Display name of a region (its label, or its decimal index).
  std::string region_name(int r) const;
  bool has_labels() const { return !labels_.empty(); }
  const std::map<int, std::string>& labels() const { return labels_; }
  // Resolves a label or, failing that, a decimal index.
  std::optional<int> find_region(const std::string& name) const;
  RegionSet all_regions() const { return RegionSet::full(n_regions()); }

 private:
  CombinatorialMap map_;
  std::vector<std::vector<int>> strands_;
  std::vector<int> orientation_;
  std::map<int, std::string> labels_;
};

// Sum over regions of (deg - 4) == -4 chi.
bool degree_identity_check(const Multiloop& m);
bool degree_identity_check(const std::vector<int>& degrees, int chi);

struct ComponentProfile {
  std::vector<int> regions;
  int genus = 0;
  int boundary_components = 0;
  int euler_characteristic = 0;
};

// Components of the union of the regions in s, glued along shared edges.
std::vector<ComponentProfile> subsurface_profile(const Multiloop& m, const RegionSet& s);

struct ConnectivityFlags {
  bool irreducible = true;
  bool indecomposible = true;
};

// Plane multiloops only; throws Error("GenusUnsupported") otherwise.
ConnectivityFlags connectivity_flags(const Multiloop& m);

}  // namespace pinloop
