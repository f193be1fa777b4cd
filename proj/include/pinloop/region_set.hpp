#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pinloop {

// Dynamic bitset over the region indices of one multiloop.
class RegionSet {
 public:
  RegionSet() = default;
  explicit RegionSet(int universe);
  RegionSet(int universe, const std::vector<int>& members);

  static RegionSet full(int universe);
  static RegionSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return n_; }
  bool contains(int r) const;
  void insert(int r);
  void erase(int r);
  int size() const;
  bool empty() const;

  bool subset_of(const RegionSet& other) const;
  bool intersects(const RegionSet& other) const;

  RegionSet operator|(const RegionSet& other) const;
  RegionSet operator&(const RegionSet& other) const;
  RegionSet operator-(const RegionSet& other) const;
  RegionSet complement() const;

  std::vector<int> elements() const;
  std::uint64_t mask() const;  // only valid when universe <= 64

  bool operator==(const RegionSet& other) const;
  bool operator!=(const RegionSet& other) const { return !(*this == other); }
  // Orders by cardinality, then by sorted member list.
  bool operator<(const RegionSet& other) const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  void check(int r) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct RegionSetHash {
  std::size_t operator()(const RegionSet& s) const { return s.hash(); }
};

}  // namespace pinloop
