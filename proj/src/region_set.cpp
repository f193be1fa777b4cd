#include "pinloop/region_set.hpp"

#include <bit>
#include <sstream>

#include "pinloop/error.hpp"

namespace pinloop {

RegionSet::RegionSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

RegionSet::RegionSet(int universe, const std::vector<int>& members) : RegionSet(universe) {
  for (int r : members) insert(r);
}

RegionSet RegionSet::full(int universe) {
  RegionSet s(universe);
  for (int r = 0; r < universe; ++r) s.insert(r);
  return s;
}

RegionSet RegionSet::from_mask(int universe, std::uint64_t mask) {
  RegionSet s(universe);
  if (universe > 0) {
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask;
  }
  return s;
}

void RegionSet::check(int r) const {
  if (r < 0 || r >= n_) {
    throw Error("RegionOutOfRange", "region index " + std::to_string(r) + " outside [0," +
                                        std::to_string(n_) + ")");
  }
}

bool RegionSet::contains(int r) const {
  if (r < 0 || r >= n_) return false;
  return (words_[r >> 6] >> (r & 63)) & 1u;
}

void RegionSet::insert(int r) {
  check(r);
  words_[r >> 6] |= std::uint64_t{1} << (r & 63);
}

void RegionSet::erase(int r) {
  check(r);
  words_[r >> 6] &= ~(std::uint64_t{1} << (r & 63));
}

int RegionSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool RegionSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool RegionSet::subset_of(const RegionSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

bool RegionSet::intersects(const RegionSet& other) const {
  std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

RegionSet RegionSet::operator|(const RegionSet& other) const {
  RegionSet s(std::max(n_, other.n_));
  for (std::size_t i = 0; i < s.words_.size(); ++i) {
    std::uint64_t a = i < words_.size() ? words_[i] : 0;
    std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
    s.words_[i] = a | b;
  }
  return s;
}

RegionSet RegionSet::operator&(const RegionSet& other) const {
  RegionSet s(std::max(n_, other.n_));
  for (std::size_t i = 0; i < s.words_.size(); ++i) {
    std::uint64_t a = i < words_.size() ? words_[i] : 0;
    std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
    s.words_[i] = a & b;
  }
  return s;
}

RegionSet RegionSet::operator-(const RegionSet& other) const {
  RegionSet s = *this;
  for (std::size_t i = 0; i < s.words_.size() && i < other.words_.size(); ++i)
    s.words_[i] &= ~other.words_[i];
  return s;
}

RegionSet RegionSet::complement() const { return full(n_) - *this; }

std::vector<int> RegionSet::elements() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t RegionSet::mask() const {
  if (n_ > 64) throw Error("RegionSetTooLarge", "mask() requires at most 64 regions");
  return words_.empty() ? 0 : words_[0];
}

bool RegionSet::operator==(const RegionSet& other) const {
  return n_ == other.n_ && words_ == other.words_;
}

bool RegionSet::operator<(const RegionSet& other) const {
  int a = size(), b = other.size();
  if (a != b) return a < b;
  return elements() < other.elements();
}

std::size_t RegionSet::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string RegionSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int r : elements()) {
    if (!first) os << ',';
    os << r;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace pinloop
