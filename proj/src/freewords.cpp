#include "pinloop/freewords.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cctype>

#include "pinloop/error.hpp"

namespace pinloop {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word rotate(const Word& w, std::size_t i) {
  if (w.empty()) return w;
  i %= w.size();
  Word out(w.begin() + static_cast<long>(i), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(i));
  return out;
}

Word power(const Word& w, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word parse_word(const std::string& s) {
  Word w;
  for (char c : s) {
    if (std::islower(static_cast<unsigned char>(c)))
      w.push_back({c - 'a', 1});
    else if (std::isupper(static_cast<unsigned char>(c)))
      w.push_back({c - 'A', -1});
    else if (!std::isspace(static_cast<unsigned char>(c)) && c != '.' && c != '*')
      throw Error("BadWord", std::string("unexpected character '") + c + "' in word");
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  bool small = std::all_of(w.begin(), w.end(), [](const Letter& x) { return x.gen < 26; });
  for (const auto& x : w) {
    if (small) {
      s += static_cast<char>((x.sign > 0 ? 'a' : 'A') + x.gen);
    } else {
      if (!s.empty()) s += ' ';
      s += (x.sign > 0 ? "" : "-") + std::to_string(x.gen);
    }
  }
  return s;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& x : w) {
    if (!out.empty() && out.back() == x.inverse())
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

bool is_cyclically_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1].inverse()) return false;
  if (w.size() >= 2 && w.front() == w.back().inverse()) return false;
  return true;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.conjugator.assign(r.begin(), r.begin() + static_cast<long>(lo));
  Word core(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
  if (core.empty()) {
    out.conjugator.clear();
    return out;
  }
  // Least rotation by key; core = x*y, rotated = y*x = x^-1 core x.
  std::size_t n = core.size(), best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      int a = core[(i + k) % n].key(), b = core[(best + k) % n].key();
      if (a != b) {
        if (a < b) best = i;
        break;
      }
    }
  }
  out.cyclic = rotate(core, best);
  out.conjugator.insert(out.conjugator.end(), core.begin(), core.begin() + static_cast<long>(best));
  out.conjugator = free_reduce(out.conjugator);
  return out;
}

PrimitiveRoot primitive_root(const Word& c) {
  if (c.empty()) throw Error("EmptyWord", "primitive root of the trivial word");
  std::size_t n = c.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && c[i] != c[k]) k = fail[k];
    if (c[i] == c[k]) ++k;
    fail[i + 1] = k;
  }
  std::size_t p = n - fail[n];
  if (n % p != 0) p = n;
  return {Word(c.begin(), c.begin() + static_cast<long>(p)), static_cast<int>(n / p)};
}

CyclicOrder::CyclicOrder(const std::vector<Letter>& sequence) : seq_(sequence) {
  int max_key = -1;
  for (const auto& x : seq_) max_key = std::max(max_key, x.key());
  rank_.assign(static_cast<std::size_t>(max_key + 1), -1);
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    int k = seq_[i].key();
    if (rank_[k] != -1) throw Error("BadCyclicOrder", "letter repeated in cyclic order");
    rank_[k] = static_cast<int>(i);
  }
  for (const auto& x : seq_)
    if (!contains(x.inverse())) throw Error("BadCyclicOrder", "cyclic order misses an inverse letter");
}

bool CyclicOrder::contains(const Letter& x) const {
  int k = x.key();
  return k >= 0 && k < static_cast<int>(rank_.size()) && rank_[k] != -1;
}

int CyclicOrder::rank(const Letter& x) const {
  if (!contains(x)) throw Error("BadLetter", "letter " + format_word({x}) + " not in cyclic order");
  return rank_[x.key()];
}

int CyclicOrder::orientation(const Letter& a, const Letter& b, const Letter& c) const {
  int x = rank(a), y = rank(b), z = rank(c);
  if (x == y || y == z || x == z) return 0;
  if ((x < y && y < z) || (y < z && z < x) || (z < x && x < y)) return 1;
  return -1;
}

CyclicOrder CyclicOrder::restrict_to(const std::vector<int>& gens) const {
  std::vector<Letter> kept;
  for (const auto& x : seq_)
    if (std::find(gens.begin(), gens.end(), x.gen) != gens.end()) kept.push_back(x);
  return CyclicOrder(kept);
}

std::string CyclicOrder::to_string() const { return format_word(seq_); }

Letter Ray::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

Ray positive_ray(const Word& cyclic) { return {{}, cyclic}; }
Ray negative_ray(const Word& cyclic) { return {{}, inverse(cyclic)}; }

std::optional<std::size_t> common_prefix(const Ray& x, const Ray& y) {
  // Two eventually periodic sequences agreeing this long agree forever.
  std::size_t bound = std::max(x.prefix.size(), y.prefix.size()) + x.period.size() + y.period.size();
  for (std::size_t i = 0; i < bound; ++i)
    if (x.at(i) != y.at(i)) return i;
  return std::nullopt;
}

int cord(const Ray& x, const Ray& y, const Ray& z, const CyclicOrder& order) {
  auto lxy = common_prefix(x, y), lxz = common_prefix(x, z), lyz = common_prefix(y, z);
  if (!lxy || !lxz || !lyz) return 0;
  std::size_t a = *lxy, b = *lxz, c = *lyz;
  if (a > b) {  // x, y branch off together at depth a; z lies behind
    Letter back = x.at(a - 1).inverse();
    return order.orientation(x.at(a), y.at(a), back);
  }
  if (b > a) {  // x, z together
    Letter back = x.at(b - 1).inverse();
    return order.orientation(x.at(b), back, z.at(b));
  }
  if (c > a) {  // y, z together
    Letter back = y.at(c - 1).inverse();
    return order.orientation(back, y.at(c), z.at(c));
  }
  return order.orientation(x.at(a), y.at(a), z.at(a));
}

int cross(const Word& alpha, const Word& beta, const CyclicOrder& order) {
  if (alpha.empty() || beta.empty()) throw Error("TrivialWord", "cross of a trivial word");
  Ray ap = positive_ray(alpha), am = negative_ray(alpha);
  Ray bp = positive_ray(beta), bm = negative_ray(beta);
  int twice = cord(ap, bp, am, order) - cord(ap, bm, am, order);
  return twice / 2;
}

std::optional<std::int64_t> val(const Word& alpha, const Word& beta) {
  if (alpha.empty() || beta.empty()) throw Error("TrivialWord", "val of a trivial word");
  if (primitive_root(alpha).exponent != 1 || primitive_root(beta).exponent != 1)
    throw Error("NotPrimitive", "val is defined for primitive words only");
  Ray ap = positive_ray(alpha), am = negative_ray(alpha);
  Ray bp = positive_ray(beta), bm = negative_ray(beta);
  // Contact along the common segment of the two axes, traversed either way;
  // at most one of the two pairings is nonzero.
  auto pp = common_prefix(ap, bp), mm = common_prefix(am, bm);
  auto pm = common_prefix(ap, bm), mp = common_prefix(am, bp);
  if (!pp || !mm || !pm || !mp) return std::nullopt;
  return static_cast<std::int64_t>(1 + *pp + *mm + *pm + *mp);
}

namespace {

std::int64_t primitive_pair_sum(const Word& a, const Word& b, const CyclicOrder& order) {
  boost::rational<std::int64_t> total(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Word ai = rotate(a, i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      Word bj = rotate(b, j);
      int c = cross(ai, bj, order);
      if (c == 0) continue;
      auto v = val(ai, bj);
      if (!v) continue;
      total += boost::rational<std::int64_t>(1, *v);
    }
  }
  if (total.denominator() != 1)
    throw Error("NonIntegralIntersection", "cross/val sum is not an integer");
  return total.numerator();
}

}  // namespace

std::int64_t intersection_number(const Word& alpha, const Word& beta, const CyclicOrder& order) {
  Word a = cyclic_reduce(alpha).cyclic, b = cyclic_reduce(beta).cyclic;
  if (a.empty() || b.empty()) throw Error("TrivialWord", "intersection with a trivial class");
  auto ra = primitive_root(a), rb = primitive_root(b);
  return static_cast<std::int64_t>(ra.exponent) * rb.exponent *
         primitive_pair_sum(ra.root, rb.root, order);
}

std::int64_t self_intersection_word(const Word& alpha, const CyclicOrder& order) {
  Word a = cyclic_reduce(alpha).cyclic;
  if (a.empty()) return 0;
  auto r = primitive_root(a);
  std::int64_t ti = primitive_pair_sum(r.root, r.root, order);
  if (ti % 2 != 0) throw Error("NonIntegralIntersection", "odd self-pairing sum");
  std::int64_t n = r.exponent;
  return n * n * (ti / 2) + (n - 1);
}

}  // namespace pinloop
