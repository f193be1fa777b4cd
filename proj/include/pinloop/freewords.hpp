#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pinloop {

struct Letter {
  int gen = 0;   // generator id (a region index in presentations)
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  int key() const { return 2 * gen + (sign < 0 ? 1 : 0); }
  bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
  bool operator<(const Letter& o) const { return key() < o.key(); }
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word rotate(const Word& w, std::size_t i);
Word power(const Word& w, int n);

// Small-rank text form: generator g is letter 'a'+g, its inverse is upper case.
Word parse_word(const std::string& s);
std::string format_word(const Word& w);

Word free_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

struct CyclicReduction {
  Word cyclic;      // canonical rotation (lexicographically least by Letter::key)
  Word conjugator;  // input == conjugator * cyclic * conjugator^-1 in the free group
};

CyclicReduction cyclic_reduce(const Word& w);

struct PrimitiveRoot {
  Word root;
  int exponent = 1;
};

// Throws Error("EmptyWord") on the trivial word.
PrimitiveRoot primitive_root(const Word& cyclic);

// Circular arrangement of the symmetric generators.
class CyclicOrder {
 public:
  CyclicOrder() = default;
  explicit CyclicOrder(const std::vector<Letter>& sequence);

  const std::vector<Letter>& sequence() const { return seq_; }
  bool contains(const Letter& x) const;
  int rank(const Letter& x) const;
  // +1 if a, b, c appear in this cyclic order, -1 if reversed, 0 if two coincide.
  int orientation(const Letter& a, const Letter& b, const Letter& c) const;
  // Keeps only the letters whose generator is listed.
  CyclicOrder restrict_to(const std::vector<int>& gens) const;
  std::string to_string() const;

 private:
  std::vector<Letter> seq_;
  std::vector<int> rank_;  // by Letter::key, -1 when absent
};

// Eventually periodic reduced ray prefix * period^infinity.
struct Ray {
  Word prefix;
  Word period;

  Letter at(std::size_t i) const;
};

Ray positive_ray(const Word& cyclic);  // w^infinity
Ray negative_ray(const Word& cyclic);  // (w^-1)^infinity

// Longest common prefix; nullopt when the rays coincide.
std::optional<std::size_t> common_prefix(const Ray& x, const Ray& y);

int cord(const Ray& x, const Ray& y, const Ray& z, const CyclicOrder& order);

// Inputs must be nontrivial and cyclically reduced.
int cross(const Word& alpha, const Word& beta, const CyclicOrder& order);
// Inputs must be primitive and cyclically reduced; nullopt stands for infinity.
std::optional<std::int64_t> val(const Word& alpha, const Word& beta);

// Geometric intersection number of two free homotopy classes.
// Throws Error("TrivialWord") when either class is trivial.
std::int64_t intersection_number(const Word& alpha, const Word& beta, const CyclicOrder& order);
// Self-intersection number; 0 for the trivial class.
std::int64_t self_intersection_word(const Word& alpha, const CyclicOrder& order);

}  // namespace pinloop
