#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinloop/combmap.hpp"
#include "pinloop/pinning.hpp"
#include "pinloop/region_set.hpp"

namespace pinloop {

// Positions refer to the elements s_0..s_{L-1} of the single oriented strand
// (L = 2 #gamma). Passage t is the visit of vertex v(s_t) between s_t and s_{t+1}.
struct Monorbigon {
  enum class Kind { Monogon, Bigon };
  Kind kind = Kind::Monogon;
  // Arcs as (first, count): elements first, first+1, ..., first+count-1 mod L.
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> marked_points;  // vertex ids
  // Closed walk: I forward, then J forward or backward (-h walks s = h backwards).
  std::vector<int> subloop;
  bool second_reversed = false;
};

std::vector<Monorbigon> singular_monorbigons(const Multiloop& loop);
// The plane S^2 minus the infinity region is simply connected, so every
// candidate is null-homotopic there; the argument only validates the index.
std::vector<Monorbigon> singular_monorbigons(const Multiloop& loop, int infinity);

// Winding number of a closed walk around every region, zero at infinity.
std::vector<int> winding_numbers(const Multiloop& m, const std::vector<int>& walk, int infinity);

// Whitney index of the walk, corners smoothed (genus 0 only).
int turning_number(const Multiloop& m, const std::vector<int>& walk, int infinity);

struct BlankLetter {
  int ray = 0;    // bounded face of the walk
  int sign = 1;   // +1 when the walk crosses the outward ray from its right to its left
  int depth = 0;  // depth of the crossed tree edge
  bool operator==(const BlankLetter&) const = default;
};

struct BlankWord {
  std::vector<BlankLetter> letters;  // cyclic
  std::vector<int> face_winding;     // per ray
};

BlankWord blank_word(const Multiloop& m, const std::vector<int>& walk, int infinity);
// Non-crossing matching of every negative letter with a positive letter of
// the same ray lying further out on it; unmatched positive letters may sit
// anywhere.
bool groupable(const BlankWord& w);

// Turning number +1 (after reversing the walk if it is -1), then groupability.
bool bounds_immersed_disc(const Multiloop& m, const std::vector<int>& walk, int infinity);
bool bounds_immersed_disc(const Multiloop& m, const Monorbigon& b, int infinity);

// Independent check: search for a gluing of copies of the regions (as many
// as the winding number) into a disc whose boundary is the walk, disc on the
// left. Exponential; meant for validation on small inputs. Returns the
// number of non-isomorphic extensions found, stopping at `limit`.
int count_disc_extensions(const Multiloop& m, const std::vector<int>& walk, int infinity, int limit = 1);

// Regions with nonzero winding. Throws Error("NotImmersed").
RegionSet mobidisc_of(const Multiloop& m, const Monorbigon& b, int infinity);

struct MobidiscOptions {
  int jobs = 1;
};

// Proper mobidiscs over all choices of infinity, deduplicated and sorted.
std::vector<RegionSet> mobidisc_set(const Multiloop& loop, const MobidiscOptions& opt = {});

struct MobidiscFormula {
  int variables = 0;
  std::vector<RegionSet> clauses;
};

// Clauses containing another clause are removed.
MobidiscFormula prune_clauses(int variables, std::vector<RegionSet> clauses);
MobidiscFormula mobidisc_formula(const Multiloop& loop, const MobidiscOptions& opt = {});
bool satisfies(const MobidiscFormula& f, const RegionSet& s);

enum class HittingMode { Minimum, AllMinimal };
PinningReport solve_hitting(const MobidiscFormula& f, HittingMode mode, const SearchOptions& opt = {});

std::string to_dimacs(const MobidiscFormula& f);
// Throws Error("BadDimacs"); rejects negative literals.
MobidiscFormula parse_dimacs(const std::string& text);

// A monorbigon whose winding numbers agree on every region of P (so every
// pairwise linking number with P vanishes), if one exists.
std::optional<Monorbigon> linking_obstruction(const Multiloop& loop, const RegionSet& pins);

}  // namespace pinloop
