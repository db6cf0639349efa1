#pragma once

// Step-word model of closed walks in X_e.  A walk from u_0^0 is a word of
// steps (dir, label): dir +1 follows an out-arc, -1 an in-arc backwards, and
// the label picks the plain or shift edge.  Moving up from layer L adds
// label * r^(L mod m), plus t when L = m-1 (mod m); moving down undoes it.
// H-orbits of cycles correspond to words up to rotation, reflection
// (reverse and negate directions) and label swap.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hat/residue.hpp"

namespace hat {

struct Step {
  std::int8_t dir;    // +1 or -1
  std::int8_t label;  // 0 plain, 1 shift
  auto operator<=>(const Step&) const = default;
};

using Word = std::vector<Step>;

// Symbol at vertex i is decided by steps i-1 and i; raw (not canonical).
std::string word_refinement(const Word& w);
std::string word_code(const Word& w);
std::string word_trace(const Word& w);

bool has_backtrack(const Word& w);
Word canonical_word(const Word& w);

// All cyclically non-backtracking words of the given length.
const std::vector<Word>& all_words(int len);

struct Instance {
  bool closed = false;
  bool simple = false;  // closed with all vertices distinct
  std::vector<std::pair<int, std::int64_t>> vertices;  // (layer, position)
};

Instance instantiate(const ResidueParams& p, const Word& w);

// sum over steps of dir * label * r^(layer mod m) as coefficients c[0..m-1]
// plus the coefficient of t; `net` is the total layer displacement.
struct WrappedPoly {
  std::vector<int> c;
  int ct = 0;
  int net = 0;
  auto operator<=>(const WrappedPoly&) const = default;
};

WrappedPoly wrapped_poly(const Word& w, int m);
// Least form under cyclic rotation of c and global negation.
WrappedPoly normalize(const WrappedPoly& p);
bool holds(const WrappedPoly& p, const ResidueParams& params);

// Polynomial in r over unreduced layers: trailing zeros removed, divided by
// the lowest power of r, sign chosen so the lowest coefficient is positive.
// Only meaningful for words with zero net displacement.
std::vector<int> unwrapped_poly(const Word& w);

struct DerivedOrbit {
  Word word;  // canonical class key
  std::string refinement, code, trace;  // canonical strings
  std::int64_t closed_words = 0;        // closed simple words from u_0^0 in the class
  std::int64_t length = 0;              // mn * closed_words / 16
};

// Orbits of simple cycles of length `len` derived from words alone.
std::vector<DerivedOrbit> derived_orbits(const ResidueParams& p, int len = 8);

struct SymbolicClass {
  Word word;
  std::string code;
  std::set<WrappedPoly> polys;  // normalized
};

// Classes of words of length len with the given canonical trace whose net
// displacement is a multiple of m.  Independent of n, r and t.
std::vector<SymbolicClass> symbolic_classes(int m, const std::string& trace, int len = 8);

}  // namespace hat
