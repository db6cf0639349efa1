#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace hat {

// Least rotation of `s` or of its reversal.  Works for vertex cycles and
// symbol strings alike.
template <class Seq>
Seq min_rotation_reflection(const Seq& s) {
  const std::size_t d = s.size();
  if (d == 0) return s;
  Seq best = s;
  Seq rev(s.rbegin(), s.rend());
  for (const Seq* base : {&s, static_cast<const Seq*>(&rev)}) {
    for (std::size_t k = 0; k < d; ++k) {
      Seq cand(d, typename Seq::value_type{});
      for (std::size_t i = 0; i < d; ++i) cand[i] = (*base)[(i + k) % d];
      if (cand < best) best = cand;
    }
  }
  return best;
}

// Vertex cycles: the rotation starting at the minimum vertex, read in the
// direction whose second vertex is smaller.  Equal to min_rotation_reflection
// when vertices are distinct, but O(d).
inline std::vector<int> canonical_cycle(const std::vector<int>& c) {
  const std::size_t d = c.size();
  if (d < 3) return c;
  const std::size_t k =
      static_cast<std::size_t>(std::min_element(c.begin(), c.end()) - c.begin());
  std::vector<int> out(d);
  const bool forward = c[(k + 1) % d] < c[(k + d - 1) % d];
  for (std::size_t i = 0; i < d; ++i) {
    out[i] = forward ? c[(k + i) % d] : c[(k + d - i) % d];
  }
  return out;
}

inline std::string canonical_string(const std::string& s) { return min_rotation_reflection(s); }

}  // namespace hat
