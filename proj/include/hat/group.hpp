#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hat/graphs.hpp"
#include "hat/residue.hpp"

namespace hat {

// Bijection of {0..degree-1}.  Products apply left to right:
// x(ab) = (xa)b, so a.then(b) and a * b mean "a first".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation operator*(const Permutation& b) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  // a^b = b^-1 a b
  Permutation conj(const Permutation& b) const { return b.inverse() * *this * b; }
  bool is_identity() const;
  std::int64_t order() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

bool is_bijection(const std::vector<int>& image);

struct Generators {
  Permutation rho, sigma, tau;
  std::vector<Permutation> list() const { return {rho, sigma, tau}; }
};

// Even family: the three maps as defined for X_e.  Odd family and
// metacirculants: rho: j+1, sigma: u_i^j -> u_{i+1}^{rj} (wrap included),
// tau: j -> -j.
Generators build_generators(const TetraGraph& g);

struct RelationReport {
  bool rho_n = false;         // rho^n = 1
  bool tau_2 = false;         // tau^2 = 1
  bool sigma_m = false;       // sigma^m = rho^t
  bool rho_tau = false;       // rho^tau = rho^-1
  bool rho_sigma = false;     // rho^sigma = rho^r
  bool tau_sigma = false;     // tau^sigma = tau rho^-1
  bool all() const { return rho_n && tau_2 && sigma_m && rho_tau && rho_sigma && tau_sigma; }
};

RelationReport check_relations(const Generators& gens, const ResidueParams& p);
bool verify_relations(const Generators& gens, const ResidueParams& p);

struct PermGroup {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // elements[0] is the identity
  int degree = 0;

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  bool contains(const Permutation& p) const;
};

// Breadth-first closure.  Throws CapExceeded once more than `cap` elements appear.
PermGroup generate(const std::vector<Permutation>& gens, std::int64_t cap);

std::vector<Permutation> stabilizer(const PermGroup& g, int point);

// Order 2k, an element of order k, and every element outside the cyclic
// subgroup it generates is an involution.
bool is_dihedral(const PermGroup& g, std::int64_t k);

bool is_automorphism(const Graph& g, const Permutation& p);
// Edge-preserving bijection between two graphs of the same size.
bool is_isomorphism(const Graph& from, const Graph& to, const std::vector<int>& map);
std::int64_t count_edge_violations(const Graph& from, const Graph& to,
                                   const std::vector<int>& map);

// Closure of `seed` under the generators, sorted by `key`.  `act(perm, obj)`
// must return an object whose key is already canonical.
template <class T, class Act, class Key>
std::vector<T> orbit(const std::vector<Permutation>& gens, const T& seed, Act act, Key key) {
  using K = decltype(key(seed));
  std::map<K, T> seen;
  std::vector<T> frontier{seed};
  seen.emplace(key(seed), seed);
  while (!frontier.empty()) {
    T x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& p : gens) {
      T y = act(p, x);
      auto k = key(y);
      if (seen.find(k) == seen.end()) {
        seen.emplace(std::move(k), y);
        frontier.push_back(std::move(y));
      }
    }
  }
  std::vector<T> out;
  out.reserve(seen.size());
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

std::vector<int> vertex_orbit(const std::vector<Permutation>& gens, int v);

}  // namespace hat
