#include "hat/group.hpp"

#include <boost/container_hash/hash.hpp>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "hat/errors.hpp"

namespace hat {

bool is_bijection(const std::vector<int>& image) {
  std::vector<char> hit(image.size(), 0);
  for (int x : image) {
    if (x < 0 || static_cast<std::size_t>(x) >= image.size() || hit[static_cast<std::size_t>(x)]) {
      return false;
    }
    hit[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (!is_bijection(image_)) throw Error("image is not a bijection");
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  Permutation p;
  p.image_ = std::move(im);
  return p;
}

Permutation Permutation::operator*(const Permutation& b) const {
  Permutation r;
  r.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) {
    r.image_[x] = b.image_[static_cast<std::size_t>(image_[x])];
  }
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) {
    r.image_[static_cast<std::size_t>(image_[x])] = static_cast<int>(x);
  }
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation acc = identity(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::int64_t Permutation::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(image_.size(), 0);
  std::int64_t ord = 1;
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (seen[x]) continue;
    std::int64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(image_[y])) {
      seen[y] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  return boost::hash_range(p.image().begin(), p.image().end());
}

Generators build_generators(const TetraGraph& g) {
  const ResidueParams& p = g.params;
  const int V = g.size();
  std::vector<int> rho(static_cast<std::size_t>(V)), sigma(rho.size()), tau(rho.size());
  const bool even = p.family == Family::EvenRadius;
  for (int v = 0; v < V; ++v) {
    const int i = g.layer(v);
    const std::int64_t j = g.pos(v);
    rho[static_cast<std::size_t>(v)] = g.flat(i, j + 1);
    const std::int64_t rj = mulmod(p.r, j, p.n);
    if (even) {
      sigma[static_cast<std::size_t>(v)] = i == p.m - 1 ? g.flat(0, rj + p.t) : g.flat(i + 1, rj);
      tau[static_cast<std::size_t>(v)] = g.flat(i, p.prefix_sum(i) - j);
    } else {
      sigma[static_cast<std::size_t>(v)] = g.flat(i + 1, rj);
      tau[static_cast<std::size_t>(v)] = g.flat(i, -j);
    }
  }
  Generators gens{Permutation(std::move(rho)), Permutation(std::move(sigma)),
                  Permutation(std::move(tau))};
  for (const auto& x : gens.list()) {
    if (!is_automorphism(g.graph, x)) {
      throw Error("generator is not an automorphism of " + describe(p));
    }
  }
  return gens;
}

RelationReport check_relations(const Generators& gens, const ResidueParams& p) {
  const Permutation& rho = gens.rho;
  const Permutation& sigma = gens.sigma;
  const Permutation& tau = gens.tau;
  const Permutation rho_inv = rho.inverse();
  RelationReport rep;
  rep.rho_n = rho.pow(p.n).is_identity();
  rep.tau_2 = tau.pow(2).is_identity();
  rep.sigma_m = sigma.pow(p.m) == rho.pow(p.t);
  rep.rho_tau = rho.conj(tau) == rho_inv;
  rep.rho_sigma = rho.conj(sigma) == rho.pow(p.r);
  rep.tau_sigma = tau.conj(sigma) == tau * rho_inv;
  return rep;
}

bool verify_relations(const Generators& gens, const ResidueParams& p) {
  return check_relations(gens, p).all();
}

bool PermGroup::contains(const Permutation& p) const {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

PermGroup generate(const std::vector<Permutation>& gens, std::int64_t cap) {
  if (gens.empty()) throw Error("generate needs at least one generator");
  PermGroup g;
  g.generators = gens;
  g.degree = gens.front().degree();
  std::unordered_set<Permutation, PermutationHash> seen;
  Permutation id = Permutation::identity(g.degree);
  seen.insert(id);
  g.elements.push_back(id);
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    for (const auto& s : gens) {
      Permutation y = g.elements[k] * s;
      if (seen.insert(y).second) {
        if (static_cast<std::int64_t>(g.elements.size()) >= cap) {
          throw CapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
        }
        g.elements.push_back(std::move(y));
      }
    }
  }
  return g;
}

std::vector<Permutation> stabilizer(const PermGroup& g, int point) {
  std::vector<Permutation> out;
  for (const auto& e : g.elements) {
    if (e(point) == point) out.push_back(e);
  }
  return out;
}

bool is_dihedral(const PermGroup& g, std::int64_t k) {
  if (g.order() != 2 * k) return false;
  for (const auto& c : g.elements) {
    if (c.order() != k) continue;
    std::vector<Permutation> cyc;
    Permutation x = Permutation::identity(g.degree);
    for (std::int64_t e = 0; e < k; ++e) {
      cyc.push_back(x);
      x = x * c;
    }
    std::unordered_set<Permutation, PermutationHash> in(cyc.begin(), cyc.end());
    bool ok = true;
    for (const auto& e : g.elements) {
      if (!in.count(e) && e.order() != 2) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool is_isomorphism(const Graph& from, const Graph& to, const std::vector<int>& map) {
  return count_edge_violations(from, to, map) == 0;
}

std::int64_t count_edge_violations(const Graph& from, const Graph& to,
                                   const std::vector<int>& map) {
  if (from.size() != to.size() || static_cast<int>(map.size()) != from.size() ||
      !is_bijection(map) || from.edge_count() != to.edge_count()) {
    return -1;
  }
  std::int64_t bad = 0;
  for (int u = 0; u < from.size(); ++u) {
    for (int v : from.adj[static_cast<std::size_t>(u)]) {
      if (u < v && !to.has_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)])) {
        ++bad;
      }
    }
  }
  return bad;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  return p.degree() == g.size() && is_isomorphism(g, g, p.image());
}

std::vector<int> vertex_orbit(const std::vector<Permutation>& gens, int v) {
  return orbit<int>(gens, v, [](const Permutation& p, int x) { return p(x); },
                    [](int x) { return x; });
}

}  // namespace hat
