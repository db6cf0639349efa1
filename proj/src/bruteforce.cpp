#include "hat/bruteforce.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/container_hash/hash.hpp>

#include "hat/errors.hpp"

namespace hat {

namespace {

void check_size(const Graph& g) {
  if (g.size() > kBruteForceMaxVertices) {
    throw TooLarge("brute-force oracle limited to " + std::to_string(kBruteForceMaxVertices) +
                   " vertices, got " + std::to_string(g.size()));
  }
}

// Relabels colours by rank of the given keys; returns the number of colours.
template <class Key>
int relabel(const std::vector<Key>& keys, std::vector<int>& colour, std::uint64_t& trace) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Key> uniq;
  std::size_t h = trace;
  for (std::size_t a = 0; a < sorted.size();) {
    std::size_t b = a;
    while (b < sorted.size() && sorted[b] == sorted[a]) ++b;
    boost::hash_combine(h, boost::hash_value(sorted[a]));
    boost::hash_combine(h, b - a);
    uniq.push_back(std::move(sorted[a]));
    a = b;
  }
  boost::hash_combine(h, uniq.size());
  trace = h;
  for (std::size_t v = 0; v < keys.size(); ++v) {
    colour[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), keys[v]) - uniq.begin());
  }
  return static_cast<int>(uniq.size());
}

int target_cell(const RefinedPartition& p) {
  std::vector<int> count(static_cast<std::size_t>(p.cells), 0);
  for (int c : p.colour) ++count[static_cast<std::size_t>(c)];
  int best = -1;
  for (int c = 0; c < p.cells; ++c) {
    if (count[static_cast<std::size_t>(c)] > 1 &&
        (best < 0 || count[static_cast<std::size_t>(c)] < count[static_cast<std::size_t>(best)])) {
      best = c;
    }
  }
  return best;
}

std::vector<int> members(const RefinedPartition& p, int cell) {
  std::vector<int> out;
  for (std::size_t v = 0; v < p.colour.size(); ++v) {
    if (p.colour[v] == cell) out.push_back(static_cast<int>(v));
  }
  return out;
}

RefinedPartition individualize(const Graph& g, const RefinedPartition& p, int v) {
  RefinedPartition q = p;
  q.colour[static_cast<std::size_t>(v)] = q.cells;
  ++q.cells;
  boost::hash_combine(q.trace, 0x5eedu);
  refine(g, q);
  return q;
}

// Map from a leaf of graph a to a leaf of graph b: vertex with colour k -> vertex with colour k.
std::vector<int> leaf_map(const RefinedPartition& a, const RefinedPartition& b) {
  std::vector<int> by_colour(b.colour.size());
  for (std::size_t v = 0; v < b.colour.size(); ++v) by_colour[static_cast<std::size_t>(b.colour[v])] = static_cast<int>(v);
  std::vector<int> map(a.colour.size());
  for (std::size_t v = 0; v < a.colour.size(); ++v) map[v] = by_colour[static_cast<std::size_t>(a.colour[v])];
  return map;
}

// Searches the tree below `right` (in graph gb) for a leaf whose induced map
// from `left_leaf` (in graph ga) is an isomorphism.  `left_path` holds the
// traces along the left first path for pruning.
std::optional<std::vector<int>> search(const Graph& ga, const Graph& gb,
                                       const RefinedPartition& left_leaf,
                                       const std::vector<std::uint64_t>& left_traces,
                                       std::size_t depth, const RefinedPartition& right) {
  if (depth >= left_traces.size() || right.trace != left_traces[depth]) return std::nullopt;
  if (right.discrete()) {
    std::vector<int> map = leaf_map(left_leaf, right);
    if (count_edge_violations(ga, gb, map) == 0) return map;
    return std::nullopt;
  }
  const int c = target_cell(right);
  for (int x : members(right, c)) {
    auto found = search(ga, gb, left_leaf, left_traces, depth + 1, individualize(gb, right, x));
    if (found) return found;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> first_path_traces(const Graph& g, RefinedPartition p,
                                             RefinedPartition* leaf) {
  std::vector<std::uint64_t> traces{p.trace};
  while (!p.discrete()) {
    const int c = target_cell(p);
    p = individualize(g, p, members(p, c).front());
    traces.push_back(p.trace);
  }
  if (leaf) *leaf = p;
  return traces;
}

std::vector<int> orbit_of(const std::vector<Permutation>& gens, int v, int degree) {
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  std::vector<int> out{v};
  seen[static_cast<std::size_t>(v)] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& p : gens) {
      const int y = p(out[k]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Level {
  std::vector<Permutation> gens;
  BigInt order = 1;
};

// Automorphisms preserving the colouring p (a pointwise stabilizer of the
// base points fixed so far).
Level stabilizer_chain(const Graph& g, const RefinedPartition& p, AutomorphismGroup& out) {
  Level lv;
  if (p.discrete()) return lv;
  const int c = target_cell(p);
  const std::vector<int> cell = members(p, c);
  const int b = cell.front();
  out.base.push_back(b);
  const std::size_t slot = out.orbit_sizes.size();
  out.orbit_sizes.push_back(1);

  const RefinedPartition pb = individualize(g, p, b);
  Level sub = stabilizer_chain(g, pb, out);
  lv.gens = sub.gens;

  RefinedPartition left_leaf;
  std::vector<std::uint64_t> traces = first_path_traces(g, pb, &left_leaf);
  std::vector<int> orb = orbit_of(lv.gens, b, g.size());
  for (int x : cell) {
    if (std::binary_search(orb.begin(), orb.end(), x)) continue;
    auto map = search(g, g, left_leaf, traces, 0, individualize(g, p, x));
    if (!map) continue;
    Permutation perm(std::move(*map));
    lv.gens.push_back(perm);
    orb = orbit_of(lv.gens, b, g.size());
  }
  out.orbit_sizes[slot] = static_cast<std::int64_t>(orb.size());
  lv.order = sub.order * static_cast<std::int64_t>(orb.size());
  return lv;
}

}  // namespace

std::vector<std::vector<int>> RefinedPartition::cell_list() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(cells));
  for (std::size_t v = 0; v < colour.size(); ++v) out[static_cast<std::size_t>(colour[v])].push_back(static_cast<int>(v));
  return out;
}

void refine(const Graph& g, RefinedPartition& p) {
  const int V = g.size();
  std::vector<std::vector<int>> keys(static_cast<std::size_t>(V));
  for (;;) {
    for (int v = 0; v < V; ++v) {
      auto& k = keys[static_cast<std::size_t>(v)];
      k.clear();
      k.push_back(p.colour[static_cast<std::size_t>(v)]);
      for (int w : g.adj[static_cast<std::size_t>(v)]) k.push_back(p.colour[static_cast<std::size_t>(w)]);
      std::sort(k.begin() + 1, k.end());
    }
    const int before = p.cells;
    p.cells = relabel(keys, p.colour, p.trace);
    if (p.cells == before) return;
  }
}

RefinedPartition initial_partition(const Graph& g) {
  check_size(g);
  const int V = g.size();
  std::vector<std::pair<int, std::int64_t>> keys(static_cast<std::size_t>(V));
  std::vector<int> common(static_cast<std::size_t>(V), 0);
  for (int v = 0; v < V; ++v) {
    // 4-cycles through v: pairs of neighbours sharing a second common neighbour
    std::int64_t four = 0;
    std::vector<int> touched;
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      for (int x : g.adj[static_cast<std::size_t>(w)]) {
        if (x == v) continue;
        if (common[static_cast<std::size_t>(x)]++ == 0) touched.push_back(x);
      }
    }
    for (int x : touched) {
      const std::int64_t k = common[static_cast<std::size_t>(x)];
      four += k * (k - 1) / 2;
      common[static_cast<std::size_t>(x)] = 0;
    }
    keys[static_cast<std::size_t>(v)] = {static_cast<int>(g.adj[static_cast<std::size_t>(v)].size()), four};
  }
  RefinedPartition p;
  p.colour.assign(static_cast<std::size_t>(V), 0);
  p.cells = relabel(keys, p.colour, p.trace);
  refine(g, p);
  return p;
}

AutomorphismGroup automorphism_group(const Graph& g) {
  check_size(g);
  AutomorphismGroup out;
  if (g.size() == 0) return out;
  Level top = stabilizer_chain(g, initial_partition(g), out);
  out.generators = std::move(top.gens);
  out.order = top.order;
  for (const auto& p : out.generators) {
    if (!is_automorphism(g, p)) throw Error("oracle produced a non-automorphism");
  }
  const BigInt cap = BigInt(10) * g.size() * g.size();
  if (out.order <= cap) {
    std::vector<Permutation> gens = out.generators;
    if (gens.empty()) gens.push_back(Permutation::identity(g.size()));
    out.enumerated = generate(gens, static_cast<std::int64_t>(cap));
    if (BigInt(out.enumerated->order()) != out.order) {
      throw Error("enumerated group order disagrees with the stabilizer chain");
    }
  }
  return out;
}

std::vector<int> aut_vertex_orbit(const AutomorphismGroup& a, int v) {
  const int degree = a.generators.empty() ? v + 1 : a.generators.front().degree();
  return orbit_of(a.generators, v, degree);
}

BigInt vertex_stabilizer_order(const AutomorphismGroup& a, int v) {
  const auto orb = aut_vertex_orbit(a, v);
  return a.order / static_cast<std::int64_t>(orb.size());
}

bool is_vertex_transitive(const Graph& g, const AutomorphismGroup& a) {
  if (g.size() <= 1) return true;
  return static_cast<int>(orbit_of(a.generators, 0, g.size()).size()) == g.size();
}

namespace {

std::int64_t arc_orbit_size(const Graph& g, const AutomorphismGroup& a, bool undirected) {
  if (g.size() == 0 || g.adj[0].empty()) return 0;
  auto key = [&](int u, int v) -> std::pair<int, int> {
    if (undirected && u > v) std::swap(u, v);
    return {u, v};
  };
  std::set<std::pair<int, int>> seen{key(0, g.adj[0].front())};
  std::vector<std::pair<int, int>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    auto [u, v] = frontier.back();
    frontier.pop_back();
    for (const auto& p : a.generators) {
      auto k = key(p(u), p(v));
      if (seen.insert(k).second) frontier.push_back(k);
    }
  }
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace

bool is_arc_transitive(const Graph& g, const AutomorphismGroup& a) {
  return is_vertex_transitive(g, a) && arc_orbit_size(g, a, false) == 2 * g.edge_count();
}

bool is_edge_transitive(const Graph& g, const AutomorphismGroup& a) {
  return arc_orbit_size(g, a, true) == g.edge_count();
}

bool is_arc_transitive(const Graph& g) { return is_arc_transitive(g, automorphism_group(g)); }

std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2) {
  check_size(g1);
  check_size(g2);
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (g1.size() == 0) return std::vector<int>{};
  RefinedPartition leaf;
  std::vector<std::uint64_t> traces = first_path_traces(g1, initial_partition(g1), &leaf);
  auto map = search(g1, g2, leaf, traces, 0, initial_partition(g2));
  if (map && count_edge_violations(g1, g2, *map) != 0) throw Error("isomorphism check failed");
  return map;
}

}  // namespace hat
