#include "hat/graphs.hpp"

#include <algorithm>
#include <deque>

#include "hat/errors.hpp"

namespace hat {

std::int64_t Graph::edge_count() const {
  std::int64_t deg = 0;
  for (const auto& a : adj) deg += static_cast<std::int64_t>(a.size());
  return deg / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::add_edge(int u, int v) {
  auto& a = adj[static_cast<std::size_t>(u)];
  if (std::find(a.begin(), a.end(), v) != a.end()) return false;
  a.push_back(v);
  adj[static_cast<std::size_t>(v)].push_back(u);
  return true;
}

void Graph::sort_lists() {
  for (auto& a : adj) std::sort(a.begin(), a.end());
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw Error("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.add_edge(u, v);
  }
  g.sort_lists();
  return g;
}

int TetraGraph::flat(int i, std::int64_t j) const {
  return static_cast<int>(mod(i, params.m) * params.n + mod(j, params.n));
}

VertexId TetraGraph::vertex(int v) const { return {layer(v), pos(v)}; }

namespace {

// Shared assembly: `head(i, j, label)` gives the forward neighbour's (layer, pos).
template <class Head>
TetraGraph assemble(const ResidueParams& p, Head head) {
  const std::int64_t total = static_cast<std::int64_t>(p.m) * p.n;
  if (total > 50'000'000) throw TooLarge("vertex count " + std::to_string(total));
  TetraGraph g;
  g.params = p;
  g.graph = Graph(static_cast<int>(total));
  g.out.assign(static_cast<std::size_t>(total), {0, 0});
  for (int i = 0; i < p.m; ++i) {
    for (std::int64_t j = 0; j < p.n; ++j) {
      const int v = g.flat(i, j);
      for (int b = 0; b < 2; ++b) {
        auto [li, pj] = head(i, j, b);
        const int w = g.flat(li, pj);
        g.out[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)] = w;
        if (w == v || !g.graph.add_edge(v, w)) {
          throw DegenerateGraph(describe(p) + ": edge " + vertex_name(g, v) + "-" +
                                vertex_name(g, w) + " is a loop or repeated");
        }
      }
    }
  }
  g.graph.sort_lists();
  for (const auto& a : g.graph.adj) {
    if (a.size() != 4) throw DegenerateGraph(describe(p) + ": vertex of degree " +
                                             std::to_string(a.size()));
  }
  return g;
}

}  // namespace

TetraGraph build_even(const ResidueParams& p) {
  if (p.family != Family::EvenRadius) throw Error("build_even needs EvenRadius params");
  return assemble(p, [&](int i, std::int64_t j, int b) -> std::pair<int, std::int64_t> {
    std::int64_t step = b ? p.pw[static_cast<std::size_t>(i)] : 0;
    if (i == p.m - 1) return {0, mod(j + step + p.t, p.n)};
    return {i + 1, mod(j + step, p.n)};
  });
}

namespace {

TetraGraph build_pm(const ResidueParams& p) {
  return assemble(p, [&](int i, std::int64_t j, int b) -> std::pair<int, std::int64_t> {
    std::int64_t s = p.pw[static_cast<std::size_t>(i)];
    return {(i + 1) % p.m, mod(b ? j + s : j - s, p.n)};
  });
}

}  // namespace

TetraGraph build_odd(const ResidueParams& p) {
  if (p.family != Family::OddRadius) throw Error("build_odd needs OddRadius params");
  return build_pm(p);
}

TetraGraph build_metacirculant(std::int64_t r, int m, std::int64_t n) {
  if (m < 3) throw BadParity("metacirculant needs m >= 3");
  if (n < 3) throw BadParity("metacirculant needs n >= 3");
  Residue rr(r, n);
  if (!is_unit(rr)) throw RelationFailed("r unit");
  Residue rm = rr.pow(static_cast<std::uint64_t>(m));
  if (!(rm == 1) && !(rm == -1)) throw RelationFailed("r^m=+-1");
  // Metacirculant4 is the family tag for this edge rule; m is kept as given.
  ResidueParams p{Family::Metacirculant4, m, n, rr.value(), 0, {}};
  p.pw.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p.pw[static_cast<std::size_t>(i)] = powmod(p.r, static_cast<std::uint64_t>(i), n);
  return build_pm(p);
}

TetraGraph build(const ResidueParams& p) {
  switch (p.family) {
    case Family::EvenRadius:
      return build_even(p);
    case Family::OddRadius:
      return build_odd(p);
    case Family::Metacirculant4:
      return build_metacirculant(p.r, p.m, p.n);
  }
  throw Error("unknown family");
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  return component_of(g, 0).graph.size() == g.size();
}

Component component_of(const Graph& g, int v) {
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  std::deque<int> queue{v};
  seen[static_cast<std::size_t>(v)] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int w : g.adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  Component c;
  c.old_to_new.assign(static_cast<std::size_t>(g.size()), -1);
  for (int x = 0; x < g.size(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) {
      c.old_to_new[static_cast<std::size_t>(x)] = static_cast<int>(c.new_to_old.size());
      c.new_to_old.push_back(x);
    }
  }
  c.graph = Graph(static_cast<int>(c.new_to_old.size()));
  for (std::size_t k = 0; k < c.new_to_old.size(); ++k) {
    for (int w : g.adj[static_cast<std::size_t>(c.new_to_old[k])]) {
      c.graph.adj[k].push_back(c.old_to_new[static_cast<std::size_t>(w)]);
    }
  }
  c.graph.sort_lists();
  return c;
}

// graph6: size header, then the upper triangle x(0,1), x(0,2), x(1,2), ...
// (column by column) packed six bits per byte, each byte offset by 63.
std::string export_graph6(const Graph& g) {
  const std::int64_t n = g.size();
  if (n > 258047) throw TooLarge("graph6 supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph parse_graph6(const std::string& line_in) {
  std::string line = line_in;
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line.erase(0, header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) throw ParseError("empty graph6 line");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw ParseError("graph6 byte out of range");
  }
  std::size_t pos = 0;
  std::int64_t n = 0;
  if (line[0] != '~') {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == '~') throw ParseError("unsupported graph6 size header");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (line[static_cast<std::size_t>(k)] - 63);
    pos = 4;
  }
  const std::int64_t bits = n * (n - 1) / 2;
  if (static_cast<std::int64_t>(line.size() - pos) != (bits + 5) / 6) {
    throw ParseError("graph6 body has wrong length");
  }
  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  g.sort_lists();
  return g;
}

std::string vertex_name(const TetraGraph& g, int v) {
  return "u_" + std::to_string(g.layer(v)) + "^" + std::to_string(g.pos(v));
}

}  // namespace hat
