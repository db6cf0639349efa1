#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hat/residue.hpp"

namespace hat {

// Simple undirected graph on 0..size-1 with sorted neighbour lists.
struct Graph {
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int n) : adj(static_cast<std::size_t>(n)) {}

  int size() const { return static_cast<int>(adj.size()); }
  std::int64_t edge_count() const;
  bool has_edge(int u, int v) const;
  // Inserts both directions; returns false if the edge already existed.
  bool add_edge(int u, int v);
  void sort_lists();
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

struct VertexId {
  int i;
  std::int64_t j;
  bool operator==(const VertexId&) const = default;
};

// Label of a forward edge u_i^j -> u_{i+1}^{...}.  For X_e, Plain is the
// edge to u_{i+1}^j (u_0^{j+t} on the wrap) and Shift the other one.  For the
// odd family and metacirculants Plain is j - r^i and Shift is j + r^i.
enum class EdgeLabel : std::uint8_t { Plain = 0, Shift = 1 };

struct TetraGraph {
  ResidueParams params;
  Graph graph;
  // out[v][label] = head of the forward edge leaving v with that label
  std::vector<std::array<int, 2>> out;

  int m() const { return params.m; }
  std::int64_t n() const { return params.n; }
  int size() const { return graph.size(); }
  int flat(int i, std::int64_t j) const;
  int flat(const VertexId& v) const { return flat(v.i, v.j); }
  VertexId vertex(int flat_index) const;
  int layer(int v) const { return v / static_cast<int>(params.n); }
  std::int64_t pos(int v) const { return v % params.n; }
};

TetraGraph build_even(const ResidueParams& p);
TetraGraph build_odd(const ResidueParams& p);
// M(r; m, n): u_i^j ~ u_{i+1}^{j +- r^i}.  Needs m >= 3, r a unit, r^m = +-1.
// May be disconnected.
TetraGraph build_metacirculant(std::int64_t r, int m, std::int64_t n);
TetraGraph build(const ResidueParams& p);

bool is_connected(const Graph& g);

struct Component {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside the component
  std::vector<int> new_to_old;  // ascending old index
};

Component component_of(const Graph& g, int v);

std::string export_graph6(const Graph& g);
Graph parse_graph6(const std::string& line);

std::string vertex_name(const TetraGraph& g, int v);

}  // namespace hat
