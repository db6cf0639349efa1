#pragma once

// Automorphism groups and isomorphisms by individualization and equitable
// refinement.  Only orientation-free data enters the refinement, so results
// are independent of the H-action used elsewhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "hat/graphs.hpp"
#include "hat/group.hpp"

namespace hat {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kBruteForceMaxVertices = 4096;

// Vertex colouring; cells are the colour classes, ordered by colour.
struct RefinedPartition {
  std::vector<int> colour;   // per vertex, 0..cells-1
  int cells = 0;
  std::uint64_t trace = 0;   // isomorphism-invariant hash of the refinement history

  bool discrete() const { return cells == static_cast<int>(colour.size()); }
  std::vector<std::vector<int>> cell_list() const;
};

// Degree and the number of 4-cycles through each vertex, then refined.
RefinedPartition initial_partition(const Graph& g);
// Refines to the coarsest equitable partition below p.
void refine(const Graph& g, RefinedPartition& p);

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  BigInt order = 1;
  std::vector<int> base;
  std::vector<std::int64_t> orbit_sizes;  // basic orbit length at each base point
  // All elements, filled only when order <= 10 |V|^2.
  std::optional<PermGroup> enumerated;
};

AutomorphismGroup automorphism_group(const Graph& g);
inline AutomorphismGroup automorphism_group(const TetraGraph& g) {
  return automorphism_group(g.graph);
}

std::vector<int> aut_vertex_orbit(const AutomorphismGroup& a, int v);
BigInt vertex_stabilizer_order(const AutomorphismGroup& a, int v);

bool is_vertex_transitive(const Graph& g, const AutomorphismGroup& a);
// The orbit of one arc under Aut is the whole arc set.
bool is_arc_transitive(const Graph& g, const AutomorphismGroup& a);
bool is_arc_transitive(const Graph& g);
inline bool is_arc_transitive(const TetraGraph& g) { return is_arc_transitive(g.graph); }
// Every edge lies in one orbit of Aut acting on edges.
bool is_edge_transitive(const Graph& g, const AutomorphismGroup& a);

// A verified edge-preserving bijection g1 -> g2, or nullopt when none exists.
std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace hat
