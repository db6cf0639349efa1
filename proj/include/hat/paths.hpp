#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hat/group.hpp"
#include "hat/orientation.hpp"

namespace hat {

enum class TwoPathClass { AnchorPos, AnchorNeg, Glide, Zigzag };

std::string to_string(TwoPathClass c);
// '+', '-', 'g', 'z'
char symbol(TwoPathClass c);

TwoPathClass classify_two_path(const OrientedGraph& d, int u, int v, int w);

struct TwoPathCounts {
  std::int64_t anchor_pos = 0, anchor_neg = 0, glide = 0, zigzag = 0;
  std::int64_t total() const { return anchor_pos + anchor_neg + glide + zigzag; }
  bool operator==(const TwoPathCounts&) const = default;
};

TwoPathCounts count_two_paths(const OrientedGraph& d);

// Fixed representative of each class with internal vertex u_1^1:
// AnchorPos (in, v, in), AnchorNeg (out, v, out), Glide (plain in, v, plain
// out), Zigzag (plain in, v, shift out).
std::array<int, 3> representative_two_path(const OrientedGraph& d, TwoPathClass c);

struct WalkCode {
  std::string refinement;  // over {+,-,g,z}
  std::string code;        // over {a,g,z}
  std::string trace;       // over {a,n}
};

// Cycles: symbol i belongs to vertex i, all strings reduced to their least
// rotation/reflection.  Open walks: internal vertices only, reduced to the
// lesser of the string and its reversal.
WalkCode code_trace_refinement(const OrientedGraph& d, const std::vector<int>& walk,
                               bool closed = true);

// All simple cycles of length len, each listed once as its canonical vertex
// sequence (minimum vertex first, smaller neighbour second), sorted.
std::vector<std::vector<int>> enumerate_cycles(const Graph& g, int len);
std::vector<std::vector<int>> enumerate_cycles_serial(const Graph& g, int len);

struct TableMatch {
  int table;  // 1, 2, 6; 0 for a derived family
  int row;    // row number within the table, or family index
  std::string label;
};

struct CycleOrbit {
  std::vector<int> representative;  // least canonical cycle of the orbit
  std::vector<std::vector<int>> cycles;
  std::string refinement, code, trace;
  std::int64_t length = 0;
  std::optional<TableMatch> matched;
};

std::vector<CycleOrbit> orbit_partition(const OrientedGraph& d,
                                        const std::vector<Permutation>& gens,
                                        const std::vector<std::vector<int>>& cycles);

struct FrequencyReport {
  // a is the per-anchor frequency; a_pos and a_neg split it by sign
  std::int64_t a = 0, a_pos = 0, a_neg = 0, g = 0, z = 0;
  bool operator==(const FrequencyReport&) const = default;
};

enum class FrequencyMethod { DirectCount, Lemma36 };

// Lemma36 uses nu_x = |C| eps_x / |class x| with |Anc+| = |Anc-| = mn and
// |Anc| = |Gli| = |Zig| = 2mn; a non-integral value raises FormulaMismatch.
FrequencyReport frequencies(const OrientedGraph& d, const std::vector<const CycleOrbit*>& orbits,
                            FrequencyMethod via);
// Runs both methods; FormulaMismatch when they disagree.
FrequencyReport checked_frequencies(const OrientedGraph& d,
                                    const std::vector<const CycleOrbit*>& orbits);

// Anchor signs alternate around a cycle that has anchors.
bool anchors_alternate(const std::string& refinement);
bool even_glides_and_zigzags(const std::string& refinement);

}  // namespace hat
