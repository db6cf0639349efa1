#pragma once

#include <array>
#include <string>
#include <vector>

#include "hat/graphs.hpp"
#include "hat/group.hpp"

namespace hat {

struct Arc {
  int tail;
  int head;
  EdgeLabel label;
};

struct OrientedGraph {
  TetraGraph base;
  // in[v][k] = tail of the k-th arc into v, inlabel[v][k] its label
  std::vector<std::array<int, 2>> in;
  std::vector<std::array<EdgeLabel, 2>> inlabel;

  int size() const { return base.size(); }
  const std::array<int, 2>& out(int v) const { return base.out[static_cast<std::size_t>(v)]; }
  bool is_arc(int u, int v) const;
  // +1 with the label if u->v is an arc, -1 if v->u is; throws NotTwoPath otherwise
  std::pair<int, EdgeLabel> step(int u, int v) const;
  std::vector<Arc> arcs() const;
};

// Forward ring direction on every defining edge.  Each supplied generator
// must map arcs to arcs; OrientationInconsistent otherwise.
OrientedGraph orient(const TetraGraph& g, const std::vector<Permutation>& check_with);
OrientedGraph orient(const TetraGraph& g);

struct AlternatingStructure {
  std::vector<std::vector<int>> cycles;       // canonical keys, sorted
  std::vector<std::vector<int>> attachment_sets;  // sorted, ordered by first element
  int radius = 0;
  int attachment_number = 0;
};

AlternatingStructure alternating_cycles(const OrientedGraph& d);

enum class AttachmentKind { Tight, Loose, Antipodal, Other };

struct AttachmentClass {
  AttachmentKind kind;
  int a;  // the attachment number, meaningful for Other
};

AttachmentClass attachment_class(const AlternatingStructure& s);
std::string to_string(const AttachmentClass& c);

}  // namespace hat
