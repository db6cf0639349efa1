#include "hat/orientation.hpp"

#include <algorithm>
#include <map>

#include "hat/canon.hpp"
#include "hat/errors.hpp"

namespace hat {

bool OrientedGraph::is_arc(int u, int v) const {
  const auto& o = out(u);
  return o[0] == v || o[1] == v;
}

std::pair<int, EdgeLabel> OrientedGraph::step(int u, int v) const {
  const auto& o = out(u);
  if (o[0] == v) return {1, EdgeLabel::Plain};
  if (o[1] == v) return {1, EdgeLabel::Shift};
  const auto& p = out(v);
  if (p[0] == u) return {-1, EdgeLabel::Plain};
  if (p[1] == u) return {-1, EdgeLabel::Shift};
  throw NotTwoPath(vertex_name(base, u) + " and " + vertex_name(base, v) + " are not adjacent");
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> a;
  a.reserve(static_cast<std::size_t>(2 * size()));
  for (int v = 0; v < size(); ++v) {
    a.push_back({v, out(v)[0], EdgeLabel::Plain});
    a.push_back({v, out(v)[1], EdgeLabel::Shift});
  }
  return a;
}

OrientedGraph orient(const TetraGraph& g, const std::vector<Permutation>& check_with) {
  OrientedGraph d;
  d.base = g;
  const auto V = static_cast<std::size_t>(g.size());
  d.in.assign(V, {-1, -1});
  d.inlabel.assign(V, {EdgeLabel::Plain, EdgeLabel::Plain});
  std::vector<int> fill(V, 0);
  for (std::size_t v = 0; v < V; ++v) {
    for (int b = 0; b < 2; ++b) {
      auto w = static_cast<std::size_t>(g.out[v][static_cast<std::size_t>(b)]);
      if (fill[w] == 2) throw OrientationInconsistent("in-degree above 2 at " + vertex_name(g, static_cast<int>(w)));
      d.in[w][static_cast<std::size_t>(fill[w])] = static_cast<int>(v);
      d.inlabel[w][static_cast<std::size_t>(fill[w])] = static_cast<EdgeLabel>(b);
      ++fill[w];
    }
  }
  for (std::size_t v = 0; v < V; ++v) {
    if (fill[v] != 2) throw OrientationInconsistent("in-degree below 2 at " + vertex_name(g, static_cast<int>(v)));
  }
  for (const auto& p : check_with) {
    for (const Arc& a : d.arcs()) {
      if (!d.is_arc(p(a.tail), p(a.head))) {
        throw OrientationInconsistent("a generator reverses " + vertex_name(g, a.tail) + "->" +
                                      vertex_name(g, a.head));
      }
    }
  }
  return d;
}

OrientedGraph orient(const TetraGraph& g) { return orient(g, build_generators(g).list()); }

AlternatingStructure alternating_cycles(const OrientedGraph& d) {
  const int V = d.size();
  // arc id: 2*tail + label
  std::vector<char> used(static_cast<std::size_t>(2 * V), 0);
  auto arc_id = [&](int tail, int head) {
    const auto& o = d.out(tail);
    return 2 * tail + (o[0] == head ? 0 : 1);
  };
  std::vector<int> tail_cycle(static_cast<std::size_t>(V), -1), head_cycle(tail_cycle);
  AlternatingStructure s;
  std::vector<std::vector<int>> raw;
  for (int start = 0; start < 2 * V; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    const int cid = static_cast<int>(raw.size());
    std::vector<int> cyc;
    const int t0 = start / 2;
    int tail = t0;
    int head = d.out(t0)[static_cast<std::size_t>(start % 2)];
    // forward along an out-arc, then backward along the other in-arc of its head
    while (true) {
      if (tail_cycle[static_cast<std::size_t>(tail)] != -1 ||
          head_cycle[static_cast<std::size_t>(head)] != -1) {
        throw NotAlternatingRegular("alternating walk revisits a vertex");
      }
      tail_cycle[static_cast<std::size_t>(tail)] = cid;
      head_cycle[static_cast<std::size_t>(head)] = cid;
      used[static_cast<std::size_t>(arc_id(tail, head))] = 1;
      cyc.push_back(tail);
      cyc.push_back(head);
      const auto& in = d.in[static_cast<std::size_t>(head)];
      const int next = in[0] == tail ? in[1] : in[0];
      used[static_cast<std::size_t>(arc_id(next, head))] = 1;
      if (next == t0) break;
      const auto& o = d.out(next);
      tail = next;
      head = o[0] == cyc.back() ? o[1] : o[0];
    }
    raw.push_back(std::move(cyc));
  }
  std::size_t len = raw.front().size();
  for (const auto& c : raw) {
    if (c.size() != len) throw NotAlternatingRegular("alternating cycles of different lengths");
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw NotAlternatingRegular("alternating walk is not a cycle");
    }
  }
  // intersections of adjacent cycles, keyed by unordered cycle pair
  std::map<std::pair<int, int>, std::vector<int>> inter;
  for (int v = 0; v < V; ++v) {
    int a = tail_cycle[static_cast<std::size_t>(v)], b = head_cycle[static_cast<std::size_t>(v)];
    if (a == b) throw NotAlternatingRegular("vertex is tail and head on one alternating cycle");
    inter[{std::min(a, b), std::max(a, b)}].push_back(v);
  }
  const std::size_t an = inter.begin()->second.size();
  for (auto& [k, vs] : inter) {
    if (vs.size() != an) throw NotAlternatingRegular("attachment sets of different sizes");
    s.attachment_sets.push_back(vs);
  }
  std::sort(s.attachment_sets.begin(), s.attachment_sets.end());
  for (auto& c : raw) s.cycles.push_back(canonical_cycle(c));
  std::sort(s.cycles.begin(), s.cycles.end());
  s.radius = static_cast<int>(len / 2);
  s.attachment_number = static_cast<int>(an);
  return s;
}

AttachmentClass attachment_class(const AlternatingStructure& s) {
  if (s.attachment_number == s.radius) return {AttachmentKind::Tight, s.attachment_number};
  if (s.attachment_number == 1) return {AttachmentKind::Loose, 1};
  if (s.attachment_number == 2) return {AttachmentKind::Antipodal, 2};
  return {AttachmentKind::Other, s.attachment_number};
}

std::string to_string(const AttachmentClass& c) {
  switch (c.kind) {
    case AttachmentKind::Tight:
      return "tight";
    case AttachmentKind::Loose:
      return "loose";
    case AttachmentKind::Antipodal:
      return "antipodal";
    case AttachmentKind::Other:
      return "other(" + std::to_string(c.a) + ")";
  }
  return "?";
}

}  // namespace hat
