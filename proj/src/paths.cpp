#include "hat/paths.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <unordered_map>

#include "hat/canon.hpp"
#include "hat/errors.hpp"

namespace hat {

std::string to_string(TwoPathClass c) {
  switch (c) {
    case TwoPathClass::AnchorPos:
      return "anchor+";
    case TwoPathClass::AnchorNeg:
      return "anchor-";
    case TwoPathClass::Glide:
      return "glide";
    case TwoPathClass::Zigzag:
      return "zigzag";
  }
  return "?";
}

char symbol(TwoPathClass c) {
  switch (c) {
    case TwoPathClass::AnchorPos:
      return '+';
    case TwoPathClass::AnchorNeg:
      return '-';
    case TwoPathClass::Glide:
      return 'g';
    case TwoPathClass::Zigzag:
      return 'z';
  }
  return '?';
}

TwoPathClass classify_two_path(const OrientedGraph& d, int u, int v, int w) {
  if (u == w) throw NotTwoPath("2-path endpoints coincide");
  auto [d1, l1] = d.step(u, v);
  auto [d2, l2] = d.step(v, w);
  if (d1 == 1 && d2 == -1) return TwoPathClass::AnchorPos;  // v is the head of both arcs
  if (d1 == -1 && d2 == 1) return TwoPathClass::AnchorNeg;  // v is the tail of both arcs
  return l1 == l2 ? TwoPathClass::Glide : TwoPathClass::Zigzag;
}

TwoPathCounts count_two_paths(const OrientedGraph& d) {
  TwoPathCounts c;
  for (int v = 0; v < d.size(); ++v) {
    const auto& nb = d.base.graph.adj[static_cast<std::size_t>(v)];
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        switch (classify_two_path(d, nb[a], v, nb[b])) {
          case TwoPathClass::AnchorPos:
            ++c.anchor_pos;
            break;
          case TwoPathClass::AnchorNeg:
            ++c.anchor_neg;
            break;
          case TwoPathClass::Glide:
            ++c.glide;
            break;
          case TwoPathClass::Zigzag:
            ++c.zigzag;
            break;
        }
      }
    }
  }
  return c;
}

std::array<int, 3> representative_two_path(const OrientedGraph& d, TwoPathClass c) {
  const int v = d.base.flat(1, 1);
  const auto& in = d.in[static_cast<std::size_t>(v)];
  const auto& inl = d.inlabel[static_cast<std::size_t>(v)];
  const auto& out = d.out(v);
  const int plain_in = inl[0] == EdgeLabel::Plain ? in[0] : in[1];
  switch (c) {
    case TwoPathClass::AnchorPos:
      return {plain_in, v, inl[0] == EdgeLabel::Plain ? in[1] : in[0]};
    case TwoPathClass::AnchorNeg:
      return {out[1], v, out[0]};
    case TwoPathClass::Glide:
      return {plain_in, v, out[0]};
    case TwoPathClass::Zigzag:
      return {plain_in, v, out[1]};
  }
  throw Error("bad class");
}

WalkCode code_trace_refinement(const OrientedGraph& d, const std::vector<int>& walk, bool closed) {
  const std::size_t k = walk.size();
  WalkCode wc;
  if (closed) {
    if (k < 3) throw NotTwoPath("a cycle needs at least 3 vertices");
    for (std::size_t i = 0; i < k; ++i) {
      wc.refinement.push_back(symbol(classify_two_path(d, walk[(i + k - 1) % k], walk[i], walk[(i + 1) % k])));
    }
  } else {
    for (std::size_t i = 1; i + 1 < k; ++i) {
      wc.refinement.push_back(symbol(classify_two_path(d, walk[i - 1], walk[i], walk[i + 1])));
    }
  }
  for (char ch : wc.refinement) {
    const bool anchor = ch == '+' || ch == '-';
    wc.code.push_back(anchor ? 'a' : ch);
    wc.trace.push_back(anchor ? 'a' : 'n');
  }
  auto reduce = [&](const std::string& s) {
    if (closed) return canonical_string(s);
    std::string r(s.rbegin(), s.rend());
    return std::min(s, r);
  };
  wc.refinement = reduce(wc.refinement);
  wc.code = reduce(wc.code);
  wc.trace = reduce(wc.trace);
  return wc;
}

namespace {

void check_length(int len) {
  if (len < 3 || len > 10) throw LengthOutOfRange("cycle length must lie in 3..10");
}

// Cycles whose least vertex is `root`, appended to `out`.
void cycles_from_root(const Graph& g, int len, int root, std::vector<std::vector<int>>& out) {
  std::vector<int> path{root};
  std::vector<char> on(static_cast<std::size_t>(g.size()), 0);
  on[static_cast<std::size_t>(root)] = 1;
  // explicit stack of neighbour cursors
  std::vector<std::size_t> cursor{0};
  while (!cursor.empty()) {
    const int v = path.back();
    const auto& nb = g.adj[static_cast<std::size_t>(v)];
    if (static_cast<int>(path.size()) == len) {
      if (path[1] < path.back() && g.has_edge(v, root)) out.push_back(path);
      on[static_cast<std::size_t>(v)] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    std::size_t& c = cursor.back();
    while (c < nb.size() && (nb[c] <= root || on[static_cast<std::size_t>(nb[c])])) ++c;
    if (c == nb.size()) {
      if (path.size() > 1) on[static_cast<std::size_t>(v)] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const int w = nb[c++];
    path.push_back(w);
    on[static_cast<std::size_t>(w)] = 1;
    cursor.push_back(0);
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_cycles_serial(const Graph& g, int len) {
  check_length(len);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < g.size(); ++root) cycles_from_root(g, len, root, out);
  return out;  // roots ascend and DFS follows sorted lists, so already sorted
}

std::vector<std::vector<int>> enumerate_cycles(const Graph& g, int len) {
  check_length(len);
  const int V = g.size();
  std::vector<std::vector<std::vector<int>>> per_root(static_cast<std::size_t>(V));
#pragma omp parallel for schedule(dynamic, 16)
  for (int root = 0; root < V; ++root) {
    cycles_from_root(g, len, root, per_root[static_cast<std::size_t>(root)]);
  }
  std::vector<std::vector<int>> out;
  for (auto& part : per_root) {
    for (auto& c : part) out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

}  // namespace

std::vector<CycleOrbit> orbit_partition(const OrientedGraph& d,
                                        const std::vector<Permutation>& gens,
                                        const std::vector<std::vector<int>>& cycles_in) {
  std::vector<std::vector<int>> cycles = cycles_in;
  std::sort(cycles.begin(), cycles.end());
  std::unordered_map<std::vector<int>, std::size_t, VecHash> index;
  for (std::size_t k = 0; k < cycles.size(); ++k) index.emplace(cycles[k], k);
  std::vector<char> seen(cycles.size(), 0);
  std::vector<CycleOrbit> orbits;
  std::vector<int> img;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (seen[k]) continue;
    CycleOrbit o;
    std::vector<std::size_t> members{k};
    seen[k] = 1;
    for (std::size_t q = 0; q < members.size(); ++q) {
      const auto& c = cycles[members[q]];
      for (const auto& p : gens) {
        img.resize(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) img[i] = p(c[i]);
        auto it = index.find(canonical_cycle(img));
        if (it == index.end()) throw Error("cycle set is not closed under the group");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          members.push_back(it->second);
        }
      }
    }
    std::sort(members.begin(), members.end());
    for (auto m : members) o.cycles.push_back(cycles[m]);
    o.representative = o.cycles.front();
    WalkCode wc = code_trace_refinement(d, o.representative, true);
    o.refinement = wc.refinement;
    o.code = wc.code;
    o.trace = wc.trace;
    o.length = static_cast<std::int64_t>(o.cycles.size());
    orbits.push_back(std::move(o));
  }
  return orbits;
}

namespace {

bool contains_two_path(const std::vector<int>& c, const std::array<int, 3>& p) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (c[i] != p[1]) continue;
    const int a = c[(i + k - 1) % k], b = c[(i + 1) % k];
    if ((a == p[0] && b == p[2]) || (a == p[2] && b == p[0])) return true;
  }
  return false;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (num % den != 0) {
    throw FormulaMismatch("frequency formula gives a non-integer " + std::to_string(num) + "/" +
                          std::to_string(den));
  }
  return num / den;
}

}  // namespace

FrequencyReport frequencies(const OrientedGraph& d, const std::vector<const CycleOrbit*>& orbits,
                            FrequencyMethod via) {
  FrequencyReport f;
  if (via == FrequencyMethod::DirectCount) {
    const auto pa = representative_two_path(d, TwoPathClass::AnchorPos);
    const auto na = representative_two_path(d, TwoPathClass::AnchorNeg);
    const auto gl = representative_two_path(d, TwoPathClass::Glide);
    const auto zz = representative_two_path(d, TwoPathClass::Zigzag);
    for (const CycleOrbit* o : orbits) {
      for (const auto& c : o->cycles) {
        f.a_pos += contains_two_path(c, pa);
        f.a_neg += contains_two_path(c, na);
        f.g += contains_two_path(c, gl);
        f.z += contains_two_path(c, zz);
      }
    }
    f.a = f.a_pos;
    return f;
  }
  const std::int64_t mn = static_cast<std::int64_t>(d.base.m()) * d.base.n();
  std::int64_t sp = 0, sn = 0, sg = 0, sz = 0;
  for (const CycleOrbit* o : orbits) {
    const auto& s = o->refinement;
    sp += o->length * std::count(s.begin(), s.end(), '+');
    sn += o->length * std::count(s.begin(), s.end(), '-');
    sg += o->length * std::count(s.begin(), s.end(), 'g');
    sz += o->length * std::count(s.begin(), s.end(), 'z');
  }
  f.a = exact_div(sp + sn, 2 * mn);
  f.a_pos = exact_div(sp, mn);
  f.a_neg = exact_div(sn, mn);
  f.g = exact_div(sg, 2 * mn);
  f.z = exact_div(sz, 2 * mn);
  return f;
}

FrequencyReport checked_frequencies(const OrientedGraph& d,
                                    const std::vector<const CycleOrbit*>& orbits) {
  FrequencyReport direct = frequencies(d, orbits, FrequencyMethod::DirectCount);
  FrequencyReport formula = frequencies(d, orbits, FrequencyMethod::Lemma36);
  if (!(direct == formula)) {
    throw FormulaMismatch("direct count (" + std::to_string(direct.a) + "," +
                          std::to_string(direct.g) + "," + std::to_string(direct.z) +
                          ") != formula (" + std::to_string(formula.a) + "," +
                          std::to_string(formula.g) + "," + std::to_string(formula.z) + ")");
  }
  return direct;
}

bool anchors_alternate(const std::string& refinement) {
  std::string signs;
  for (char ch : refinement) {
    if (ch == '+' || ch == '-') signs.push_back(ch);
  }
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == signs[(i + 1) % signs.size()]) return false;
  }
  return true;
}

bool even_glides_and_zigzags(const std::string& refinement) {
  return std::count(refinement.begin(), refinement.end(), 'g') % 2 == 0 &&
         std::count(refinement.begin(), refinement.end(), 'z') % 2 == 0;
}

}  // namespace hat
