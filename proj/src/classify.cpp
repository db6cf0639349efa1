#include "hat/classify.hpp"

#include <algorithm>
#include <numeric>

#include "hat/errors.hpp"

namespace hat {

std::string to_string(Verdict v) {
  return v == Verdict::HalfArcTransitive ? "HalfArcTransitive" : "ArcTransitive";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::RSquaredPlusMinusOne: return "RSquaredPlusMinusOne";
    case Reason::ExceptionalM6: return "ExceptionalM6";
    case Reason::ExceptionalOddM6: return "ExceptionalOddM6";
    case Reason::OddRSquared: return "OddRSquared";
    case Reason::OddSmallCase: return "OddSmallCase";
    case Reason::Generic: return "Generic";
  }
  return "?";
}

namespace {

std::int64_t inv(std::int64_t r, std::int64_t n) { return inverse(Residue(r, n)).value(); }

bool r_squared_pm1(const ResidueParams& p) {
  const std::int64_t r2 = mulmod(p.r, p.r, p.n);
  return r2 == 1 % p.n || r2 == p.n - 1;
}

// 2 - x - x^2 mod n
std::int64_t quad(std::int64_t x, std::int64_t n) {
  return mod(2 - x - mulmod(x, x, n), n);
}

// Index (0..3) into {r, -r, r^-1, -r^-1} of the unique root of 2 - x - x^2,
// or -1 when there are zero or several.
int unique_root(std::int64_t r, std::int64_t n) {
  const std::int64_t ri = inv(r, n);
  const std::array<std::int64_t, 4> cand{r, mod(-r, n), ri, mod(-ri, n)};
  int found = -1, count = 0;
  for (int k = 0; k < 4; ++k) {
    if (quad(cand[static_cast<std::size_t>(k)], n) == 0) {
      found = k;
      ++count;
    }
  }
  return count == 1 ? found : -1;
}

std::int64_t candidate(std::int64_t r, std::int64_t n, int k) {
  const std::int64_t x = k >= 2 ? inv(r, n) : r;
  return k % 2 == 1 ? mod(-x, n) : x;
}

bool condition_even_ii(const ResidueParams& p) {
  if (p.m != 6 || p.n % 14 != 0) return false;
  const std::int64_t n1 = p.n / 14;
  if (std::gcd(n1, std::int64_t{7}) != 1) return false;
  const int k = unique_root(p.r, p.n);
  if (k < 0) return false;
  const std::int64_t rp = candidate(p.r, p.n, k);
  const std::int64_t tp = (k == 0 || k == 2) ? p.t : mod(p.t + p.odd_power_sum(), p.n);
  return rp % 7 == 5 && mulmod(7, rp - 1, p.n) == 0 && tp % 7 == 0 &&
         mod(2 + rp + tp, p.n) == 0;
}

bool reverses_arc(const Graph& g, const Permutation& w, int a, int b) {
  return g.has_edge(a, b) && w(a) == b && w(b) == a;
}

Permutation compose_maps(const std::vector<int>& a, const Permutation& w) {
  // x -> a(x) -> w -> a^-1
  std::vector<int> ainv(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) ainv[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  std::vector<int> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    out[x] = ainv[static_cast<std::size_t>(w(a[x]))];
  }
  return Permutation(std::move(out));
}

// Exceptional involution: entry [i][b] = (L, c, k) sends u_i^j to u_L^{j + c + k r} when j = b (mod 7).
struct T3 {
  int layer, c, k;
};
constexpr T3 kTable3[6][7] = {
    {{0, 0, 0}, {2, 0, 1}, {2, -1, 2}, {4, -2, 4}, {4, 3, -1}, {2, 2, -1}, {2, 1, 0}},
    {{1, 0, 0}, {1, 0, 0}, {1, -1, 1}, {3, 0, 1}, {5, 3, -1}, {3, 2, -1}, {1, 1, -1}},
    {{0, -1, 0}, {2, 0, 0}, {0, -2, 1}, {4, 0, 1}, {0, 1, -2}, {2, 0, 0}, {0, 0, -1}},
    {{5, -3, 4}, {1, 0, -1}, {1, -2, 1}, {5, 0, 1}, {5, -1, 2}, {3, 0, 0}, {5, -2, 3}},
    {{0, -5, 3}, {2, 0, -1}, {0, -3, 1}, {4, 1, -1}, {4, 0, 0}, {4, 0, 0}, {4, -1, 1}},
    {{5, 0, 0}, {3, 0, -1}, {1, -3, 1}, {3, 3, -4}, {5, 0, 0}, {3, 2, -3}, {3, 1, -2}},
};

}  // namespace

std::array<ResidueParams, 4> iso_variants(const ResidueParams& p) {
  if (p.family != Family::EvenRadius) throw PreconditionFailed("iso_variants needs EvenRadius");
  const std::int64_t ri = inv(p.r, p.n);
  const std::int64_t ts = mod(p.t + p.odd_power_sum(), p.n);
  return {even_params(p.m, p.n, p.r, p.t), even_params(p.m, p.n, mod(-p.r, p.n), ts),
          even_params(p.m, p.n, ri, p.t), even_params(p.m, p.n, mod(-ri, p.n), ts)};
}

ResidueParams canonical_params(const ResidueParams& p) {
  auto vs = iso_variants(p);
  return *std::min_element(vs.begin(), vs.end(), [](const auto& a, const auto& b) {
    return std::pair(a.r, a.t) < std::pair(b.r, b.t);
  });
}

ResidueParams canonical_params_any(const ResidueParams& p) {
  if (p.family == Family::EvenRadius) return canonical_params(p);
  std::int64_t best = std::min(p.r, mod(-p.r, p.n));
  if (p.family == Family::OddRadius) {
    const std::int64_t ri = inv(p.r, p.n);
    best = std::min({best, ri, mod(-ri, p.n)});
  }
  return validate(p.family, p.m, p.n, best, 0);
}

Permutation build_prop31_map(const ResidueParams& p) {
  if (p.family != Family::EvenRadius) throw PreconditionFailed("build_prop31_map needs EvenRadius");
  const std::int64_t r2 = mulmod(p.r, p.r, p.n);
  const bool plus = r2 == 1 % p.n;
  if (!plus && r2 != p.n - 1) throw PreconditionFailed("r^2 != +-1 in " + describe(p));
  TetraGraph g = build_even(p);
  std::vector<int> im(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    const int i = g.layer(v);
    const std::int64_t j = g.pos(v);
    const std::int64_t mrj = mod(-mulmod(p.r, j, p.n), p.n);
    int target;
    if (i == 0) {
      target = g.flat(0, mrj);
    } else if (plus || i % 4 == 0 || i % 4 == 3) {
      target = g.flat(p.m - i, mrj - p.t);
    } else {
      target = g.flat(p.m - i, mrj + p.r - p.t);
    }
    im[static_cast<std::size_t>(v)] = target;
  }
  Permutation phi(std::move(im));
  if (!is_automorphism(g.graph, phi)) {
    throw Error("prop 3.1 map is not an automorphism of " + describe(p));
  }
  return phi;
}

Permutation prop31_witness(const ResidueParams& p) {
  Permutation phi = build_prop31_map(p);
  TetraGraph g = build_even(p);
  Generators gens = build_generators(g);
  const bool plus = mulmod(p.r, p.r, p.n) == 1 % p.n;
  Permutation w = plus ? phi * gens.sigma : phi * gens.tau * gens.sigma;
  const int a = g.flat(0, 0), b = g.flat(1, 0);
  if (!is_automorphism(g.graph, w) || !reverses_arc(g.graph, w, a, b)) {
    throw Error("prop 3.1 witness does not swap u_0^0 and u_1^0 in " + describe(p));
  }
  return w;
}

CrossMap build_prop38_map(const ResidueParams& p, VariantMap which) {
  if (p.family != Family::EvenRadius) throw PreconditionFailed("build_prop38_map needs EvenRadius");
  CrossMap cm;
  cm.source = p;
  TetraGraph x = build_even(p);
  const int V = x.size();
  cm.map.resize(static_cast<std::size_t>(V));
  if (which == VariantMap::InvertR) {
    cm.target = even_params(p.m, p.n, inv(p.r, p.n), p.t);
    TetraGraph z = build_even(cm.target);
    for (int v = 0; v < V; ++v) {
      const int i = x.layer(v);
      const std::int64_t mrj = mod(-mulmod(p.r, x.pos(v), p.n), p.n);
      cm.map[static_cast<std::size_t>(v)] = i == 0 ? z.flat(0, mrj) : z.flat(p.m - i, mrj - p.t);
    }
    if (!is_isomorphism(x.graph, z.graph, cm.map)) {
      throw Error("InvertR map is not an isomorphism for " + describe(p));
    }
  } else {
    cm.target = even_params(p.m, p.n, mod(-p.r, p.n), mod(p.t + p.odd_power_sum(), p.n));
    TetraGraph y = build_even(cm.target);
    // shift of layer i: sum of r^k over odd k < i
    std::vector<std::int64_t> shift(static_cast<std::size_t>(p.m), 0);
    for (int i = 1; i < p.m; ++i) {
      shift[static_cast<std::size_t>(i)] =
          mod(shift[static_cast<std::size_t>(i - 1)] + ((i - 1) % 2 == 1 ? p.rpow(i - 1) : 0), p.n);
    }
    for (int v = 0; v < V; ++v) {
      const int i = x.layer(v);
      cm.map[static_cast<std::size_t>(v)] = y.flat(i, x.pos(v) - shift[static_cast<std::size_t>(i)]);
    }
    if (!is_isomorphism(x.graph, y.graph, cm.map)) {
      throw Error("NegateR map is not an isomorphism for " + describe(p));
    }
  }
  return cm;
}

bool exceptional_normal_form(const ResidueParams& p) {
  if (p.family != Family::EvenRadius || p.m != 6 || p.n % 14 != 0) return false;
  if (std::gcd(p.n / 14, std::int64_t{7}) != 1) return false;
  return quad(p.r, p.n) == 0 && mulmod(7, p.r - 1, p.n) == 0 && p.r % 7 == 5 &&
         p.t % 7 == 0 && mod(2 + p.r + p.t, p.n) == 0;
}

Permutation build_exceptional_map(const ResidueParams& p) {
  if (!exceptional_normal_form(p)) {
    throw PreconditionFailed("exceptional normal form fails for " + describe(p));
  }
  TetraGraph g = build_even(p);
  std::vector<int> im(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    const int i = g.layer(v);
    const std::int64_t j = g.pos(v);
    const T3& e = kTable3[i][j % 7];
    im[static_cast<std::size_t>(v)] = g.flat(e.layer, j + e.c + e.k * p.r);
  }
  Permutation phi(std::move(im));
  if (!(phi * phi).is_identity()) throw Error("exceptional map is not an involution");
  if (!is_automorphism(g.graph, phi)) throw Error("exceptional map is not an automorphism");
  return phi;
}

ExceptionalWitness exceptional_witness(const ResidueParams& p) {
  if (!condition_even_ii(p)) throw PreconditionFailed("condition (ii) fails for " + describe(p));
  const int k = unique_root(p.r, p.n);
  std::vector<VariantMap> path;
  if (k == 1 || k == 3) path.push_back(VariantMap::NegateR);
  if (k == 2 || k == 3) path.push_back(VariantMap::InvertR);

  const int V = static_cast<int>(p.m * p.n);
  std::vector<int> alpha(static_cast<std::size_t>(V));
  std::iota(alpha.begin(), alpha.end(), 0);
  ResidueParams cur = p;
  for (VariantMap which : path) {
    CrossMap cm = build_prop38_map(cur, which);
    for (int& x : alpha) x = cm.map[static_cast<std::size_t>(x)];
    cur = cm.target;
  }

  TetraGraph y = build_even(cur);
  Permutation phi = build_exceptional_map(cur);
  Generators gens = build_generators(y);
  PermGroup h = generate(gens.list(), 4 * static_cast<std::int64_t>(V));
  const int u10 = y.flat(1, 0), u20 = y.flat(2, 0);
  std::vector<Permutation> stab = stabilizer(h, u10);
  if (stab.size() != 2) {
    throw Error("stabilizer of u_1^0 has order " + std::to_string(stab.size()) + " in " +
                describe(cur));
  }
  Permutation psi = stab[0].is_identity() ? stab[1] : stab[0];
  Permutation swap = phi * psi * gens.sigma;
  if (!is_automorphism(y.graph, swap) || !reverses_arc(y.graph, swap, u10, u20)) {
    throw Error("phi psi sigma does not swap u_1^0 and u_2^0 in " + describe(cur));
  }

  TetraGraph x = build_even(p);
  Permutation back = compose_maps(alpha, swap);
  if (!is_automorphism(x.graph, back)) throw Error("transported witness is not an automorphism");
  return {cur, path, phi, psi, swap, back};
}

Classification classify_even(const ResidueParams& p, bool build_witness) {
  if (p.family != Family::EvenRadius) throw PreconditionFailed("classify_even needs EvenRadius");
  Classification c;
  if (r_squared_pm1(p)) {
    c.verdict = Verdict::ArcTransitive;
    c.reason = Reason::RSquaredPlusMinusOne;
    if (build_witness) {
      c.witness = prop31_witness(p);
      c.reversed_arc = std::pair(0, static_cast<int>(p.n));  // u_0^0, u_1^0
    }
    return c;
  }
  if (condition_even_ii(p)) {
    c.verdict = Verdict::ArcTransitive;
    c.reason = Reason::ExceptionalM6;
    if (build_witness) {
      ExceptionalWitness ew = exceptional_witness(p);
      // the swapped pair u_1^0, u_2^0 of the normal form, pulled back
      const Permutation& w = ew.on_original;
      TetraGraph x = build_even(p);
      for (int a = 0; a < x.size() && !c.reversed_arc; ++a) {
        const int b = w(a);
        if (b != a && w(b) == a && x.graph.has_edge(a, b)) c.reversed_arc = std::pair(a, b);
      }
      if (!c.reversed_arc) throw Error("exceptional witness reverses no arc");
      c.witness = w;
    }
    return c;
  }
  return c;
}

Classification classify_odd(const ResidueParams& p) {
  if (p.family != Family::OddRadius) throw PreconditionFailed("classify_odd needs OddRadius");
  Classification c;
  if (r_squared_pm1(p)) {
    c.verdict = Verdict::ArcTransitive;
    c.reason = Reason::OddRSquared;
    return c;
  }
  // (3,7;2) up to the identifications r ~ -r ~ r^-1
  if (p.m == 3 && p.n == 7) {
    const std::int64_t ri = inv(p.r, p.n);
    for (std::int64_t x : {p.r, mod(-p.r, p.n), ri, mod(-ri, p.n)}) {
      if (x == 2) {
        c.verdict = Verdict::ArcTransitive;
        c.reason = Reason::OddSmallCase;
        return c;
      }
    }
  }
  if (p.m == 6 && p.n % 7 == 0) {
    const std::int64_t n1 = p.n / 7;
    if (n1 % 2 == 1 && n1 % 7 != 0 && powmod(p.r, 6, p.n) == 1 % p.n) {
      const int k = unique_root(p.r, p.n);
      if (k >= 0) {
        const std::int64_t rp = candidate(p.r, p.n, k);
        if (mulmod(7, rp - 1, p.n) == 0 && rp % 7 == 5) {
          c.verdict = Verdict::ArcTransitive;
          c.reason = Reason::ExceptionalOddM6;
        }
      }
    }
  }
  return c;
}

Classification classify(const ResidueParams& p, bool build_witness) {
  switch (p.family) {
    case Family::EvenRadius: return classify_even(p, build_witness);
    case Family::OddRadius: return classify_odd(p);
    case Family::Metacirculant4:
      if (p.n % 2 == 1) {
        // for odd n, M(r;4,n) has the same edge rule as X_o(4,n;r)
        return classify_odd(validate(Family::OddRadius, 4, p.n, p.r, 0));
      }
      return metacirculant_classify(p.r, p.n).classification;
  }
  return {};
}

bool metacirculant_applicable(std::int64_t r, std::int64_t n) {
  if (n < 8 || n % 4 != 0) return false;
  Residue rr(r, n);
  return is_unit(rr) && mul_order(rr) == 4;
}

MetaResult metacirculant_classify(std::int64_t r, std::int64_t n) {
  if (!metacirculant_applicable(r, n)) {
    throw PreconditionFailed("metacirculant_classify needs n = 2n1, n1 even, r of order 4");
  }
  const std::int64_t n1 = n / 2;
  r = mod(r, n);
  if (r >= n1) r = n - r;

  MetaResult res;
  res.r_used = r;
  const std::int64_t r2 = mulmod(r, r, n), r3 = mulmod(r2, r, n);
  const std::int64_t twice_t = mod(-1 - r - r2 - r3, n);
  if (twice_t % 2 != 0) throw Error("-1-r-r^2-r^3 is odd");
  const std::int64_t t = twice_t / 2;
  res.component = even_params(4, n1, mod(r, n1), mod(t, n1));

  TetraGraph m = build_metacirculant(r, 4, n);
  Component comp = component_of(m.graph, m.flat(0, 0));
  TetraGraph x = build_even(res.component);
  res.component_vertices = comp.new_to_old;
  const std::array<std::int64_t, 4> offset{0, 1, mod(1 + r, n), mod(1 + r + r2, n)};
  res.map.resize(comp.new_to_old.size());
  for (std::size_t k = 0; k < comp.new_to_old.size(); ++k) {
    const int v = comp.new_to_old[k];
    const int i = m.layer(v);
    const std::int64_t s = mod(m.pos(v) + offset[static_cast<std::size_t>(i)], n);
    if (s % 2 != 0) throw Error("component vertex with odd offset position");
    res.map[k] = x.flat(i, s / 2);
  }
  if (comp.graph.size() != x.size()) {
    throw Error("component of M(r;4,n) has the wrong size");
  }
  res.edge_violations = count_edge_violations(comp.graph, x.graph, res.map);
  if (res.edge_violations != 0) {
    throw Error("metacirculant component map has " + std::to_string(res.edge_violations) +
                " edge violations");
  }
  const std::int64_t rr = mulmod(r, r, n1);
  if (rr == 1 % n1 || rr == n1 - 1) {
    res.classification.verdict = Verdict::ArcTransitive;
    res.classification.reason = Reason::RSquaredPlusMinusOne;
  }
  return res;
}

}  // namespace hat
