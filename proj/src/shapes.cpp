#include "hat/shapes.hpp"

#include <algorithm>
#include <mutex>

#include "hat/canon.hpp"
#include "hat/errors.hpp"

namespace hat {

std::string word_refinement(const Word& w) {
  const std::size_t k = w.size();
  std::string s;
  for (std::size_t i = 0; i < k; ++i) {
    const Step& a = w[(i + k - 1) % k];
    const Step& b = w[i];
    if (a.dir == 1 && b.dir == -1) {
      s.push_back('+');
    } else if (a.dir == -1 && b.dir == 1) {
      s.push_back('-');
    } else {
      s.push_back(a.label == b.label ? 'g' : 'z');
    }
  }
  return s;
}

std::string word_code(const Word& w) {
  std::string s = word_refinement(w);
  for (char& ch : s) {
    if (ch == '+' || ch == '-') ch = 'a';
  }
  return s;
}

std::string word_trace(const Word& w) {
  std::string s = word_refinement(w);
  for (char& ch : s) ch = (ch == '+' || ch == '-') ? 'a' : 'n';
  return s;
}

bool has_backtrack(const Word& w) {
  const std::size_t k = w.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Step& a = w[(i + k - 1) % k];
    const Step& b = w[i];
    if (a.dir == -b.dir && a.label == b.label) return true;
  }
  return false;
}

Word canonical_word(const Word& w) {
  const std::size_t k = w.size();
  Word rev;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    rev.push_back({static_cast<std::int8_t>(-it->dir), it->label});
  }
  Word best = w;
  Word cand(k);
  for (const Word* base : {&w, static_cast<const Word*>(&rev)}) {
    for (std::size_t rot = 0; rot < k; ++rot) {
      for (int swap = 0; swap < 2; ++swap) {
        for (std::size_t i = 0; i < k; ++i) {
          const Step& s = (*base)[(i + rot) % k];
          cand[i] = {s.dir, static_cast<std::int8_t>(s.label ^ swap)};
        }
        if (cand < best) best = cand;
      }
    }
  }
  return best;
}

const std::vector<Word>& all_words(int len) {
  static std::mutex mu;
  static std::map<int, std::vector<Word>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(len);
  if (it != cache.end()) return it->second;
  std::vector<Word> out;
  std::uint64_t total = 1;
  for (int i = 0; i < len; ++i) total *= 4;
  Word w(static_cast<std::size_t>(len));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (int i = 0; i < len; ++i) {
      w[static_cast<std::size_t>(i)] = {static_cast<std::int8_t>((x & 2) ? -1 : 1),
                                        static_cast<std::int8_t>(x & 1)};
      x >>= 2;
    }
    if (!has_backtrack(w)) out.push_back(w);
  }
  return cache.emplace(len, std::move(out)).first->second;
}

Instance instantiate(const ResidueParams& p, const Word& w) {
  Instance in;
  std::int64_t L = 0, j = 0;
  in.vertices.push_back({0, 0});
  for (const Step& s : w) {
    if (s.dir == 1) {
      const int li = static_cast<int>(mod(L, p.m));
      j = mod(j + s.label * p.pw[static_cast<std::size_t>(li)] + (li == p.m - 1 ? p.t : 0), p.n);
      ++L;
    } else {
      const int li = static_cast<int>(mod(L - 1, p.m));
      j = mod(j - s.label * p.pw[static_cast<std::size_t>(li)] - (li == p.m - 1 ? p.t : 0), p.n);
      --L;
    }
    in.vertices.push_back({static_cast<int>(mod(L, p.m)), j});
  }
  in.closed = in.vertices.back() == in.vertices.front();
  in.vertices.pop_back();
  if (in.closed) {
    auto sorted = in.vertices;
    std::sort(sorted.begin(), sorted.end());
    in.simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  return in;
}

WrappedPoly wrapped_poly(const Word& w, int m) {
  WrappedPoly p;
  p.c.assign(static_cast<std::size_t>(m), 0);
  int L = 0;
  for (const Step& s : w) {
    const int li = static_cast<int>(mod(s.dir == 1 ? L : L - 1, m));
    p.c[static_cast<std::size_t>(li)] += s.dir * s.label;
    if (li == m - 1) p.ct += s.dir;
    L += s.dir;
  }
  p.net = L;
  return p;
}

WrappedPoly normalize(const WrappedPoly& p) {
  const int m = static_cast<int>(p.c.size());
  WrappedPoly best;
  bool first = true;
  for (int sign : {1, -1}) {
    for (int k = 0; k < m; ++k) {
      WrappedPoly q;
      q.c.resize(p.c.size());
      for (int i = 0; i < m; ++i) {
        q.c[static_cast<std::size_t>(i)] = sign * p.c[static_cast<std::size_t>(mod(i - k, m))];
      }
      q.ct = sign * p.ct;
      if (first || q < best) best = q;
      first = false;
    }
  }
  return best;
}

bool holds(const WrappedPoly& p, const ResidueParams& params) {
  if (mod(p.net, params.m) != 0) return false;
  std::int64_t v = mulmod(p.ct, params.t, params.n);
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    v = mod(v + mulmod(p.c[i], params.rpow(static_cast<std::int64_t>(i)), params.n), params.n);
  }
  return v == 0;
}

std::vector<int> unwrapped_poly(const Word& w) {
  std::map<int, int> coeff;
  int L = 0;
  for (const Step& s : w) {
    coeff[s.dir == 1 ? L : L - 1] += s.dir * s.label;
    L += s.dir;
  }
  std::vector<int> out;
  bool started = false;
  for (auto [k, v] : coeff) {
    if (v != 0) started = true;
    if (started) out.push_back(v);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  if (!out.empty() && out.front() < 0) {
    for (int& v : out) v = -v;
  }
  return out;
}

std::vector<DerivedOrbit> derived_orbits(const ResidueParams& p, int len) {
  std::map<Word, DerivedOrbit> classes;
  for (const Word& w : all_words(len)) {
    Instance in = instantiate(p, w);
    if (!in.simple) continue;
    Word key = canonical_word(w);
    auto [it, fresh] = classes.try_emplace(key);
    if (fresh) {
      it->second.word = key;
      it->second.refinement = canonical_string(word_refinement(key));
      it->second.code = canonical_string(word_code(key));
      it->second.trace = canonical_string(word_trace(key));
    }
    ++it->second.closed_words;
  }
  const std::int64_t mn = static_cast<std::int64_t>(p.m) * p.n;
  std::vector<DerivedOrbit> out;
  for (auto& [k, o] : classes) {
    // each cycle through u_0^0 is read in two directions; a cycle has len vertices
    if ((mn * o.closed_words) % (2 * len) != 0) {
      throw Error("word count not divisible for " + describe(p));
    }
    o.length = mn * o.closed_words / (2 * len);
    out.push_back(o);
  }
  return out;
}

std::vector<SymbolicClass> symbolic_classes(int m, const std::string& trace, int len) {
  const std::string want = canonical_string(trace);
  std::map<Word, SymbolicClass> classes;
  for (const Word& w : all_words(len)) {
    WrappedPoly poly = wrapped_poly(w, m);
    if (mod(poly.net, m) != 0) continue;
    if (canonical_string(word_trace(w)) != want) continue;
    Word key = canonical_word(w);
    auto [it, fresh] = classes.try_emplace(key);
    if (fresh) {
      it->second.word = key;
      it->second.code = canonical_string(word_code(key));
    }
    WrappedPoly norm = normalize(poly);
    it->second.polys.insert(norm);
  }
  std::vector<SymbolicClass> out;
  for (auto& [k, c] : classes) out.push_back(std::move(c));
  return out;
}

}  // namespace hat
