#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "hat/canon.hpp"
#include "hat/errors.hpp"
#include "hat/shapes.hpp"
#include "hat/tables.hpp"

using namespace hat;

namespace {

Word parse_word(const std::string& s) {
  // pairs like "+0-1" : direction then label
  Word w;
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    w.push_back({static_cast<std::int8_t>(s[i] == '+' ? 1 : -1),
                 static_cast<std::int8_t>(s[i + 1] - '0')});
  }
  return w;
}

std::vector<CycleOrbit> observed_orbits(const ResidueParams& p) {
  TetraGraph g = build_even(p);
  OrientedGraph d = orient(g);
  Generators x = build_generators(g);
  return orbit_partition(d, x.list(), enumerate_cycles(g.graph, 8));
}

using Key = std::tuple<std::string, std::string, std::int64_t>;

}  // namespace

TEST(Words, CountMatchesCyclicallyReducedFormula) {
  // cyclically reduced words of length k in a free group of rank 2:
  // 3^k + 1 + (1 + (-1)^k)
  for (int k = 3; k <= 8; ++k) {
    std::size_t want = 1;
    for (int i = 0; i < k; ++i) want *= 3;
    want += 1 + (k % 2 == 0 ? 2 : 0);
    EXPECT_EQ(all_words(k).size(), want) << k;
  }
  EXPECT_EQ(all_words(8).size(), 6564u);
}

TEST(Words, RefinementOfGenericCycle) {
  // u_0^0 -> u_1^0 -> u_2^0 <- u_1^{-r} <- u_0^{-r} -> u_1^{1-r} -> u_2^1 <- u_1^1 <- u_0^0
  Word w = parse_word("+0+0-1-0+1+1-0-1");
  EXPECT_EQ(word_refinement(w), "-g+z-g+z");
  EXPECT_EQ(canonical_string(word_code(w)), canonical_string("agazagaz"));
  EXPECT_EQ(canonical_string(word_trace(w)), canonical_string("anananan"));
  EXPECT_FALSE(has_backtrack(w));
  EXPECT_TRUE(has_backtrack(parse_word("+0-0+1-1")));
  Instance in = instantiate(even_params(6, 14, 3, 0), w);
  EXPECT_TRUE(in.closed);
  EXPECT_TRUE(in.simple);
  EXPECT_EQ(in.vertices[3], (std::pair<int, std::int64_t>{1, 11}));
}

TEST(Words, CanonicalInvariance) {
  std::mt19937 rng(3);
  const auto& words = all_words(8);
  for (int it = 0; it < 500; ++it) {
    const Word& w = words[rng() % words.size()];
    const Word c = canonical_word(w);
    Word rot(w.begin() + 3, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + 3);
    Word rev;
    for (auto s = w.rbegin(); s != w.rend(); ++s) rev.push_back({static_cast<std::int8_t>(-s->dir), s->label});
    Word swapped = w;
    for (auto& s : swapped) s.label ^= 1;
    ASSERT_EQ(canonical_word(rot), c);
    ASSERT_EQ(canonical_word(rev), c);
    ASSERT_EQ(canonical_word(swapped), c);
    ASSERT_EQ(canonical_word(c), c);
    ASSERT_EQ(canonical_string(word_trace(c)), canonical_string(word_trace(w)));
    ASSERT_EQ(canonical_string(word_code(c)), canonical_string(word_code(w)));
  }
}

TEST(Polys, NormalizeIdempotentAndInvariant) {
  for (const Word& w : all_words(6)) {
    for (int m : {4, 6}) {
      WrappedPoly p = wrapped_poly(w, m);
      WrappedPoly q = normalize(p);
      ASSERT_EQ(normalize(q), q);
      WrappedPoly neg = p;
      for (int& c : neg.c) c = -c;
      neg.ct = -neg.ct;
      ASSERT_EQ(normalize(neg), q);
    }
  }
}

TEST(ShapesProperty, ClosedIffPolynomialHolds) {
  std::vector<ResidueParams> ps{even_params(6, 14, 3, 0), even_params(6, 14, 3, 7),
                                even_params(4, 20, 7, 10), even_params(8, 68, 19, 34),
                                even_params(4, 8, 3, 0), even_params(8, 68, 19, 0)};
  for (const auto& p : ps) {
    TetraGraph g = build_even(p);
    for (const Word& w : all_words(8)) {
      Instance in = instantiate(p, w);
      ASSERT_EQ(in.closed, holds(wrapped_poly(w, p.m), p)) << describe(p);
      // the instantiated walk follows graph edges
      for (std::size_t k = 0; k + 1 < in.vertices.size(); ++k) {
        const auto [a, ja] = in.vertices[k];
        const auto [b, jb] = in.vertices[k + 1];
        ASSERT_TRUE(g.graph.has_edge(g.flat(a, ja), g.flat(b, jb)));
      }
    }
  }
}

TEST(ShapesProperty, DerivedOrbitsMatchObserved) {
  for (auto p : {even_params(6, 14, 3, 0), even_params(6, 14, 3, 7), even_params(4, 20, 7, 10),
                 even_params(8, 68, 19, 34), even_params(8, 68, 19, 0), even_params(4, 8, 3, 0),
                 even_params(10, 22, 5, 0)}) {
    std::multiset<Key> derived, seen;
    for (const auto& d : derived_orbits(p)) derived.insert({d.trace, d.code, d.length});
    for (const auto& o : observed_orbits(p)) seen.insert({o.trace, o.code, o.length});
    EXPECT_EQ(derived, seen) << describe(p);
  }
}

TEST(Tables, Sizes) {
  EXPECT_EQ(table1().size(), 29u);
  EXPECT_EQ(table2().size(), 8u);
  EXPECT_EQ(table6().size(), 5u);
  EXPECT_EQ(families().size(), 5u);
  for (const auto& rep : table1_representatives()) {
    EXPECT_FALSE(rep.classes.empty()) << rep.row->label();
  }
  EXPECT_EQ(table1()[0].label(), "T1.1");
  EXPECT_EQ(table2()[1].length.str(), "16n");
  EXPECT_EQ(table1()[5].length.str(), "2mn");
}

TEST(Tables, RowConditions) {
  const ResidueParams p = even_params(6, 14, 3, 0);
  EXPECT_TRUE(table1()[0].condition(p));
  EXPECT_TRUE(table1()[1].condition(p));   // 3 - r = 0
  EXPECT_FALSE(table1()[2].condition(p));  // 3 + r = 6
}

TEST(Tables, MatchNamedAndCorpusInstances) {
  for (auto p : {even_params(6, 14, 3, 0), even_params(8, 68, 19, 34), even_params(8, 68, 19, 0),
                 even_params(4, 20, 7, 10), even_params(4, 30, 13, 25), even_params(4, 40, 3, 20)}) {
    auto orbits = observed_orbits(p);
    TableCheck c = match_tables(p, orbits);
    EXPECT_TRUE(c.ok()) << describe(p) << ": " << (c.problems.empty() ? "" : c.problems.front());
    for (const auto& o : orbits) EXPECT_TRUE(o.matched.has_value());
    EXPECT_NO_THROW(match_tables_strict(p, orbits));
  }
}

TEST(Tables, MatchRejectsSquareUnits) {
  const ResidueParams p = even_params(4, 8, 3, 0);
  auto orbits = observed_orbits(p);
  EXPECT_THROW(match_tables(p, orbits), PreconditionFailed);
}

TEST(Tables, StrictThrowsOnMissingOrbit) {
  const ResidueParams p = even_params(6, 14, 3, 0);
  auto orbits = observed_orbits(p);
  orbits.pop_back();
  TableCheck c = match_tables(p, orbits);
  EXPECT_FALSE(c.ok());
  EXPECT_THROW(match_tables_strict(p, orbits), UnmatchedOrbit);
}
