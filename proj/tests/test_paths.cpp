#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "hat/canon.hpp"
#include "hat/errors.hpp"
#include "hat/paths.hpp"

using namespace hat;

namespace {

struct Fixture {
  ResidueParams p;
  TetraGraph g;
  OrientedGraph d;
  Generators x;
  explicit Fixture(const ResidueParams& q)
      : p(q), g(build(q)), d(orient(g)), x(build_generators(g)) {}
  int v(int i, std::int64_t j) const { return g.flat(i, j); }
};

}  // namespace

TEST(TwoPath, NamedExamples) {
  Fixture f(even_params(6, 14, 3, 0));
  const std::int64_t r = f.p.r;
  EXPECT_EQ(classify_two_path(f.d, f.v(0, 1), f.v(1, 1), f.v(0, 0)), TwoPathClass::AnchorPos);
  EXPECT_EQ(classify_two_path(f.d, f.v(0, 1), f.v(1, 1), f.v(2, 1)), TwoPathClass::Glide);
  EXPECT_EQ(classify_two_path(f.d, f.v(0, 1), f.v(1, 1), f.v(2, 1 + r)), TwoPathClass::Zigzag);
  EXPECT_EQ(classify_two_path(f.d, f.v(2, 1), f.v(1, 1), f.v(2, 1 + r)), TwoPathClass::AnchorNeg);
  for (std::int64_t j = 0; j < 14; ++j) {
    EXPECT_EQ(classify_two_path(f.d, f.v(5, j), f.v(0, j + f.p.t), f.v(1, j + f.p.t)),
              TwoPathClass::Glide);
  }
  EXPECT_THROW(classify_two_path(f.d, f.v(0, 0), f.v(2, 0), f.v(3, 0)), NotTwoPath);
}

TEST(TwoPath, CountsMatchRing) {
  Fixture f(even_params(6, 14, 3, 0));
  TwoPathCounts c = count_two_paths(f.d);
  EXPECT_EQ(c.anchor_pos, 84);
  EXPECT_EQ(c.anchor_neg, 84);
  EXPECT_EQ(c.glide, 168);
  EXPECT_EQ(c.zigzag, 168);
  EXPECT_EQ(c.anchor_pos + c.anchor_neg + c.glide + c.zigzag, 6 * 84);
}

TEST(TwoPath, PerVertexCounts) {
  Fixture f(even_params(8, 68, 19, 34));
  for (int v = 0; v < f.g.size(); v += 37) {
    std::map<TwoPathClass, int> k;
    const auto& nb = f.g.graph.adj[static_cast<std::size_t>(v)];
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) ++k[classify_two_path(f.d, nb[a], v, nb[b])];
    }
    EXPECT_EQ(k[TwoPathClass::AnchorPos], 1);
    EXPECT_EQ(k[TwoPathClass::AnchorNeg], 1);
    EXPECT_EQ(k[TwoPathClass::Glide], 2);
    EXPECT_EQ(k[TwoPathClass::Zigzag], 2);
  }
}

TEST(Codes, GenericCycle) {
  Fixture f(even_params(6, 14, 3, 0));
  const std::int64_t r = f.p.r;
  std::vector<int> c{f.v(0, 0), f.v(1, 0), f.v(2, 0), f.v(1, -r),
                     f.v(0, -r), f.v(1, 1 - r), f.v(2, 1), f.v(1, 1)};
  WalkCode w = code_trace_refinement(f.d, c);
  EXPECT_EQ(w.code, canonical_string("agazagaz"));
  EXPECT_EQ(w.trace, canonical_string("anananan"));
  EXPECT_EQ(w.code.size(), c.size());
}

TEST(Codes, CoiledCycleOfTZero) {
  Fixture f(even_params(8, 68, 19, 0));
  std::vector<int> c;
  for (int i = 0; i < 8; ++i) c.push_back(f.v(i, 0));
  WalkCode w = code_trace_refinement(f.d, c);
  EXPECT_EQ(w.trace, "nnnnnnnn");
  EXPECT_EQ(w.code, "gggggggg");
}

TEST(Cycles, FourCycleWhenTZero) {
  TetraGraph g = build_even(even_params(4, 20, 3, 0));
  auto cycles = enumerate_cycles(g.graph, 4);
  std::vector<int> want = canonical_cycle({g.flat(0, 0), g.flat(1, 0), g.flat(2, 0), g.flat(3, 0)});
  EXPECT_TRUE(std::binary_search(cycles.begin(), cycles.end(), want));
  EXPECT_THROW(enumerate_cycles(g.graph, 2), LengthOutOfRange);
  EXPECT_THROW(enumerate_cycles(g.graph, 11), LengthOutOfRange);
}

TEST(Cycles, OddLengthAbsentInBipartiteCase) {
  // every edge changes the layer by one and m is even
  TetraGraph g = build_even(even_params(6, 14, 3, 0));
  EXPECT_TRUE(enumerate_cycles(g.graph, 3).empty());
  EXPECT_TRUE(enumerate_cycles(g.graph, 7).empty());
}

TEST(Cycles, ParallelMatchesSerialAndBruteCount) {
  TetraGraph g = build_even(even_params(6, 14, 3, 0));
  for (int len = 3; len <= 8; ++len) {
    auto a = enumerate_cycles(g.graph, len);
    auto b = enumerate_cycles_serial(g.graph, len);
    ASSERT_EQ(a, b) << len;
    std::set<std::vector<int>> uniq(a.begin(), a.end());
    ASSERT_EQ(uniq.size(), a.size());
    for (const auto& c : a) {
      ASSERT_EQ(static_cast<int>(c.size()), len);
      ASSERT_EQ(canonical_cycle(c), c);
      for (std::size_t k = 0; k < c.size(); ++k) ASSERT_TRUE(g.graph.has_edge(c[k], c[(k + 1) % c.size()]));
    }
  }
}

TEST(Orbits, GenericOrbitAndFrequencies) {
  Fixture f(even_params(6, 14, 3, 0));
  auto orbits = orbit_partition(f.d, f.x.list(), enumerate_cycles(f.g.graph, 8));
  const CycleOrbit* generic = nullptr;
  for (const auto& o : orbits) {
    if (o.code == canonical_string("agazagaz")) generic = &o;
    EXPECT_NE(o.trace, canonical_string("aaanaaan"));
  }
  ASSERT_NE(generic, nullptr);
  EXPECT_EQ(generic->length, 84);
  FrequencyReport fr = checked_frequencies(f.d, {generic});
  EXPECT_EQ(fr.a, 2);
  EXPECT_EQ(fr.g, 1);
  EXPECT_EQ(fr.z, 1);
  EXPECT_EQ(frequencies(f.d, {}, FrequencyMethod::DirectCount), FrequencyReport{});
  EXPECT_EQ(frequencies(f.d, {}, FrequencyMethod::Lemma36), FrequencyReport{});
}

TEST(Orbits, CoiledOrbitWhenTZero) {
  Fixture f(even_params(8, 68, 19, 0));
  auto orbits = orbit_partition(f.d, f.x.list(), enumerate_cycles(f.g.graph, 8));
  bool found = false;
  for (const auto& o : orbits) {
    if (o.code == "gggggggg") {
      found = true;
      EXPECT_EQ(o.length, 2 * 68);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Orbits, ShiftedTraceHasDoubleFrequency) {
  // an orbit of trace an^3an^3 and length 2mn has nu_a = 2
  for (std::int64_t n = 8; n <= 100; n += 2) {
    for (std::int64_t r = 2; r < n; ++r) {
      ResidueParams p;
      try {
        p = even_params(6, n, r, 0);
      } catch (const Error&) {
        continue;
      }
      const std::int64_t r2 = mulmod(r, r, n);
      if (r2 == 1 || r2 == n - 1) continue;
      Fixture f(p);
      auto orbits = orbit_partition(f.d, f.x.list(), enumerate_cycles(f.g.graph, 8));
      for (const auto& o : orbits) {
        if (o.trace == canonical_string("annnannn") && o.length == 2 * 6 * n) {
          FrequencyReport fr = checked_frequencies(f.d, {&o});
          EXPECT_EQ(fr.a, 2);
          return;
        }
      }
    }
  }
  FAIL() << "no an^3an^3 orbit of length 2mn found for m = 6";
}

TEST(PathsProperty, ClassesPreservedAndParity) {
  std::mt19937 rng(5);
  int done = 0;
  while (done < 20) {
    const int m = 4 + 2 * static_cast<int>(rng() % 3);
    const std::int64_t n = 6 + 2 * static_cast<std::int64_t>(rng() % 20);
    const std::int64_t r = static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(n));
    const std::int64_t t = static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(n));
    ResidueParams p;
    try {
      p = even_params(m, n, r, t);
    } catch (const Error&) {
      continue;
    }
    ++done;
    Fixture f(p);
    // H preserves the class of every 2-path
    for (int v = 0; v < f.g.size(); ++v) {
      const auto& nb = f.g.graph.adj[static_cast<std::size_t>(v)];
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
          const TwoPathClass c = classify_two_path(f.d, nb[a], v, nb[b]);
          for (const auto& h : f.x.list()) {
            ASSERT_EQ(classify_two_path(f.d, h(nb[a]), h(v), h(nb[b])), c) << describe(p);
          }
        }
      }
    }
    for (int len = 4; len <= 8; ++len) {
      auto orbits = orbit_partition(f.d, f.x.list(), enumerate_cycles(f.g.graph, len));
      for (const auto& o : orbits) {
        if (o.trace.find('a') != std::string::npos) ASSERT_TRUE(anchors_alternate(o.refinement));
        if (len % 2 == 0) ASSERT_TRUE(even_glides_and_zigzags(o.refinement)) << o.refinement;
        ASSERT_NO_THROW(checked_frequencies(f.d, {&o}));
        ASSERT_EQ(static_cast<std::int64_t>(o.cycles.size()), o.length);
      }
    }
  }
}

TEST(PathsProperty, TracesForLargeM) {
  const std::set<std::string> allowed{
      canonical_string("anananan"), canonical_string("aaaaanan"), canonical_string("aanannan"),
      canonical_string("aaannann"), canonical_string("annnannn")};
  for (auto p : {even_params(10, 22, 5, 0), even_params(12, 26, 3, 0), even_params(10, 22, 3, 0)}) {
    Fixture f(p);
    auto orbits = orbit_partition(f.d, f.x.list(), enumerate_cycles(f.g.graph, 8));
    for (const auto& o : orbits) {
      EXPECT_TRUE(allowed.count(o.trace)) << describe(p) << " " << o.trace;
      EXPECT_NE(o.trace, canonical_string("aaanaaan"));
    }
  }
}
