#include <gtest/gtest.h>

#include <random>

#include "hat/errors.hpp"
#include "hat/orientation.hpp"

using namespace hat;

TEST(Orient, ArcsOutOfOrigin) {
  TetraGraph g = build_even(even_params(6, 14, 3, 0));
  OrientedGraph d = orient(g);
  EXPECT_TRUE(d.is_arc(g.flat(0, 0), g.flat(1, 0)));
  EXPECT_TRUE(d.is_arc(g.flat(0, 0), g.flat(1, 1)));
  EXPECT_FALSE(d.is_arc(g.flat(1, 0), g.flat(0, 0)));
  for (int v = 0; v < g.size(); ++v) {
    ASSERT_EQ(d.out(v).size(), 2u);
    ASSERT_EQ(d.in[static_cast<std::size_t>(v)].size(), 2u);
  }
}

TEST(Orient, SigmaMapsArcsToArcs) {
  TetraGraph g = build_even(even_params(6, 14, 3, 0));
  OrientedGraph d = orient(g);
  Generators x = build_generators(g);
  int arcs = 0;
  for (const Arc& a : d.arcs()) {
    ASSERT_TRUE(d.is_arc(x.sigma(a.tail), x.sigma(a.head)));
    ++arcs;
  }
  EXPECT_EQ(arcs, 2 * 84);
}

TEST(Orient, RejectsNonPreservingMap) {
  TetraGraph g = build_even(even_params(6, 14, 3, 0));
  // reversing every layer order is an automorphism candidate that flips arcs
  std::vector<int> flip(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) flip[static_cast<std::size_t>(v)] = v;
  std::swap(flip[0], flip[static_cast<std::size_t>(g.flat(1, 0))]);
  EXPECT_THROW(orient(g, {Permutation(flip)}), OrientationInconsistent);
}

TEST(Alternating, TightStructureOfXe) {
  TetraGraph g = build_even(even_params(6, 14, 3, 0));
  AlternatingStructure s = alternating_cycles(orient(g));
  EXPECT_EQ(s.cycles.size(), 6u);
  for (const auto& c : s.cycles) EXPECT_EQ(c.size(), 28u);
  EXPECT_EQ(s.radius, 14);
  EXPECT_EQ(s.attachment_number, 14);
  EXPECT_EQ(attachment_class(s).kind, AttachmentKind::Tight);
  // attachment sets are the layers X_i
  ASSERT_EQ(s.attachment_sets.size(), 6u);
  for (const auto& set : s.attachment_sets) {
    ASSERT_EQ(set.size(), 14u);
    for (int v : set) EXPECT_EQ(g.layer(v), g.layer(set.front()));
  }
}

TEST(Alternating, ClassNames) {
  AlternatingStructure loose{{}, {}, 5, 1};
  EXPECT_EQ(attachment_class(loose).kind, AttachmentKind::Loose);
  AlternatingStructure anti{{}, {}, 5, 2};
  EXPECT_EQ(attachment_class(anti).kind, AttachmentKind::Antipodal);
  AlternatingStructure other{{}, {}, 6, 3};
  EXPECT_EQ(to_string(attachment_class(other)), "other(3)");
  EXPECT_EQ(to_string(attachment_class(AlternatingStructure{{}, {}, 4, 4})), "tight");
}

TEST(OrientationProperty, RandomTuples) {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 40) {
    const int m = 4 + 2 * static_cast<int>(rng() % 4);
    const std::int64_t n = 4 + 2 * static_cast<std::int64_t>(rng() % 30);
    const std::int64_t r = static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(n));
    const std::int64_t t = static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(n));
    ResidueParams p;
    try {
      p = even_params(m, n, r, t);
    } catch (const Error&) {
      continue;
    }
    ++done;
    TetraGraph g = build_even(p);
    OrientedGraph d = orient(g);  // checks all of H's generators preserve arcs
    AlternatingStructure s = alternating_cycles(d);
    ASSERT_EQ(static_cast<int>(s.cycles.size()), m) << describe(p);
    ASSERT_EQ(s.radius, n);
    ASSERT_EQ(s.attachment_number, n);
    ASSERT_EQ((2 * s.radius) % s.attachment_number, 0);
    // every vertex on exactly two alternating cycles
    std::vector<int> hits(static_cast<std::size_t>(g.size()), 0);
    for (const auto& c : s.cycles) {
      for (int v : c) ++hits[static_cast<std::size_t>(v)];
    }
    for (int h : hits) ASSERT_EQ(h, 2);
    // attachment sets partition the vertices
    std::vector<int> cover(static_cast<std::size_t>(g.size()), 0);
    for (const auto& set : s.attachment_sets) {
      ASSERT_EQ(static_cast<int>(set.size()), s.attachment_number);
      for (int v : set) ++cover[static_cast<std::size_t>(v)];
    }
    for (int c : cover) ASSERT_EQ(c, 1);
  }
}
