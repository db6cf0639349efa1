#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hat/canon.hpp"
#include "hat/errors.hpp"
#include "hat/graphs.hpp"
#include "hat/group.hpp"
#include "hat/paths.hpp"

using namespace hat;

TEST(Permutation, CompositionIsLeftToRight) {
  Permutation a(std::vector<int>{1, 2, 0});
  Permutation b(std::vector<int>{0, 2, 1});
  // x(ab) = (xa)b: 0 -> 1 -> 2
  EXPECT_EQ((a * b)(0), 2);
  EXPECT_EQ(a.conj(b), b.inverse() * a * b);
  EXPECT_EQ(a.pow(3), Permutation::identity(3));
  EXPECT_EQ(a.pow(-1), a.inverse());
  EXPECT_EQ(a.order(), 3);
  EXPECT_THROW(Permutation(std::vector<int>{0, 0, 1}), Error);
}

TEST(Generators, Images) {
  TetraGraph g = build_even(even_params(6, 14, 3, 0));
  Generators x = build_generators(g);
  EXPECT_EQ(x.rho(g.flat(0, 0)), g.flat(0, 1));
  EXPECT_EQ(x.tau(g.flat(0, 5)), g.flat(0, 9));

  TetraGraph h = build_even(even_params(6, 14, 3, 7));
  EXPECT_EQ(build_generators(h).sigma(h.flat(5, 0)), h.flat(0, 7));
}

TEST(Generators, Relations) {
  for (auto p : {even_params(6, 14, 3, 0), even_params(8, 68, 19, 34)}) {
    Generators x = build_generators(build_even(p));
    EXPECT_TRUE(verify_relations(x, p)) << describe(p);
  }
  const ResidueParams p = even_params(6, 14, 3, 0);
  Generators x = build_generators(build_even(p));
  std::vector<int> im = x.tau.image();
  std::swap(im[0], im[1]);
  x.tau = Permutation(im);
  RelationReport rep = check_relations(x, p);
  EXPECT_FALSE(rep.all());
  EXPECT_TRUE(rep.rho_n);
}

TEST(Generate, Orders) {
  const ResidueParams p = even_params(6, 14, 3, 0);
  TetraGraph g = build_even(p);
  Generators x = build_generators(g);
  EXPECT_EQ(generate(x.list(), 1000).order(), 168);
  EXPECT_EQ(generate({x.rho}, 1000).order(), 14);
  PermGroup k = generate({x.rho, x.tau}, 1000);
  EXPECT_EQ(k.order(), 28);
  EXPECT_TRUE(is_dihedral(k, 14));
  EXPECT_FALSE(is_dihedral(generate({x.rho}, 1000), 7));
  EXPECT_THROW(generate(x.list(), 100), CapExceeded);
}

TEST(Orbits, VerticesAndCycles) {
  const ResidueParams p = even_params(6, 14, 3, 0);
  TetraGraph g = build_even(p);
  Generators x = build_generators(g);
  EXPECT_EQ(vertex_orbit(x.list(), 0).size(), 84u);
  std::vector<int> x0 = vertex_orbit({x.rho}, 0);
  ASSERT_EQ(x0.size(), 14u);
  for (int v : x0) EXPECT_EQ(g.layer(v), 0);

  // the generic 8-cycle u_0^0 u_1^0 u_2^0 u_1^{-r} u_0^{-r} u_1^{1-r} u_2^1 u_1^1
  const std::int64_t r = p.r;
  std::vector<int> c{g.flat(0, 0), g.flat(1, 0), g.flat(2, 0), g.flat(1, -r),
                     g.flat(0, -r), g.flat(1, 1 - r), g.flat(2, 1), g.flat(1, 1)};
  for (std::size_t k = 0; k < c.size(); ++k) ASSERT_TRUE(g.graph.has_edge(c[k], c[(k + 1) % c.size()]));
  auto orb = orbit<std::vector<int>>(
      x.list(), canonical_cycle(c),
      [](const Permutation& q, const std::vector<int>& cy) {
        std::vector<int> out;
        for (int v : cy) out.push_back(q(v));
        return canonical_cycle(out);
      },
      [](const std::vector<int>& cy) { return cy; });
  EXPECT_EQ(orb.size(), 84u);
}

TEST(Automorphism, Checks) {
  TetraGraph g = build_even(even_params(6, 14, 3, 0));
  Generators x = build_generators(g);
  EXPECT_TRUE(is_automorphism(g.graph, x.rho));
  EXPECT_TRUE(is_automorphism(g.graph, Permutation::identity(g.size())));
  std::vector<int> im = Permutation::identity(g.size()).image();
  std::swap(im[0], im[1]);
  EXPECT_FALSE(is_automorphism(g.graph, Permutation(im)));
  EXPECT_GT(count_edge_violations(g.graph, g.graph, im), 0);
}

namespace {

std::vector<ResidueParams> sample_even(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<ResidueParams> out;
  while (static_cast<int>(out.size()) < count) {
    const int m = 4 + 2 * static_cast<int>(rng() % 4);
    const std::int64_t n = 4 + 2 * static_cast<std::int64_t>(rng() % 24);
    const std::int64_t r = static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(n));
    const std::int64_t t = static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(n));
    try {
      out.push_back(even_params(m, n, r, t));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

TEST(GroupProperty, RelationsOrderBlocksAndStabilizer) {
  for (const auto& p : sample_even(40, 7)) {
    TetraGraph g = build_even(p);
    Generators x = build_generators(g);
    ASSERT_TRUE(verify_relations(x, p)) << describe(p);
    PermGroup h = generate(x.list(), 4 * p.m * p.n);
    ASSERT_EQ(h.order(), 2 * p.m * p.n) << describe(p);
    // layers are blocks
    for (const auto& e : h.elements) {
      for (int i = 0; i < p.m; ++i) {
        const int target = g.layer(e(g.flat(i, 0)));
        for (std::int64_t j = 1; j < p.n; ++j) ASSERT_EQ(g.layer(e(g.flat(i, j))), target);
      }
    }
    // tau is the only nonidentity element fixing u_0^0
    auto stab = stabilizer(h, 0);
    ASSERT_EQ(stab.size(), 2u);
    EXPECT_TRUE(std::find(stab.begin(), stab.end(), x.tau) != stab.end());
  }
}
