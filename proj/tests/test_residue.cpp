#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hat/errors.hpp"
#include "hat/residue.hpp"

using namespace hat;

TEST(Residue, AlwaysReduced) {
  Residue a(-3, 14);
  EXPECT_EQ(a.value(), 11);
  EXPECT_EQ((a * Residue(5, 14)).value(), 13);
  EXPECT_EQ((-Residue(0, 7)).value(), 0);
}

TEST(Residue, WideProducts) {
  const std::int64_t n = (std::int64_t{1} << 62) - 57;
  Residue a(n - 1, n);
  EXPECT_EQ((a * a).value(), 1);
}

TEST(Residue, IsUnit) {
  EXPECT_TRUE(is_unit(Residue(3, 14)));
  EXPECT_FALSE(is_unit(Residue(4, 14)));
  EXPECT_TRUE(is_unit(Residue(19, 68)));
}

TEST(Residue, Inverse) {
  EXPECT_EQ(inverse(Residue(3, 14)).value(), 5);
  EXPECT_EQ(inverse(Residue(1, 9)).value(), 1);
  EXPECT_EQ(inverse(Residue(19, 68)).value(), 43);
  EXPECT_THROW(inverse(Residue(4, 14)), NonUnit);
}

TEST(Residue, MulOrder) {
  EXPECT_EQ(mul_order(Residue(5, 14)), 6);
  EXPECT_EQ(mul_order(Residue(1, 30)), 1);
  EXPECT_EQ(mul_order(Residue(19, 68)), 8);
}

TEST(Residue, GeomSum) {
  EXPECT_EQ(geom_sum(Residue(3, 14), 6).value(), 0);
  EXPECT_EQ(geom_sum(Residue(7, 10), 0).value(), 0);
  EXPECT_EQ(geom_sum(Residue(19, 68), 8).value(), 0);
}

TEST(Validate, Examples) {
  EXPECT_NO_THROW(validate(Family::EvenRadius, 6, 14, 3, 0));
  EXPECT_NO_THROW(validate(Family::EvenRadius, 8, 68, 19, 34));
  try {
    validate(Family::EvenRadius, 4, 8, 3, 1);
    FAIL() << "expected RelationFailed";
  } catch (const RelationFailed& e) {
    EXPECT_EQ(e.which(), "t(r-1)=0");
  }
  EXPECT_THROW(validate(Family::EvenRadius, 6, 14, 4, 0), NonUnit);
  EXPECT_THROW(validate(Family::EvenRadius, 5, 14, 3, 0), BadParity);
  EXPECT_THROW(validate(Family::OddRadius, 3, 8, 3, 0), BadParity);
  EXPECT_NO_THROW(validate(Family::OddRadius, 3, 7, 2, 0));
  EXPECT_NO_THROW(validate(Family::Metacirculant4, 4, 40, 3, 0));
}

TEST(Validate, ReducesAndCachesPowers) {
  ResidueParams p = validate(Family::EvenRadius, 6, 14, 17, 21);
  EXPECT_EQ(p.r, 3);
  EXPECT_EQ(p.t, 7);
  ASSERT_EQ(p.pw.size(), 6u);
  EXPECT_EQ(p.pw[5], 5);
  EXPECT_EQ(p.odd_power_sum(), 7);  // 3 + 13 + 5 = 21
  EXPECT_EQ(p.prefix_sum(0), 0);
  EXPECT_EQ(p.prefix_sum(3), 13);   // 1 + 3 + 9
}

TEST(Validate, FamilyNames) {
  EXPECT_EQ(family_from_string("even"), Family::EvenRadius);
  EXPECT_EQ(family_from_string("odd"), Family::OddRadius);
  EXPECT_EQ(family_from_string("meta"), Family::Metacirculant4);
  EXPECT_THROW(family_from_string("square"), ParseError);
}

namespace {

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST(ResidueProperty, InverseOrderAndGeomSum) {
  for (std::int64_t n = 2; n <= 90; ++n) {
    const std::int64_t phi = euler_phi(n);
    for (std::int64_t x = 0; x < n; ++x) {
      Residue rx(x, n);
      if (std::gcd(x, n) == 1) {
        ASSERT_EQ((rx * inverse(rx)).value(), 1 % n);
        ASSERT_EQ(phi % mul_order(rx), 0) << x << " mod " << n;
      }
      for (int k = 0; k < 9; ++k) {
        Residue lhs = geom_sum(rx, k) * (rx - Residue(1, n));
        Residue rhs = rx.pow(static_cast<std::uint64_t>(k)) - Residue(1, n);
        ASSERT_EQ(lhs.value(), rhs.value());
      }
    }
  }
}

TEST(ResidueProperty, ValidateMatchesDirectRelations) {
  for (int m : {4, 6}) {
    for (std::int64_t n = 4; n <= 30; n += 2) {
      for (std::int64_t r = 0; r < n; ++r) {
        for (std::int64_t t = 0; t < n; ++t) {
          // direct re-evaluation with plain integer loops
          bool unit = std::gcd(r, n) == 1;
          std::int64_t pw = 1, sum = 0;
          for (int i = 0; i < m; ++i) {
            sum += pw;
            pw = pw * r % n;
          }
          const bool ok = unit && pw == 1 % n && (t * (r - 1)) % n == 0 && (sum + 2 * t) % n == 0;
          bool accepted = true;
          try {
            validate(Family::EvenRadius, m, n, r, t);
          } catch (const Error&) {
            accepted = false;
          }
          ASSERT_EQ(accepted, ok) << m << "," << n << "," << r << "," << t;
        }
      }
    }
  }
}
