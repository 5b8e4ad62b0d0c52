#include <gtest/gtest.h>

#include "support.hpp"

namespace wsg {
namespace {

using oracle::Family;
using oracle::Fixture;

TEST(Oracle, EllMatchesReference) {
  for (const auto& f : testing::all_fixtures())
    for (auto m : testing::points_of(Window(-7, 7, -7, 7)))
      ASSERT_EQ(oracle::ell(f, m), testing::ell_reference(f.family == Family::elliptic, f.period, m))
          << f.name() << " " << to_string(m);
}

TEST(Oracle, FixtureStrips) {
  EXPECT_EQ(oracle::semigroup_from_fixture(Fixture::projective_line()), TwoPointSemigroup::from_strip(0, 1, {}));
  EXPECT_EQ(oracle::semigroup_from_fixture(Fixture::elliptic(2)),
            TwoPointSemigroup::from_strip(1, 2, {{true, false}, {false, false}}));
  EXPECT_EQ(oracle::semigroup_from_fixture(Fixture::elliptic(1)), TwoPointSemigroup::from_strip(1, 1, {{true}, {false}}));
  EXPECT_THROW(Fixture::elliptic(0), InputError);
}

TEST(Oracle, MembershipIsNonGap) {
  for (const auto& f : testing::all_fixtures()) {
    const auto s = oracle::semigroup_from_fixture(f);
    for (auto m : testing::points_of(Window(-6, 6, -6, 6)))
      EXPECT_EQ(s.contains(m), oracle::is_nongap(f, m)) << f.name() << " " << to_string(m);
  }
}

TEST(Oracle, JumpMatchesRiemannRoch) {
  for (const auto& f : testing::realizable_fixtures()) {
    const auto s = oracle::semigroup_from_fixture(f);
    for (auto m : testing::points_of(Window(-6, 6, -6, 6))) {
      EXPECT_EQ(dim_jump(s, m), oracle::d_oracle(f, m)) << f.name() << " " << to_string(m);
      EXPECT_EQ(dim_jump(s, m), dim_jump_transposed(s, m)) << f.name() << " " << to_string(m);
    }
  }
}

// With period 1 the closed-form ell admits a function with divisor P2 - P1
// (so (1,-1) is a non-gap) while ell(1,0) = ell(0,0) = 1; no curve has this
// dimension function, and the jump disagrees exactly on sums 1 and 2.
TEST(Oracle, PeriodOneEllipticIsInconsistent) {
  const auto f = Fixture::elliptic(1);
  const auto s = oracle::semigroup_from_fixture(f);
  EXPECT_TRUE(s.contains({1, -1}));
  EXPECT_EQ(oracle::ell(f, {1, 0}), oracle::ell(f, {0, 0}));
  for (auto m : testing::points_of(Window(-6, 6, -6, 6))) {
    const bool differ = dim_jump(s, m) != oracle::d_oracle(f, m);
    EXPECT_EQ(differ, m.sum() == 1 || m.sum() == 2) << to_string(m);
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle::ell(Fixture::projective_line(), {3, -1}), 3);
  EXPECT_EQ(oracle::ell(Fixture::elliptic(2), {0, 0}), 1);
  EXPECT_EQ(oracle::ell(Fixture::elliptic(2), {1, -1}), 0);
  EXPECT_EQ(oracle::d_oracle(Fixture::elliptic(2), {2, 0}), 2);
  EXPECT_EQ(oracle::d_oracle(Fixture::projective_line(), {0, 0}), 1);
  const auto e = Fixture::elliptic(2);
  EXPECT_TRUE(oracle::is_nongap(e, {1, 1}));
  EXPECT_FALSE(oracle::is_nongap(e, {1, 0}));
  EXPECT_EQ(oracle::d_oracle(e, {1, 0}), 1);
  EXPECT_EQ(oracle::d_oracle(e, {1, 1}), 1);
  EXPECT_EQ(oracle::d_oracle(Fixture::projective_line(), {2, 0}), 2);
  EXPECT_EQ(oracle::d_oracle(Fixture::projective_line(), {-3, -4}), 0);
}

TEST(Oracle, NablaVariantDisagreesOnElliptic) {
  const auto f = Fixture::elliptic(2);
  const auto s = oracle::semigroup_from_fixture(f);
  for (auto m : testing::points_of(Window(-6, 6, -6, 6))) {
    const bool differ = dim_nabla(s, m) != oracle::d_oracle(f, m);
    EXPECT_EQ(differ, m.sum() == 1) << to_string(m);
  }
}

}  // namespace
}  // namespace wsg
