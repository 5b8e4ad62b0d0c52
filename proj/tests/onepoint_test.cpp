#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace wsg {
namespace {

LaurentPoly t(std::int64_t e, Integer c = 1) { return LaurentPoly::monomial(ExponentVec(e), c); }

std::vector<Integer> coefficients(const RationalGF& f, std::int64_t lo, std::int64_t hi) {
  std::vector<Integer> out;
  for (const auto& [m, c] : expand(f, Window(lo, hi))) out.push_back(c);
  return out;
}

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<Integer> indicator(const std::set<std::int64_t>& members, std::int64_t hi) {
  std::vector<Integer> out;
  for (std::int64_t n = 0; n <= hi; ++n) out.push_back(members.count(n) ? 1 : 0);
  return out;
}

TEST(NumericalSemigroup, Invariants) {
  auto s = NumericalSemigroup::from_generators({2, 3});
  EXPECT_EQ(s.gaps(), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(s.conductor(), 2);
  EXPECT_EQ(s.genus(), 1);
  auto t467 = NumericalSemigroup::from_generators({4, 6, 7});
  EXPECT_EQ(t467.gaps(), (std::vector<std::int64_t>{1, 2, 3, 5, 9}));
  EXPECT_EQ(t467.conductor(), 10);
  EXPECT_EQ(t467.genus(), 5);
  EXPECT_THROW(NumericalSemigroup::from_generators({2, 4}), InvalidSemigroup);
  EXPECT_THROW(NumericalSemigroup::from_generators({}), InvalidSemigroup);
  EXPECT_THROW(NumericalSemigroup::from_generators({0, 3}), InvalidSemigroup);
  auto n = NumericalSemigroup::from_generators({1});
  EXPECT_EQ(n.conductor(), 0);
  EXPECT_EQ(n.genus(), 0);
}

TEST(NumericalSemigroup, MembershipMatchesClosure) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto gens = testing::random_generators(rng, 25);
    const auto s = NumericalSemigroup::from_generators(gens);
    const std::int64_t hi = 3 * s.conductor() + 5;
    const auto ref = testing::closure_bfs(gens, hi);
    for (std::int64_t k = 0; k <= hi; ++k) EXPECT_EQ(s.contains(k), ref.count(k) > 0) << k;
    EXPECT_EQ(static_cast<std::int64_t>(s.gaps().size()), s.genus());
  }
}

TEST(NumericalSemigroup, Symmetry) {
  EXPECT_TRUE(is_symmetric(NumericalSemigroup::from_generators({2, 3})));
  EXPECT_TRUE(is_symmetric(NumericalSemigroup::from_generators({4, 6, 7})));
  EXPECT_FALSE(is_symmetric(NumericalSemigroup::from_generators({3, 4, 5})));
}

TEST(DeltaSequence, GcdChain) {
  auto a = DeltaSequence::from_generators({2, 3});
  EXPECT_EQ(a.theta(), (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(a.d(), (std::vector<std::int64_t>{2}));
  auto b = DeltaSequence::from_generators({4, 6, 7});
  EXPECT_EQ(b.theta(), (std::vector<std::int64_t>{4, 2, 1}));
  EXPECT_EQ(b.d(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_THROW(DeltaSequence::from_generators({4, 6}), InvalidSemigroup);
  EXPECT_THROW(DeltaSequence::from_generators({4, 8, 7}), NotStrictlyGenerated);
  EXPECT_EQ(DeltaSequence::from_generators({1}).h(), 0u);
}

TEST(Poincare, DirectForm) {
  const auto p23 = poincare_direct(NumericalSemigroup::from_generators({2, 3}));
  EXPECT_TRUE(equivalent(p23, RationalGF(t(0) - t(1) + t(2), {ExponentVec(1)})));
  EXPECT_EQ(coefficients(p23, 0, 4), ints({1, 0, 1, 1, 1}));
  const auto p25 = poincare_direct(NumericalSemigroup::from_generators({2, 5}));
  EXPECT_TRUE(equivalent(p25, RationalGF(t(0) - t(1) + t(2) - t(3) + t(4), {ExponentVec(1)})));
  EXPECT_TRUE(equivalent(poincare_direct(NumericalSemigroup::from_generators({1})),
                         RationalGF(t(0), {ExponentVec(1)})));
}

TEST(Poincare, DirectIsIndicatorOnFixedAndRandomSemigroups) {
  std::vector<std::vector<std::int64_t>> corpus{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 6, 7}};
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) corpus.push_back(testing::random_generators(rng, 25));
  for (const auto& gens : corpus) {
    const auto s = NumericalSemigroup::from_generators(gens);
    ASSERT_LE(s.genus(), 25);
    const std::int64_t hi = 3 * s.conductor();
    EXPECT_EQ(coefficients(poincare_direct(s), 0, hi), indicator(testing::closure_bfs(gens, hi), hi));
  }
}

TEST(Poincare, DeltaProduct) {
  const auto f23 = poincare_delta_product(DeltaSequence::from_generators({2, 3}));
  EXPECT_TRUE(equivalent(f23, RationalGF(t(0) - t(6), {ExponentVec(2), ExponentVec(3)})));
  EXPECT_EQ(coefficients(f23, 0, 8), ints({1, 0, 1, 1, 1, 1, 1, 1, 1}));
  const auto f467 = poincare_delta_product(DeltaSequence::from_generators({4, 6, 7}));
  EXPECT_TRUE(equivalent(f467, RationalGF((t(0) - t(12)) * (t(0) - t(14)),
                                          {ExponentVec(4), ExponentVec(6), ExponentVec(7)})));
  EXPECT_EQ(coefficients(f467, 0, 12), ints({1, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1}));
  EXPECT_TRUE(equivalent(poincare_delta_product(DeltaSequence::from_generators({1})),
                         RationalGF(t(0), {ExponentVec(1)})));
}

TEST(Poincare, DeltaProductIsIndicator) {
  for (const auto& r : std::vector<std::vector<std::int64_t>>{{2, 3}, {2, 5}, {4, 6, 7}, {8, 12, 14, 15}}) {
    const auto seq = DeltaSequence::from_generators(r);
    const std::int64_t hi = 2 * seq.semigroup().conductor();
    EXPECT_EQ(coefficients(poincare_delta_product(seq), 0, hi), indicator(testing::closure_bfs(r, hi), hi));
  }
}

TEST(OnePoint, EmptyExtrasReduceToDeltaProduct) {
  OnePointSemigroup g(DeltaSequence::from_generators({2, 3}), {});
  for (auto mode : {OnePointMode::finite_sum, OnePointMode::paper_product}) {
    const auto out = poincare_onepoint(g, mode);
    EXPECT_TRUE(equivalent(out.series, poincare_delta_product(g.base())));
    EXPECT_TRUE(out.comparison.agree);
    EXPECT_EQ(coefficients(out.series, 0, 6), ints({1, 0, 1, 1, 1, 1, 1}));
  }
}

TEST(OnePoint, FiniteSumIsIndicatorAndProductDiffers) {
  OnePointSemigroup g(DeltaSequence::from_generators({4, 6, 7}), {9});
  EXPECT_EQ(g.semigroup().genus(), 4);
  const auto finite = poincare_onepoint(g, OnePointMode::finite_sum);
  const std::int64_t hi = finite.comparison.window_hi;
  std::set<std::int64_t> members;
  for (std::int64_t n = 0; n <= hi; ++n)
    if (g.semigroup().contains(n)) members.insert(n);
  EXPECT_EQ(coefficients(finite.series, 0, hi), indicator(members, hi));
  EXPECT_FALSE(finite.comparison.agree);
  EXPECT_EQ(finite.comparison.window_hi, 25);
  EXPECT_EQ(finite.comparison.disagreements, (std::vector<std::int64_t>{18}));
  const auto product = poincare_onepoint(g, OnePointMode::paper_product);
  const auto c = coefficients(product.series, 0, hi);
  EXPECT_EQ(c[9], 1);
  EXPECT_EQ(c[18], 2);
  EXPECT_EQ(c[0], 1);
}

TEST(OnePoint, RejectsBadExtras) {
  auto base = DeltaSequence::from_generators({2, 3});
  EXPECT_THROW(OnePointSemigroup(base, {2}), InvalidSemigroup);
  EXPECT_THROW(OnePointSemigroup(base, {-1}), InvalidSemigroup);
}

TEST(LPolynomial, DirectAndPublishedForms) {
  EXPECT_EQ(l_polynomial(NumericalSemigroup::from_generators({2, 3}), LMode::direct), t(0) - t(1) + t(2));
  const auto s25 = NumericalSemigroup::from_generators({2, 5});
  EXPECT_EQ(l_polynomial(s25, LMode::direct), t(0) - t(1) + t(2) - t(3) + t(4));
  EXPECT_EQ(l_polynomial(s25, LMode::paper), t(0, 2) - t(1, 2) + t(2) - t(3) + t(4));
  const auto cmp = compare_l_forms(s25);
  EXPECT_TRUE(cmp.differ);
  EXPECT_EQ(cmp.difference, t(0) - t(1));
  EXPECT_EQ(l_polynomial(NumericalSemigroup::from_generators({1}), LMode::direct), t(0));
}

TEST(LPolynomial, PalindromicForSymmetricSemigroups) {
  std::mt19937_64 rng(99);
  std::vector<std::vector<std::int64_t>> corpus{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 6, 7}, {8, 12, 14, 15}};
  for (int i = 0; i < 200; ++i) corpus.push_back(testing::random_generators(rng, 25));
  int symmetric = 0;
  for (const auto& gens : corpus) {
    const auto s = NumericalSemigroup::from_generators(gens);
    if (!is_symmetric(s)) {
      EXPECT_THROW(functional_equation_sign(s), NotSymmetric);
      continue;
    }
    ++symmetric;
    const LaurentPoly l = l_polynomial(s, LMode::direct);
    EXPECT_EQ(l.max_exponent(), ExponentVec(2 * s.genus()));
    EXPECT_EQ(l, l.reciprocal().shifted(ExponentVec(2 * s.genus())));
    const auto signs = functional_equation_sign(s);
    EXPECT_EQ(signs.eps_l, std::optional<int>(+1));
    EXPECT_EQ(signs.eps_p, std::optional<int>(-1));
    EXPECT_FALSE(signs.matches_published());
  }
  EXPECT_GE(symmetric, 6);
}

TEST(LPolynomial, ReflectionIdentityByEvaluation) {
  const auto s = NumericalSemigroup::from_generators({3, 5});
  const auto p = poincare_direct(s);
  const std::int64_t k = 2 * s.genus() - 1;
  for (Rational x : {Rational(2), Rational(1, 3), Rational(-5, 7)})
    EXPECT_EQ(evaluate(p, {x}), -detail::rational_pow(x, k) *
                                    evaluate(p, {Rational(1) / x}));
}

TEST(LPolynomial, NonSymmetricThrows) {
  EXPECT_THROW(functional_equation_sign(NumericalSemigroup::from_generators({3, 4, 5})), NotSymmetric);
}

}  // namespace
}  // namespace wsg
