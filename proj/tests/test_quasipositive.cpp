#include <gtest/gtest.h>

#include <chrono>

#include "bridgetri/quasipositive.hpp"
#include "support/generators.hpp"

using namespace bridgetri;

namespace {

Factorization two_sigma1() { return Factorization{2, {make_band(BraidWord(2)), make_band(BraidWord(2))}}; }

}  // namespace

TEST(Expand, Examples) {
  EXPECT_EQ(expand(two_sigma1()).letters(), (std::vector<int>{1, 1}));
  const Factorization f{3, {make_band(BraidWord(3, {1, 2}))}};
  EXPECT_EQ(expand(f).letters(), (std::vector<int>{1, 2, 1, -2, -1}));
  EXPECT_TRUE(expand(Factorization{1, {}}).empty());
}

TEST(Expand, RejectsStrandMismatch) {
  Factorization f{3, {make_band(BraidWord(2))}};
  EXPECT_THROW(expand(f), std::invalid_argument);
}

TEST(MakeBand, RejectsBadExponentAndSign) {
  EXPECT_THROW(make_band(BraidWord(2), 0), std::invalid_argument);
  EXPECT_THROW(make_band(BraidWord(2), 1, 2), std::invalid_argument);
  EXPECT_EQ(make_band(BraidWord(3, {1, -1, 2})).conjugator.letters(), (std::vector<int>{2}));
}

TEST(Validate, TwoSigma1) {
  const ValidationReport r = validate(two_sigma1());
  EXPECT_TRUE(r.product_ok);
  EXPECT_TRUE(r.sum_ok);
  ASSERT_TRUE(r.count_ok.has_value());
  EXPECT_TRUE(*r.count_ok);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.drawable());
}

TEST(Validate, SingleFactorFails) {
  const ValidationReport r = validate(Factorization{2, {make_band(BraidWord(2))}});
  EXPECT_FALSE(r.product_ok);
  EXPECT_FALSE(r.sum_ok);
  EXPECT_FALSE(r.valid());
}

TEST(Validate, EmptyFactorListFails) {
  EXPECT_FALSE(validate(Factorization{2, {}}).product_ok);
  EXPECT_TRUE(validate(Factorization{1, {}}).valid());
}

TEST(Validate, StandardFactorizations) {
  for (int d = 2; d <= 6; ++d) {
    const Factorization f = standard_factorization(d);
    const ValidationReport r = validate(f);
    EXPECT_TRUE(r.valid()) << d;
    EXPECT_EQ(static_cast<int>(r.factor_count), d * d - d);
    EXPECT_EQ(r.exponent_total, d * (d - 1));
    EXPECT_TRUE(testgen::oracle_same(expand(f), full_twist(d))) << d;
  }
  const ValidationReport r3 = validate(standard_factorization(3));
  EXPECT_EQ(r3.factor_count, 6u);
  EXPECT_EQ(r3.exponent_total, 6);
}

TEST(StandardFactorization, Shape) {
  const Factorization f2 = standard_factorization(2);
  ASSERT_EQ(f2.size(), 2u);
  for (const auto& b : f2.factors) EXPECT_TRUE(b.conjugator.empty());
  EXPECT_EQ(standard_factorization(5).size(), 20u);
  EXPECT_EQ(standard_factorization(5).signed_exponent_total(), 20);
  EXPECT_THROW(standard_factorization(1), std::invalid_argument);
}

TEST(CascadeConjugator, ConjugatesSigma1ToSigmaI) {
  for (int d = 2; d <= 7; ++d)
    for (int i = 1; i < d; ++i) {
      const BraidWord c = cascade_conjugator(d, i);
      EXPECT_EQ(static_cast<int>(c.length()), 2 * (i - 1));
      EXPECT_TRUE(equal(compose({c, BraidWord(d, {1}), invert(c)}), BraidWord(d, {i})));
    }
}

TEST(SingularFactor, Examples) {
  EXPECT_EQ(singular_factor(BraidWord(2), 2, +1).expanded().letters(), (std::vector<int>{1, 1}));
  const Factorization cusp{2, {singular_factor(BraidWord(2), 2, +1)}};
  const ValidationReport r = validate(cusp);
  EXPECT_TRUE(r.sum_ok);
  EXPECT_TRUE(r.product_ok);
  EXPECT_FALSE(r.count_ok.has_value());
  EXPECT_FALSE(r.smooth);
}

TEST(SingularFactor, CuspFactorizationInThreeStrands) {
  // s1 * (s2 s1^2 s2^-1) * s2 * s2 * s1: five bands, one of them a cusp
  const Factorization f{3,
                        {make_band(BraidWord(3)), singular_factor(BraidWord(3, {2}), 2, +1),
                         make_band(BraidWord(3, {1, 2})), make_band(BraidWord(3, {1, 2})), make_band(BraidWord(3))}};
  const ValidationReport r = validate(f);
  EXPECT_TRUE(r.product_ok);
  EXPECT_TRUE(r.sum_ok);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(testgen::oracle_same(expand(f), full_twist(3)));
}

TEST(SingularFactor, NegativeBandIsValidButNotDrawable) {
  // s1^3 * s1^-1 in B2
  const Factorization f{2, {singular_factor(BraidWord(2), 3, +1), singular_factor(BraidWord(2), 1, -1)}};
  const ValidationReport r = validate(f);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.negative_factors, 1u);
  EXPECT_FALSE(r.drawable());
}

TEST(Hurwitz, TrivialOnEqualCommutingFactors) {
  const Factorization f = two_sigma1();
  const Factorization g = hurwitz_move(f, 0, HurwitzDirection::kRight);
  for (const auto& b : g.factors) EXPECT_TRUE(equal(b.expanded(), BraidWord(2, {1})));
  EXPECT_TRUE(equal(expand(g), expand(f)));
  EXPECT_THROW(hurwitz_move(f, 1, HurwitzDirection::kRight), std::out_of_range);
}

TEST(Hurwitz, LeftUndoesRight) {
  const Factorization f = standard_factorization(4);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const Factorization g =
        hurwitz_move(hurwitz_move(f, i, HurwitzDirection::kLeft), i, HurwitzDirection::kRight);
    EXPECT_EQ(canonical_form(g), canonical_form(f));
  }
}

TEST(Hurwitz, RandomMovesPreserveProduct) {
  testgen::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 4;
    Factorization f = standard_factorization(d);
    const int moves = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int m = 0; m < moves; ++m) {
      const auto i = std::uniform_int_distribution<std::size_t>(0, f.size() - 2)(rng);
      const Factorization g =
          hurwitz_move(f, i, std::bernoulli_distribution(0.5)(rng) ? HurwitzDirection::kRight : HurwitzDirection::kLeft);
      ASSERT_TRUE(equal(expand(g), expand(f)));
      f = g;
    }
    EXPECT_TRUE(testgen::oracle_same(expand(f), full_twist(d)));
  }
}

TEST(Hurwitz, ShortenedConjugatorGivesSameBand) {
  testgen::Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 5;
    const BraidWord g = testgen::random_word(rng, d, 20);
    const BraidWord s = shorten_conjugator(g);
    EXPECT_LE(s.length(), free_reduce(g).length());
    const BraidWord s1(d, {1});
    EXPECT_TRUE(equal(compose({g, s1, invert(g)}), compose({s, s1, invert(s)})));
  }
}

TEST(Orbit, TwoSigma1IsAFixedPoint) {
  const OrbitResult r = hurwitz_orbit(two_sigma1(), 1000);
  EXPECT_EQ(r.members.size(), 1u);
  EXPECT_FALSE(r.truncated);
}

TEST(Orbit, SmallFiniteOrbits) {
  const BraidWord e(3), c(3, {1, 2});
  EXPECT_EQ(hurwitz_orbit(Factorization{3, {make_band(e), make_band(c)}}, 1000).members.size(), 3u);
  const OrbitResult r = hurwitz_orbit(Factorization{3, {make_band(e), make_band(c), make_band(e)}}, 1000);
  EXPECT_FALSE(r.truncated);
  EXPECT_EQ(r.members.size(), 8u);
}

TEST(Orbit, SameSetFromAnyMember) {
  const BraidWord e(3), c(3, {1, 2});
  const Factorization f{3, {make_band(e), make_band(c), make_band(e)}};
  const OrbitResult a = hurwitz_orbit(f, 1000);
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    for (auto dir : {HurwitzDirection::kRight, HurwitzDirection::kLeft})
      EXPECT_EQ(hurwitz_orbit(hurwitz_move(f, i, dir), 1000).members, a.members);
}

TEST(Orbit, IndependentOfWorkerCount) {
  const Factorization f = standard_factorization(3);
  const OrbitResult one = hurwitz_orbit(f, 1500, 1);
  const OrbitResult three = hurwitz_orbit(f, 1500, 3);
  EXPECT_EQ(one.members, three.members);
  EXPECT_EQ(one.levels, three.levels);
  EXPECT_EQ(one.truncated, three.truncated);
}

TEST(Orbit, StandardThreeStrandRegression) {
  // The orbit does not close up within a budget of 10^5; the search stops after 19
  // levels, keeping the canonically smallest members of the last level.
  const auto t0 = std::chrono::steady_clock::now();
  const OrbitResult r = hurwitz_orbit(standard_factorization(3), 100000);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.members.size(), 100000u);
  EXPECT_EQ(r.levels, 19u);
  EXPECT_LT(seconds, 120.0);
  for (std::size_t k = 0; k < r.representatives.size(); k += 997)
    EXPECT_TRUE(equal(expand(r.representatives[k]), full_twist(3)));
}
