#include "lantern/series.hpp"

#include <gtest/gtest.h>

#include "lantern/errors.hpp"
#include "support/test_support.hpp"

namespace lantern {
namespace {

using testing::random_word;
using testing::single;

constexpr std::size_t kAlpha = 0, kBeta = 1, kGamma = 2, kTheta1 = 3, kTheta2 = 4,
                      kTheta3 = 5;

Word w2(std::vector<Letter> raw) { return Word::reduce(2, raw); }

NcSeries var(const std::shared_ptr<const VariableContext>& ctx, int cap, std::size_t i) {
  return NcSeries::variable(ctx, cap, i);
}

Rational coeff(const NcSeries& s, std::vector<std::uint16_t> idx) {
  return s.coefficient(NcSeries::monomial(s.context(), idx));
}

// Coefficient of xi_{m[0]}..xi_{m[k-1]} in the Magnus image of a word, by
// splitting the monomial into one run per letter: a positive letter takes
// a run of length 0 or 1 of its own variable, a negative letter any run r
// of its own variable with sign (-1)^r.
Rational magnus_oracle(const std::vector<Letter>& word, const std::vector<std::uint16_t>& m,
                       std::size_t li = 0, std::size_t mi = 0) {
  if (li == word.size()) return mi == m.size() ? Rational(1) : Rational(0);
  const Letter l = word[li];
  const auto v = static_cast<std::uint16_t>(std::abs(l) - 1);
  Rational total = magnus_oracle(word, m, li + 1, mi);
  Rational sign = 1;
  for (std::size_t r = 1; mi + r <= m.size() && m[mi + r - 1] == v; ++r) {
    if (l > 0 && r > 1) break;
    sign = l > 0 ? Rational(1) : -sign;
    total += sign * magnus_oracle(word, m, li + 1, mi + r);
  }
  return total;
}

TEST(Series, OnePlusTimesOneMinus) {
  const auto ctx = free_context(1);
  const NcSeries one = NcSeries::one(ctx, 2);
  const NcSeries x = var(ctx, 2, 0);
  EXPECT_EQ((one + x) * (one - x), one - x * x);
  EXPECT_EQ(((one + x) * (one - x)).to_string(), "1 - ξ1^2");
}

TEST(Series, NoncommutingProductKeepsOrder) {
  const auto ctx = p3_context();
  const NcSeries one = NcSeries::one(ctx, 2);
  const NcSeries p = (one + var(ctx, 2, kAlpha)) * (one + var(ctx, 2, kBeta));
  EXPECT_EQ(p.to_string(), "1 + α + β + αβ");
  EXPECT_EQ(coeff(p, {kAlpha, kBeta}), 1);
  EXPECT_EQ(coeff(p, {kBeta, kAlpha}), 0);
}

TEST(Series, CentralVariablesCommute) {
  const auto ctx = p3_context();
  const NcSeries a = var(ctx, 3, kAlpha);
  const NcSeries g = var(ctx, 3, kGamma);
  EXPECT_EQ(a * g, g * a);
  EXPECT_EQ((a * g).terms().size(), 1u);
  EXPECT_EQ(NcSeries::monomial(*ctx, {kGamma, kAlpha, kTheta1}).key,
            (std::vector<std::uint16_t>{kAlpha, kGamma, kTheta1}));
}

TEST(Series, TruncationAndNoZeroTerms) {
  const auto ctx = free_context(2);
  const NcSeries x = var(ctx, 2, 0);
  EXPECT_TRUE((x * x * x).is_zero());
  const NcSeries d = x - x;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.to_string(), "0");
}

TEST(Series, ContextMismatch) {
  EXPECT_THROW(var(free_context(1), 2, 0) + var(free_context(2), 2, 0), MismatchError);
  EXPECT_THROW(var(free_context(1), 2, 0) * var(free_context(1), 3, 0), MismatchError);
  EXPECT_THROW(NcSeries(free_context(1), -1), std::invalid_argument);
}

TEST(Series, InverseGeometric) {
  const auto ctx = free_context(1);
  const NcSeries one = NcSeries::one(ctx, 3);
  const NcSeries x = var(ctx, 3, 0);
  EXPECT_EQ(series_inv(one + x).to_string(), "1 - ξ1 + ξ1^2 - ξ1^3");
  EXPECT_EQ(series_inv(one), one);
}

TEST(Series, InverseMultipliesBack) {
  const auto ctx = p3_context();
  const NcSeries s = NcSeries::one(ctx, 4) + var(ctx, 4, kAlpha) + var(ctx, 4, kBeta);
  EXPECT_EQ(series_inv(s) * s, NcSeries::one(ctx, 4));
  EXPECT_EQ(s * series_inv(s), NcSeries::one(ctx, 4));
}

TEST(Series, InverseNeedsUnitConstant) {
  const auto ctx = free_context(1);
  EXPECT_THROW(series_inv(var(ctx, 3, 0)), std::domain_error);
  EXPECT_THROW(series_inv(NcSeries::constant(ctx, 3, 2)), std::domain_error);
}

TEST(Series, FractionsPrintInParentheses) {
  const auto ctx = free_context(1);
  NcSeries s = unit_power(ctx, 2, 0, -1);
  s *= Rational(1, 2);
  EXPECT_EQ(s.to_string(), "1/2 - (1/2)ξ1 + (1/2)ξ1^2");
}

TEST(Series, UnitPowerMatchesRepeatedProduct) {
  const auto ctx = p3_context();
  const NcSeries base = NcSeries::one(ctx, 5) + var(ctx, 5, kTheta2);
  NcSeries p = NcSeries::one(ctx, 5);
  for (int e = 0; e <= 4; ++e) {
    EXPECT_EQ(unit_power(ctx, 5, kTheta2, e), p);
    EXPECT_EQ(unit_power(ctx, 5, kTheta2, -e), series_inv(p));
    p = p * base;
  }
}

TEST(Series, AssociativeAndDistributive) {
  std::mt19937_64 rng(testing::kSeed + 20);
  const auto ctx = p3_context();
  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  std::uniform_int_distribution<int> var_dist(0, 5);
  std::uniform_int_distribution<int> len_dist(0, 3);
  auto random_series = [&] {
    NcSeries s(ctx, 5);
    for (int t = 0; t < 6; ++t) {
      std::vector<std::uint16_t> idx(len_dist(rng));
      for (auto& i : idx) i = static_cast<std::uint16_t>(var_dist(rng));
      s.add_term(NcSeries::monomial(*ctx, idx), coeff_dist(rng));
    }
    return s;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const NcSeries a = random_series(), b = random_series(), c = random_series();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(LowestDegree, Examples) {
  const auto ctx = free_context(2);
  EXPECT_EQ(lowest_degree(NcSeries(ctx, 3)), kInfiniteDegree);
  EXPECT_EQ(lowest_degree(obar(w2({1, 2}), 2)), 1);
  const NcSeries d = obar(w2({1, 2}), 3) - obar(w2({1}), 3) - obar(w2({2}), 3);
  EXPECT_EQ(lowest_degree(d), 2);
}

TEST(Magnus, FreeExamples) {
  EXPECT_EQ(magnus_free(w2({1}), 1).to_string(), "1 + ξ1");
  EXPECT_EQ(magnus_free(w2({-1}), 2).to_string(), "1 - ξ1 + ξ1^2");
  EXPECT_EQ(magnus_free(w2({1, 2}), 2).to_string(), "1 + ξ1 + ξ2 + ξ1ξ2");
  EXPECT_THROW(magnus_free(w2({1}), -1), std::invalid_argument);
}

TEST(Magnus, MatchesSegmentOracle) {
  std::mt19937_64 rng(testing::kSeed + 21);
  const int cap = 4;
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, 2, 10);
    const std::vector<Letter> letters = testing::letters(w);
    const NcSeries s = magnus_free(w, cap);
    for (int d = 0; d <= cap; ++d) {
      for (int code = 0; code < (1 << d); ++code) {
        std::vector<std::uint16_t> m(d);
        for (int k = 0; k < d; ++k) m[k] = (code >> k) & 1;
        ASSERT_EQ(coeff(s, m), magnus_oracle(letters, m)) << w.to_string();
      }
    }
  }
}

TEST(Magnus, Multiplicative) {
  std::mt19937_64 rng(testing::kSeed + 22);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = random_word(rng, 2, 12);
    const Word v = random_word(rng, 2, 12);
    ASSERT_EQ(magnus_free(u * v, 4), magnus_free(u, 4) * magnus_free(v, 4));
  }
}

TEST(Magnus, FaithfulnessWitnessOnShortWords) {
  // Evidence only: no nonempty reduced word of length <= 8 maps to 1.
  std::mt19937_64 rng(testing::kSeed + 23);
  const NcSeries one = NcSeries::one(free_context(2), 8);
  int checked = 0;
  while (checked < 300) {
    const Word w = random_word(rng, 2, 8);
    if (w.empty()) continue;
    ASSERT_NE(magnus_free(w, 8), one) << w.to_string();
    ++checked;
  }
}

TEST(Magnus, P3Examples) {
  EXPECT_EQ(magnus_p3(single(GeneratorKind::kFrame, {1}), 1).to_string(), "1 + θ1");
  EXPECT_EQ(magnus_p3(single(GeneratorKind::kBandTwist, {1, 2}), 2).to_string(),
            "1 + α + θ1 + θ2 + αθ1 + αθ2 + θ1θ2");
  EXPECT_EQ(magnus_p3(single(GeneratorKind::kBandTwist, {2, 3}), 1).to_string(),
            "1 - α - β + γ + θ2 + θ3");
  EXPECT_EQ(magnus_p3(single(GeneratorKind::kBandTwist, {1, 2, 3}), 1).to_string(),
            "1 + γ + θ1 + θ2 + θ3");
  EXPECT_THROW(magnus_p3(single(GeneratorKind::kArtin, {1}), 2), UnsupportedError);
}

TEST(Magnus, P3MultiplicativeOnWords) {
  std::mt19937_64 rng(testing::kSeed + 24);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord u = testing::random_p3_word(rng, 6);
    const BraidWord v = testing::random_p3_word(rng, 6);
    const NcSeries product = magnus_p3(u, 3) * magnus_p3(v, 3);
    u.insert(u.end(), v.begin(), v.end());
    ASSERT_EQ(magnus_p3(u, 3), product);
  }
}

TEST(Obar, Examples) {
  EXPECT_TRUE(obar(Word(2), 3).is_zero());
  EXPECT_EQ(obar(w2({1}), 2).to_string(), "-ξ1");
  EXPECT_EQ(obar(w2({1, 2}), 2).to_string(), "-ξ1 - ξ2 - ξ1ξ2");
}

TEST(Obar, ConstantTermVanishes) {
  std::mt19937_64 rng(testing::kSeed + 25);
  for (int trial = 0; trial < 200; ++trial) {
    ASSERT_EQ(obar(random_word(rng, 2, 16), 3).constant_term(), 0);
    ASSERT_EQ(obar(testing::random_p3_word(rng, 10), 3).constant_term(), 0);
  }
}

TEST(Congruence, ObarProductExample) {
  const auto [lhs, rhs] = obar_product_sides(w2({1, 2}), w2({-2, 1}));
  const CongruenceReport r = check_congruence(lhs, rhs, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lowest_discrepancy_degree, 2);
}

TEST(Congruence, ObarProductOnRandomPairs) {
  std::mt19937_64 rng(testing::kSeed + 26);
  for (int trial = 0; trial < 200; ++trial) {
    const Word a = random_word(rng, 2, 12);
    const Word b = random_word(rng, 2, 12);
    const auto [lhs, rhs] = obar_product_sides(a, b);
    const CongruenceReport r = check_congruence(lhs, rhs, 2, 4);
    ASSERT_TRUE(r.holds);
    ASSERT_TRUE(r.lowest_discrepancy_degree == kInfiniteDegree ||
                r.lowest_discrepancy_degree >= 2);
  }
}

TEST(Congruence, BandIdentityModuloSquare) {
  const auto [lhs, rhs] = band_congruence_sides();
  const CongruenceReport r = check_congruence(lhs, rhs, 2, 4);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.examined_cap, 4);
}

TEST(Congruence, BandIdentityDiscrepancyMatchesGolden) {
  const nlohmann::json golden = testing::load_json("golden/eq2_discrepancy.json");
  const auto [lhs, rhs] = band_congruence_sides();
  const CongruenceReport r = check_congruence(lhs, rhs, 2, golden["cap"].get<int>());
  EXPECT_EQ(r.lowest_discrepancy_degree, golden["lowest_discrepancy_degree"].get<int>());
  const NcSeries part = r.difference.homogeneous_part(2);
  ASSERT_EQ(part.terms().size(), golden["degree2_terms"].size());
  std::size_t k = 0;
  for (const auto& [m, c] : part.terms()) {
    const auto& row = golden["degree2_terms"][k++];
    EXPECT_EQ(part.monomial_names(m), row[0].get<std::vector<std::string>>());
    EXPECT_EQ(c, Rational(row[1].get<long>(), row[2].get<long>()));
  }
}

TEST(Congruence, EveryObarLiesInTheIdeal) {
  GroupRingExpr lhs = GroupRingExpr::p3();
  lhs.add_obar(1, single(GeneratorKind::kBandTwist, {1, 2, 3}));
  GroupRingExpr rhs = GroupRingExpr::p3();
  rhs.add_obar(1, single(GeneratorKind::kBandTwist, {1, 2}));
  EXPECT_TRUE(check_congruence(lhs, rhs, 1).holds);
  EXPECT_FALSE(check_congruence(lhs, rhs, 2).holds);
}

TEST(Congruence, Errors) {
  const auto [lhs, rhs] = obar_product_sides(w2({1}), w2({2}));
  EXPECT_THROW(check_congruence(lhs, rhs, 0), std::invalid_argument);
  EXPECT_THROW(check_congruence(lhs, GroupRingExpr::p3(), 2), MismatchError);
}

TEST(GroupRing, Printing) {
  GroupRingExpr e = GroupRingExpr::free(2);
  e.add_obar(1, w2({1, 2}));
  e.add(Rational(-1, 2), w2({2}));
  e.add_identity(3);
  const NcSeries s = expand(e, 1);
  EXPECT_EQ(s.constant_term(), Rational(5, 2));
  EXPECT_EQ(coeff(s, {0}), -1);
  EXPECT_EQ(coeff(s, {1}), Rational(-3, 2));
}

TEST(LemmaInverse, ExactAtEveryCap) {
  for (int cap = 0; cap <= 8; ++cap) {
    const InverseIdentityReport r = verify_lemma_inverse(cap);
    EXPECT_TRUE(r.holds) << cap;
    EXPECT_EQ(r.lhs, r.rhs);
  }
  EXPECT_EQ(verify_lemma_inverse(0).lhs.to_string(), "1");
}

TEST(CompletedIdentity, BothRoutesForThreeStrands) {
  const CompletedIdentityReport r = verify_completed_identity(3, 4);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.group_route);
  ASSERT_TRUE(r.series_route.has_value());
  EXPECT_TRUE(*r.series_route);
  EXPECT_TRUE(r.frame_twists_central);
}

TEST(CompletedIdentity, GroupRouteForFourAndFive) {
  for (int n : {4, 5}) {
    const CompletedIdentityReport r = verify_completed_identity(n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_TRUE(r.group_route);
    EXPECT_FALSE(r.series_route.has_value());
  }
}

TEST(Rational, Printing) {
  EXPECT_EQ(rational_to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(rational_to_string(Rational(4)), "4");
}

}  // namespace
}  // namespace lantern
