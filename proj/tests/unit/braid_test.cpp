#include "lantern/braid.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "lantern/errors.hpp"
#include "support/test_support.hpp"

namespace lantern {
namespace {

using testing::random_p3_word;
using testing::single;

Word w(int rank, std::vector<Letter> raw) { return Word::reduce(rank, raw); }

void expect_certified(const FramedBraid& b) {
  EXPECT_TRUE(fixes_boundary_word(b.aut()));
  EXPECT_TRUE(sends_generators_to_conjugates(b.aut()));
}

TEST(Sigma, Images) {
  const FreeAut s = sigma(1, 2);
  EXPECT_EQ(s.image(1), w(2, {1, 2, -1}));
  EXPECT_EQ(s.image(2), w(2, {1}));
  EXPECT_EQ(sigma(1, 3).image(3), w(3, {3}));
  EXPECT_EQ(apply(s, w(2, {1, 2})), w(2, {1, 2}));
}

TEST(Sigma, InverseImages) {
  const FreeAut s = sigma_inverse(1, 2);
  EXPECT_EQ(s.image(1), w(2, {2}));
  EXPECT_EQ(s.image(2), w(2, {-2, 1, 2}));
  EXPECT_EQ(compose(sigma(2, 4), sigma_inverse(2, 4)), FreeAut::identity(4));
}

TEST(Sigma, IndexErrors) {
  EXPECT_THROW(sigma(0, 3), IndexError);
  EXPECT_THROW(sigma(3, 3), IndexError);
  EXPECT_THROW(sigma_inverse(2, 2), IndexError);
}

TEST(Sigma, BraidRelationsUpToSixStrands) {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      EXPECT_TRUE(fixes_boundary_word(sigma(i, n)));
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) {
          EXPECT_EQ(compose(sigma(i, n), sigma(j, n)), compose(sigma(j, n), sigma(i, n)));
        }
      }
      if (i + 1 < n) {
        const FreeAut a = sigma(i, n);
        const FreeAut b = sigma(i + 1, n);
        EXPECT_EQ(compose(compose(a, b), a), compose(compose(b, a), b)) << n << " " << i;
      }
    }
  }
}

TEST(Certificates, SigmaIsNotPure) {
  EXPECT_FALSE(sends_generators_to_conjugates(sigma(1, 3)));
  EXPECT_THROW(FramedBraid::make(sigma(1, 3), {0, 0, 0}), std::invalid_argument);
}

TEST(Certificates, RejectsNonBraidAutomorphism) {
  // x1 -> x1 x2 is an automorphism that does not fix x1 x2.
  const FreeAut f = FreeAut::with_inverse({w(2, {1, 2}), w(2, {2})}, {w(2, {1, -2}), w(2, {2})});
  EXPECT_FALSE(fixes_boundary_word(f));
  EXPECT_THROW(FramedBraid::make(f, {0, 0}), std::invalid_argument);
}

TEST(Certificates, FramingLengthMustMatch) {
  EXPECT_THROW(FramedBraid::make(FreeAut::identity(3), {0, 0}), MismatchError);
}

TEST(Certificates, AllGeneratorsUpToSixStrands) {
  for (int n = 1; n <= 6; ++n) {
    for (const FramedBraid& g : framed_generators(n)) expect_certified(g);
    if (n >= 2) expect_certified(full_twist(n));
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) expect_certified(pure_twist(i, j, n));
    }
  }
}

TEST(TauPair, Framing) {
  EXPECT_EQ(tau_pair(1, 2, 2).framing(), (std::vector<long>{1, 1}));
  EXPECT_EQ(tau_pair(1, 3, 4).framing(), (std::vector<long>{1, 0, 1, 0}));
}

TEST(TauPair, AdjacentPairIsSigmaSquared) {
  EXPECT_EQ(tau_pair(1, 2, 3).aut(), compose(sigma(1, 3), sigma(1, 3)));
}

TEST(TauPair, SendsMiddleGeneratorToConjugate) {
  const FramedBraid t = tau_pair(1, 3, 3);
  EXPECT_TRUE(conjugator_to_generator(t.aut().image(2), 2).has_value());
  EXPECT_NE(t.aut().image(2), w(3, {2}));
}

TEST(TauPair, IndexErrors) {
  EXPECT_THROW(tau_pair(2, 1, 3), IndexError);
  EXPECT_THROW(tau_pair(1, 1, 3), IndexError);
  EXPECT_THROW(tau_pair(1, 4, 3), IndexError);
  EXPECT_THROW(pure_twist(0, 2, 3), IndexError);
}

TEST(TauFrame, FramingAndAut) {
  EXPECT_EQ(tau_frame(2, 3).framing(), (std::vector<long>{0, 1, 0}));
  EXPECT_EQ(tau_frame(1, 3).aut(), FreeAut::identity(3));
  EXPECT_THROW(tau_frame(4, 3), IndexError);
  EXPECT_THROW(tau_frame(0, 3), IndexError);
}

TEST(TauFrame, ProductFramingIsAdditive) {
  const FramedBraid p = braid_mul(braid_mul(tau_frame(1, 3), tau_frame(2, 3)), tau_frame(3, 3));
  EXPECT_EQ(p.framing(), (std::vector<long>{1, 1, 1}));
}

TEST(TauBand, PairBandIsPairTwist) {
  const std::vector<int> s = {1, 2};
  EXPECT_TRUE(braid_eq(tau_band(s, 2), tau_pair(1, 2, 2)));
}

TEST(TauBand, FullBandOnThreeStrands) {
  const std::vector<int> s = {1, 2, 3};
  const FramedBraid band = tau_band(s, 3);
  EXPECT_EQ(band.framing(), (std::vector<long>{1, 1, 1}));
  const FramedBraid rhs =
      braid_mul(braid_mul(tau_pair(1, 2, 3), tau_pair(1, 3, 3)), tau_pair(2, 3, 3));
  EXPECT_EQ(band.aut(), rhs.aut());
  EXPECT_EQ(band.aut(), full_twist(3).aut());
}

TEST(TauBand, UnsupportedSubset) {
  const std::vector<int> s = {1, 2};
  EXPECT_THROW(tau_band(s, 3), UnsupportedError);
}

TEST(BraidMul, IdentityAndFramingCentral) {
  const FramedBraid b = tau_pair(1, 3, 3);
  EXPECT_TRUE(braid_eq(braid_mul(b, FramedBraid::identity(3)), b));
  const FramedBraid t1 = tau_frame(1, 3);
  const FramedBraid t12 = tau_pair(1, 2, 3);
  EXPECT_TRUE(braid_eq(braid_mul(t1, t12), braid_mul(t12, t1)));
}

TEST(BraidMul, LanternRightHandFraming) {
  const FramedBraid rhs =
      braid_mul(braid_mul(tau_pair(1, 2, 3), tau_pair(1, 3, 3)), tau_pair(2, 3, 3));
  EXPECT_EQ(rhs.framing(), (std::vector<long>{2, 2, 2}));
}

TEST(BraidMul, StrandMismatch) {
  EXPECT_THROW(braid_mul(tau_frame(1, 2), tau_frame(1, 3)), MismatchError);
}

TEST(BraidMul, InverseAndPower) {
  const FramedBraid b = braid_mul(tau_pair(1, 3, 4), tau_frame(2, 4));
  EXPECT_TRUE(braid_eq(braid_mul(b, braid_inverse(b)), FramedBraid::identity(4)));
  EXPECT_TRUE(braid_eq(braid_power(b, 3), braid_mul(b, braid_mul(b, b))));
  EXPECT_TRUE(braid_eq(braid_power(b, -2), braid_inverse(braid_mul(b, b))));
  EXPECT_TRUE(braid_eq(braid_power(b, 0), FramedBraid::identity(4)));
}

TEST(BraidEq, Examples) {
  const FramedBraid b = tau_pair(2, 3, 3);
  EXPECT_TRUE(braid_eq(b, b));
  for (int n = 2; n <= 4; ++n) EXPECT_FALSE(braid_eq(tau_frame(1, n), tau_frame(2, n)));
  EXPECT_FALSE(braid_eq(FramedBraid::identity(2), FramedBraid::identity(3)));
}

TEST(BraidEq, LanternOnThreeStrands) {
  const std::vector<int> s = {1, 2, 3};
  FramedBraid lhs = tau_band(s, 3);
  for (int i = 1; i <= 3; ++i) lhs = braid_mul(lhs, tau_frame(i, 3));
  const FramedBraid rhs =
      braid_mul(braid_mul(tau_pair(1, 2, 3), tau_pair(1, 3, 3)), tau_pair(2, 3, 3));
  EXPECT_TRUE(braid_eq(lhs, rhs));
}

TEST(Lantern, HoldsLexicographicallyUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    const LanternReport r = verify_lantern(n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_TRUE(r.automorphisms_equal);
    EXPECT_EQ(r.framing_lhs, std::vector<long>(n, n - 1));
    EXPECT_EQ(r.framing_rhs, std::vector<long>(n, n - 1));
    EXPECT_FALSE(r.lowest_discrepancy.has_value());
  }
}

TEST(Lantern, ReverseOrderIsReportedAsFailing) {
  EXPECT_TRUE(verify_lantern(2, PairOrder::kReverseLexicographic).holds);
  for (int n = 3; n <= 5; ++n) {
    const LanternReport r = verify_lantern(n, PairOrder::kReverseLexicographic);
    EXPECT_FALSE(r.holds);
    EXPECT_TRUE(r.lowest_discrepancy.has_value());
    EXPECT_EQ(r.framing_lhs, r.framing_rhs);
  }
}

TEST(Lantern, RejectsOneStrand) {
  EXPECT_THROW(verify_lantern(1), IndexError);
}

TEST(Central, Examples) {
  EXPECT_TRUE(is_central(tau_frame(2, 3)));
  const std::vector<int> s = {1, 2, 3};
  EXPECT_TRUE(is_central(tau_band(s, 3)));
  EXPECT_TRUE(is_central(full_twist(3)));
  EXPECT_FALSE(is_central(tau_pair(1, 2, 3)));
  // the witness: tau_12 and tau_13 do not commute
  const FramedBraid a = tau_pair(1, 2, 3);
  const FramedBraid b = tau_pair(1, 3, 3);
  EXPECT_FALSE(braid_eq(braid_mul(a, b), braid_mul(b, a)));
}

TEST(BraidWord, EvaluateMatchesConstructors) {
  EXPECT_TRUE(braid_eq(evaluate(single(GeneratorKind::kFrame, {2}), 3), tau_frame(2, 3)));
  EXPECT_TRUE(
      braid_eq(evaluate(single(GeneratorKind::kBandTwist, {1, 3}), 3), tau_pair(1, 3, 3)));
  EXPECT_TRUE(
      braid_eq(evaluate(single(GeneratorKind::kPureTwist, {2, 3}), 3), pure_twist(2, 3, 3)));
  const BraidWord ss = {{{GeneratorKind::kArtin, {1}}, 2}};
  EXPECT_TRUE(braid_eq(evaluate(ss, 3), pure_twist(1, 2, 3)));
}

TEST(BraidWord, NonPureArtinProductRejected) {
  EXPECT_THROW(evaluate(single(GeneratorKind::kArtin, {1}), 3), UnsupportedError);
  EXPECT_THROW(braid_word_framing(single(GeneratorKind::kArtin, {1}), 3), UnsupportedError);
}

TEST(BraidWord, FramingIsAdditive) {
  std::mt19937_64 rng(testing::kSeed + 10);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord word = random_p3_word(rng, 12);
    std::vector<long> sum(3, 0);
    for (const BraidLetter& l : word) {
      const auto f = evaluate(l.generator, 3).framing();
      for (int i = 0; i < 3; ++i) sum[i] += f[i] * l.exponent;
    }
    ASSERT_EQ(evaluate(word, 3).framing(), sum);
    ASSERT_EQ(braid_word_framing(word, 3), sum);
  }
}

TEST(BraidWord, Printing) {
  BraidWord word = single(GeneratorKind::kBandTwist, {1, 2, 3});
  word.push_back({{GeneratorKind::kFrame, {1}}, -2});
  EXPECT_EQ(to_string(word), "T[1,2,3]*t[1]^-2");
}

TEST(NormalForm, Examples) {
  const P3NormalForm t12 = p3_normal_form(single(GeneratorKind::kBandTwist, {1, 2}));
  EXPECT_EQ(t12.word, w(2, {1}));
  EXPECT_EQ(t12.delta_power, 0);
  EXPECT_EQ(t12.framing, (std::array<long, 3>{1, 1, 0}));

  const P3NormalForm t23 = p3_normal_form(single(GeneratorKind::kBandTwist, {2, 3}));
  EXPECT_EQ(t23.word, w(2, {-2, -1}));
  EXPECT_EQ(t23.delta_power, 1);
  EXPECT_EQ(t23.framing, (std::array<long, 3>{0, 1, 1}));

  const P3NormalForm t123 = p3_normal_form(single(GeneratorKind::kBandTwist, {1, 2, 3}));
  EXPECT_TRUE(t123.word.empty());
  EXPECT_EQ(t123.delta_power, 1);
  EXPECT_EQ(t123.framing, (std::array<long, 3>{1, 1, 1}));
}

TEST(NormalForm, RejectsArtinLettersAndWrongStrandCount) {
  EXPECT_THROW(p3_normal_form(single(GeneratorKind::kArtin, {1})), UnsupportedError);
  EXPECT_THROW(p3_normal_form(single(GeneratorKind::kFrame, {4})), std::exception);
}

TEST(NormalForm, RoundTripsOnRandomWords) {
  std::mt19937_64 rng(testing::kSeed + 11);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord word = random_p3_word(rng, 20);
    const P3NormalForm nf = p3_normal_form(word);
    ASSERT_TRUE(braid_eq(expand(nf), evaluate(word, 3))) << to_string(word);
  }
}

TEST(NormalForm, LanternWordsHaveEqualNormalForms) {
  BraidWord lhs = single(GeneratorKind::kBandTwist, {1, 2, 3});
  for (int i = 1; i <= 3; ++i) lhs.push_back({{GeneratorKind::kFrame, {i}}, 1});
  BraidWord rhs;
  for (auto p : {std::vector<int>{1, 2}, {1, 3}, {2, 3}}) {
    rhs.push_back({{GeneratorKind::kBandTwist, p}, 1});
  }
  EXPECT_EQ(p3_normal_form(lhs), p3_normal_form(rhs));
}

}  // namespace
}  // namespace lantern
