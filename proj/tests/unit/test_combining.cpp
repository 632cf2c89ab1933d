#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "convert.hpp"
#include "oracles.hpp"
#include "renyi/combining.hpp"
#include "renyi/errors.hpp"

using namespace renyi;
using testing_support::to_table;

namespace {

const double kLn2 = std::log(2.0);
Alpha<double> A(double a) { return Alpha<double>(a); }
const EntropyKind kRenyiKinds[] = {EntropyKind::arimoto, EntropyKind::hayashi,
                                   EntropyKind::jizba, EntropyKind::cachin};

JointDistribution joint(const BinaryChannel& w) { return channel_to_joint(w); }

}  // namespace

TEST(CombinePair, MatchesOracleConstruction) {
  std::mt19937_64 rng(1);
  const JointDistribution a = random_joint(rng, 3);
  const JointDistribution b = random_joint(rng, 4);
  const JointDistribution c = combine_pair(a, b);
  ASSERT_EQ(c.y_size(), 12u);
  const oracle::Table expected = oracle::combine(to_table(a), to_table(b));
  double total = 0;
  for (std::size_t y = 0; y < c.y_size(); ++y) {
    EXPECT_NEAR(c(0, y), expected[y][0], 1e-16);
    EXPECT_NEAR(c(1, y), expected[y][1], 1e-16);
    total += c(0, y) + c(1, y);
  }
  EXPECT_NEAR(total, 1.0, 1e-14);
}

TEST(CombinePair, BscPairGivesConvolution) {
  for (double p : {0.05, 0.2}) {
    for (double q : {0.1, 0.4}) {
      const JointDistribution c = combine_pair(joint(make_bsc(p)), joint(make_bsc(q)));
      for (double a : {0.5, 1.5, 2.0, 4.0}) {
        for (EntropyKind kind : kRenyiKinds) {
          EXPECT_NEAR(cond_entropy(c, A(a), kind), oracle::binary_renyi(oracle::conv(p, q), a),
                      1e-13);
        }
      }
    }
  }
}

TEST(CombinePair, BecPairFollowsErasureAlgebra) {
  for (double e1 : {0.1, 0.4}) {
    for (double e2 : {0.25, 0.7}) {
      const JointDistribution c = combine_pair(joint(make_bec(e1)), joint(make_bec(e2)));
      const double e = oracle::erasure_of_pair(e1, e2);
      for (double a : {0.5, 2.0, 3.0}) {
        EXPECT_NEAR(cond_entropy(c, A(a), EntropyKind::arimoto), oracle::bec_arimoto(e, a), 1e-13);
        EXPECT_NEAR(cond_entropy(c, A(a), EntropyKind::hayashi), oracle::bec_hayashi(e, a), 1e-13);
        EXPECT_NEAR(cond_entropy(c, A(a), EntropyKind::cachin), oracle::bec_cachin(e), 1e-13);
      }
    }
  }
}

TEST(CombinePair, NoiselessPartnerIsIdentity) {
  std::mt19937_64 rng(2);
  const JointDistribution j = random_joint(rng, 4);
  const JointDistribution deterministic(2, 1, {1.0, 0.0});
  for (EntropyKind kind : kRenyiKinds) {
    EXPECT_NEAR(cond_entropy(combine_pair(j, deterministic), A(2.5), kind),
                cond_entropy(j, A(2.5), kind), 1e-13);
  }
}

TEST(BscBound, Examples) {
  for (double a : {0.5, 1.0, 2.0, 3.5}) {
    EXPECT_NEAR(bsc_bound(0.0, 0.3, A(a)), 0.3, 1e-12);
    EXPECT_NEAR(bsc_bound(kLn2, 0.3, A(a)), kLn2, 1e-12);
  }
  const double h1 = 0.2;
  const double h2 = 0.5;
  const double mgl = oracle::shannon(oracle::conv(oracle::binary_renyi_inverse(h1, 1.0),
                                                  oracle::binary_renyi_inverse(h2, 1.0)));
  EXPECT_NEAR(bsc_bound(h1, h2, A(1)), mgl, 1e-12);
}

TEST(BecBound, EqualityOnBecPairsForEveryKind) {
  for (double e1 : {0.1, 0.5}) {
    for (double e2 : {0.2, 0.9}) {
      const JointDistribution j1 = joint(make_bec(e1));
      const JointDistribution j2 = joint(make_bec(e2));
      const oracle::Table combined = oracle::combine(oracle::bec(e1), oracle::bec(e2));
      for (double a : {0.5, 1.5, 2.5, 5.0}) {
        // A, H, J take K-values.
        EXPECT_NEAR(bec_bound(k_cond(j1, A(a), EntropyKind::arimoto),
                              k_cond(j2, A(a), EntropyKind::arimoto), A(a), EntropyKind::arimoto),
                    oracle::cond_arimoto(combined, a), 1e-12);
        EXPECT_NEAR(bec_bound(k_cond(j1, A(a), EntropyKind::hayashi),
                              k_cond(j2, A(a), EntropyKind::hayashi), A(a), EntropyKind::hayashi),
                    oracle::cond_hayashi(combined, a), 1e-12);
        EXPECT_NEAR(bec_bound(k_cond(j1, A(a), EntropyKind::jizba),
                              k_cond(j2, A(a), EntropyKind::jizba), A(a), EntropyKind::jizba),
                    oracle::cond_jizba(combined, a), 1e-12);
        EXPECT_NEAR(bec_bound(cond_entropy(j1, A(a), EntropyKind::cachin),
                              cond_entropy(j2, A(a), EntropyKind::cachin), A(a),
                              EntropyKind::cachin),
                    oracle::cond_cachin(combined, a), 1e-12);
      }
    }
  }
}

TEST(BecBound, CachinAbsorbs) {
  EXPECT_NEAR(bec_bound(kLn2, 0.3, A(2), EntropyKind::cachin), kLn2, 1e-15);
}

TEST(GapDelta, VanishesForHayashiAtTwoAndThree) {
  for (int i = 1; i <= 50; ++i) {
    const double p = i / 100.0;
    EXPECT_NEAR(gap_delta(p, A(2), EntropyKind::hayashi), 0.0, 1e-12);
    EXPECT_NEAR(gap_delta(p, A(3), EntropyKind::hayashi), 0.0, 1e-12);
  }
}

TEST(GapDelta, ShannonLimitIsNonPositive) {
  for (int i = 1; i <= 50; ++i) {
    const double p = i / 100.0;
    const double h = oracle::shannon(p);
    const double shannon_gap = oracle::shannon(oracle::conv(p, p)) - (kLn2 - (kLn2 - h) * (kLn2 - h) / kLn2);
    EXPECT_LE(shannon_gap, 1e-15);
    for (double a : {1 - 1e-6, 1 + 1e-6}) {
      EXPECT_NEAR(gap_delta(p, A(a), EntropyKind::cachin), shannon_gap, 1e-5);
    }
  }
}

TEST(GapDelta, CounterexampleSigns) {
  EXPECT_LT(gap_delta(1e-6, A(1.5), EntropyKind::arimoto), 0.0);
  EXPECT_GT(gap_delta(0.49, A(1.8), EntropyKind::arimoto), 0.0);
  EXPECT_THROW(gap_delta(0.0, A(2), EntropyKind::arimoto), DomainError);
  EXPECT_THROW(gap_delta(0.2, A(1), EntropyKind::arimoto), UnsupportedOrder);
  EXPECT_THROW(gap_delta(0.2, A(2), EntropyKind::jizba), DomainError);
}

TEST(RegimeTable, Entries) {
  auto regime = [](KKKind f, double a) { return convexity_regime(f, A(a)).regime; };
  EXPECT_EQ(regime(KKKind::kk_hayashi, 0.5), Regime::convex);
  EXPECT_EQ(regime(KKKind::kk_hayashi, 1.5), Regime::concave);
  EXPECT_EQ(regime(KKKind::kk_hayashi, 2.0), Regime::linear);
  EXPECT_EQ(regime(KKKind::kk_hayashi, 2.5), Regime::convex);
  EXPECT_EQ(regime(KKKind::kk_hayashi, 3.0), Regime::linear);
  EXPECT_EQ(regime(KKKind::kk_hayashi, 4.0), Regime::concave);
  EXPECT_EQ(convexity_regime(KKKind::kk_arimoto, Alpha<double>::infinity()).regime, Regime::linear);
  EXPECT_EQ(regime(KKKind::kk_arimoto, 2.5), Regime::convex);
  EXPECT_TRUE(convexity_regime(KKKind::kk_arimoto, A(1.7)).proven);
  EXPECT_EQ(regime(KKKind::kk_arimoto, 1.7), Regime::neither);
  EXPECT_FALSE(convexity_regime(KKKind::kk_arimoto, A(1.2)).proven);
  EXPECT_EQ(regime(KKKind::hh, 1.6), Regime::neither);
  EXPECT_FALSE(convexity_regime(KKKind::hh, A(2.5)).proven);
  EXPECT_EQ(composition_for(EntropyKind::jizba), KKKind::kk_hayashi);
  EXPECT_EQ(composition_for(EntropyKind::cachin), KKKind::hh);
}

TEST(CheckBounds, HayashiConcaveRegimeSandwich) {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> outputs(2, 6);
  for (int i = 0; i < 1000; ++i) {
    const JointDistribution j1 = joint(random_channel(rng, outputs(rng)));
    const JointDistribution j2 = joint(random_channel(rng, outputs(rng)));
    const BoundReport r = check_bounds(j1, j2, A(1.5), EntropyKind::hayashi);
    EXPECT_EQ(r.orientation, Orientation::bsc_lower);
    EXPECT_TRUE(r.asserted);
    EXPECT_GE(r.actual - r.bsc_bound, -1e-10);
    EXPECT_GE(r.bec_bound - r.actual, -1e-10);
    EXPECT_EQ(r.verdict, Verdict::sandwiched);
  }
}

TEST(CheckBounds, ArimotoConvexRegimeSandwich) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const JointDistribution j1 = joint(random_channel(rng, 2 + i % 5));
    const JointDistribution j2 = joint(random_channel(rng, 2 + (i / 5) % 5));
    const BoundReport r = check_bounds(j1, j2, A(2.5), EntropyKind::arimoto);
    EXPECT_EQ(r.orientation, Orientation::bsc_upper);
    EXPECT_LE(r.actual, r.bsc_bound + 1e-10);
    EXPECT_GE(r.actual, r.bec_bound - 1e-10);
  }
}

TEST(CheckBounds, BscPairsAttainBscExpression) {
  for (double a : {0.5, 1.5, 2.5, 7.0}) {
    for (EntropyKind kind : kRenyiKinds) {
      const BoundReport r = check_bounds(joint(make_bsc(0.07)), joint(make_bsc(0.3)), A(a), kind);
      EXPECT_NEAR(r.actual, r.bsc_bound, 1e-10);
    }
  }
}

TEST(CheckBounds, SymmetricInArguments) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const JointDistribution j1 = random_joint(rng, 3);
    const JointDistribution j2 = random_joint(rng, 5);
    for (EntropyKind kind : kRenyiKinds) {
      const BoundReport a = check_bounds(j1, j2, A(2.5), kind);
      const BoundReport b = check_bounds(j2, j1, A(2.5), kind);
      EXPECT_NEAR(a.actual, b.actual, 1e-12);
      EXPECT_NEAR(a.bsc_bound, b.bsc_bound, 1e-12);
      EXPECT_NEAR(a.bec_bound, b.bec_bound, 1e-12);
    }
  }
}

TEST(CheckBounds, ShannonRouting) {
  const BoundReport r =
      check_bounds(joint(make_bsc(0.1)), joint(make_bec(0.3)), A(1), EntropyKind::jizba);
  EXPECT_EQ(r.regime.regime, Regime::shannon);
  EXPECT_EQ(r.orientation, Orientation::bsc_lower);
  EXPECT_EQ(r.verdict, Verdict::sandwiched);
}

TEST(ShannonBaselines, Extremes) {
  const ShannonBaselines zero = shannon_baselines(0, 0);
  EXPECT_NEAR(zero.mgl_lower, 0, 1e-15);
  EXPECT_NEAR(zero.bec_upper, 0, 1e-15);
  EXPECT_NEAR(zero.plus_lower, 0, 1e-15);
  EXPECT_NEAR(zero.plus_upper, 0, 1e-15);
  ASSERT_TRUE(zero.gx15_lower.has_value());
  EXPECT_NEAR(*zero.gx15_lower, 0, 1e-15);
  const ShannonBaselines full = shannon_baselines(kLn2, kLn2);
  EXPECT_NEAR(full.mgl_lower, kLn2, 1e-12);
  EXPECT_NEAR(full.bec_upper, kLn2, 1e-15);
  EXPECT_NEAR(full.plus_lower, kLn2, 1e-15);
  EXPECT_FALSE(shannon_baselines(0.1, 0.2).gx15_lower.has_value());
  EXPECT_THROW(gx15_lower(0.1, 0.2), DomainError);
}

TEST(ShannonBaselines, OrderingOnIdenticalRandomPairs) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const JointDistribution j = joint(random_channel(rng, 2 + i % 5));
    const double h = cond_entropy(j, A(1), EntropyKind::shannon);
    const ShannonBaselines b = shannon_baselines(h, h);
    const double actual = cond_entropy(combine_pair(j, j), A(1), EntropyKind::shannon);
    EXPECT_LE(*b.gx15_lower, b.mgl_lower + 1e-12);
    EXPECT_LE(b.mgl_lower, actual + 1e-10);
    EXPECT_LE(actual, b.bec_upper + 1e-10);
  }
}

TEST(SecondBranch, AdditivityAndSandwich) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const JointDistribution j1 = joint(random_channel(rng, 2 + i % 4));
    const JointDistribution j2 = joint(random_channel(rng, 2 + (i / 4) % 4));
    const double h1 = cond_entropy(j1, A(1), EntropyKind::shannon);
    const double h2 = cond_entropy(j2, A(1), EntropyKind::shannon);
    const double minus = cond_entropy(combine_pair(j1, j2), A(1), EntropyKind::shannon);
    const double plus = second_branch_entropy(j1, j2);
    EXPECT_NEAR(plus + minus, h1 + h2, 1e-10);
    const ShannonBaselines b = shannon_baselines(h1, h2);
    EXPECT_GE(plus, b.plus_lower - 1e-10);
    EXPECT_LE(plus, b.plus_upper + 1e-10);
  }
  EXPECT_NEAR(second_branch_entropy(joint(make_bsc(0)), joint(make_bsc(0.2))), 0.0, 1e-15);
}
