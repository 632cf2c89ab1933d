#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "convert.hpp"
#include "oracles.hpp"
#include "renyi/channels.hpp"
#include "renyi/errors.hpp"

using namespace renyi;
using testing_support::to_table;

namespace {

const double kLn2 = std::log(2.0);
Alpha<double> A(double a) { return Alpha<double>(a); }
const EntropyKind kRenyiKinds[] = {EntropyKind::arimoto, EntropyKind::hayashi,
                                   EntropyKind::jizba, EntropyKind::cachin};

double oracle_entropy(const oracle::Table& t, double a, EntropyKind kind) {
  switch (kind) {
    case EntropyKind::arimoto:
      return oracle::cond_arimoto(t, a);
    case EntropyKind::hayashi:
      return oracle::cond_hayashi(t, a);
    case EntropyKind::jizba:
      return oracle::cond_jizba(t, a);
    case EntropyKind::cachin:
      return oracle::cond_cachin(t, a);
    default:
      return oracle::cond_shannon(t);
  }
}

}  // namespace

TEST(Channels, BscAndBecLayouts) {
  const BinaryChannel bsc = make_bsc(0.2);
  ASSERT_EQ(bsc.size(), 2u);
  EXPECT_EQ(bsc[0], (LikelihoodPair{0.8, 0.2}));
  EXPECT_EQ(bsc[1], (LikelihoodPair{0.2, 0.8}));
  const BinaryChannel bec = make_bec(0.3);
  ASSERT_EQ(bec.size(), 3u);
  EXPECT_EQ(bec[2], (LikelihoodPair{0.3, 0.3}));
  EXPECT_NEAR(bec[0].w0, 0.7, 1e-16);
  EXPECT_EQ(bec[0].w1, 0.0);
}

TEST(Channels, ValidationRejectsBadChannels) {
  EXPECT_THROW(BinaryChannel({}), DomainError);
  EXPECT_THROW(BinaryChannel({{0.5, 0.5}, {0.4, 0.5}}), DomainError);
  EXPECT_THROW(BinaryChannel({{1.2, 0.5}, {-0.2, 0.5}}), DomainError);
  EXPECT_THROW(make_bsc(1.5), DomainError);
}

TEST(Channels, NoiselessAndUseless) {
  for (double a : {0.5, 1.0, 2.0, 3.5}) {
    for (EntropyKind kind : kRenyiKinds) {
      EXPECT_NEAR(cond_entropy(make_bsc(0.0), A(a), kind), 0.0, 1e-15);
      EXPECT_NEAR(cond_entropy(make_bsc(0.5), A(a), kind), kLn2, 1e-15);
      EXPECT_NEAR(cond_entropy(make_bec(1.0), A(a), kind), kLn2, 1e-15);
    }
  }
}

TEST(Channels, BscEntropyEqualsBinaryRenyiForEveryKind) {
  for (double p : {0.01, 0.11, 0.3, 0.45}) {
    for (double a : {0.5, 1.5, 2.0, 5.0}) {
      for (EntropyKind kind : kRenyiKinds) {
        EXPECT_NEAR(cond_entropy(make_bsc(p), A(a), kind), oracle::binary_renyi(p, a), 1e-13);
      }
    }
  }
}

TEST(Channels, BecClosedForms) {
  for (double e : {0.1, 0.3, 0.75}) {
    for (double a : {0.5, 1.5, 3.0}) {
      EXPECT_NEAR(cond_entropy(make_bec(e), A(a), EntropyKind::cachin), oracle::bec_cachin(e), 1e-14);
      EXPECT_NEAR(cond_entropy(make_bec(e), A(a), EntropyKind::arimoto), oracle::bec_arimoto(e, a),
                  1e-14);
      EXPECT_NEAR(cond_entropy(make_bec(e), A(a), EntropyKind::hayashi), oracle::bec_hayashi(e, a),
                  1e-14);
    }
  }
}

TEST(Channels, JointConversions) {
  const JointDistribution j = channel_to_joint(make_bsc(0.1));
  EXPECT_NEAR(j(0, 0), 0.45, 1e-16);
  const BinaryChannel w = make_bec(0.2);
  const auto marginal = channel_to_joint(w).y_marginal();
  for (std::size_t y = 0; y < w.size(); ++y) {
    EXPECT_NEAR(marginal[y], 0.5 * (w[y].w0 + w[y].w1), 1e-16);
  }
  std::mt19937_64 rng(2);
  const BinaryChannel r = random_channel(rng, 5);
  const BinaryChannel back = joint_to_channel(channel_to_joint(r, 0.3));
  for (std::size_t y = 0; y < r.size(); ++y) {
    EXPECT_NEAR(back[y].w0, r[y].w0, 1e-15);
    EXPECT_NEAR(back[y].w1, r[y].w1, 1e-15);
  }
}

TEST(CondEntropy, MatchesDefinitionsOnRandomJoints) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const JointDistribution j = random_joint(rng, 2 + i % 5);
    const oracle::Table t = to_table(j);
    for (double a : {0.5, 1.5, 2.0, 4.0}) {
      for (EntropyKind kind : kRenyiKinds) {
        EXPECT_NEAR(cond_entropy(j, A(a), kind), oracle_entropy(t, a, kind), 1e-12);
      }
    }
    EXPECT_NEAR(cond_entropy(j, A(1), EntropyKind::shannon), oracle::cond_shannon(t), 1e-13);
    EXPECT_NEAR(cond_min_entropy(j), oracle::cond_min(t), 1e-13);
  }
}

TEST(CondEntropy, SkipsZeroMassOutputs) {
  const BinaryChannel w({{0.5, 0.2}, {0.0, 0.0}, {0.5, 0.8}});
  const BinaryChannel trimmed({{0.5, 0.2}, {0.5, 0.8}});
  for (EntropyKind kind : kRenyiKinds) {
    EXPECT_NEAR(cond_entropy(w, A(2), kind), cond_entropy(trimmed, A(2), kind), 1e-15);
  }
}

TEST(CondEntropy, OrderRestrictions) {
  const BinaryChannel w = make_bsc(0.2);
  EXPECT_NEAR(cond_entropy(w, Alpha<double>::infinity(), EntropyKind::arimoto), -std::log(0.8),
              1e-15);
  for (EntropyKind kind : {EntropyKind::hayashi, EntropyKind::jizba, EntropyKind::cachin}) {
    EXPECT_THROW(cond_entropy(w, Alpha<double>::infinity(), kind), UnsupportedOrder);
  }
  EXPECT_NEAR(cond_entropy(w, A(1), EntropyKind::jizba), oracle::shannon(0.2), 1e-15);
}

TEST(CondEntropy, ArimotoApproachesMinEntropy) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const JointDistribution j = random_joint(rng, 4);
    EXPECT_NEAR(cond_entropy(j, A(1e6), EntropyKind::arimoto), cond_min_entropy(j), 1e-5);
  }
}

TEST(KCond, EndpointsAndDecomposition) {
  for (double a : {0.5, 2.0, 3.0}) {
    const JointDistribution useless = channel_to_joint(make_bsc(0.5));
    const JointDistribution noiseless = channel_to_joint(make_bsc(0.0));
    EXPECT_NEAR(k_cond(useless, A(a), EntropyKind::arimoto),
                delta_const(A(a), KTransform::arimoto), 1e-14);
    EXPECT_NEAR(k_cond(useless, A(a), EntropyKind::hayashi),
                delta_const(A(a), KTransform::hayashi), 1e-14);
    EXPECT_NEAR(k_cond(useless, A(a), EntropyKind::jizba),
                delta_const(A(a), KTransform::hayashi), 1e-14);
    for (EntropyKind kind : {EntropyKind::arimoto, EntropyKind::hayashi, EntropyKind::jizba}) {
      EXPECT_NEAR(k_cond(noiseless, A(a), kind), 1.0, 1e-15);
    }
  }
  // Direct per-symbol sum for K^A, independent of the library's helpers.
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const JointDistribution j = random_joint(rng, 3);
    double k = 0;
    for (const auto& c : to_table(j)) {
      const double py = c[0] + c[1];
      k += py * std::pow(std::pow(c[0] / py, 2.5) + std::pow(c[1] / py, 2.5), 1 / 2.5);
    }
    EXPECT_NEAR(k_cond(j, A(2.5), EntropyKind::arimoto), k, 1e-12);
    EXPECT_NEAR(k_cond_by_decomposition(j, A(2.5), EntropyKind::arimoto), k, 1e-12);
  }
}

TEST(Tilt, Examples) {
  const std::vector<double> uniform{0.25, 0.25, 0.25, 0.25};
  for (double v : tilt(uniform, A(3))) EXPECT_NEAR(v, 0.25, 1e-16);
  const std::vector<double> p{0.8, 0.2};
  const auto same = tilt(p, A(1));
  EXPECT_NEAR(same[0], 0.8, 1e-16);
  const auto t = tilt(p, A(2));
  EXPECT_NEAR(t[0], 0.64 / 0.68, 1e-15);
  EXPECT_NEAR(t[1], 0.04 / 0.68, 1e-15);
  EXPECT_NEAR(t[0], 0.9412, 5e-5);
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_THROW(tilt(zero, A(2)), DomainError);
  EXPECT_THROW(tilt(p, Alpha<double>::infinity()), UnsupportedOrder);
}

TEST(Merge, PreservesPosteriorFunctionalsButNotJizba) {
  const BinaryChannel w({{0.4, 0.2}, {0.2, 0.1}, {0.3, 0.1}, {0.1, 0.6}});
  const BinaryChannel merged = merge_equivalent_outputs(w);
  EXPECT_EQ(merged.size(), 3u);
  for (EntropyKind kind : {EntropyKind::arimoto, EntropyKind::hayashi, EntropyKind::cachin}) {
    EXPECT_NEAR(cond_entropy(merged, A(2), kind), cond_entropy(w, A(2), kind), 1e-12);
  }
  EXPECT_NEAR(cond_entropy(merged, A(1), EntropyKind::shannon),
              cond_entropy(w, A(1), EntropyKind::shannon), 1e-12);
  EXPECT_NEAR(cond_min_entropy(channel_to_joint(merged)), cond_min_entropy(channel_to_joint(w)),
              1e-12);
  EXPECT_GT(std::abs(cond_entropy(merged, A(2), EntropyKind::jizba) -
                     cond_entropy(w, A(2), EntropyKind::jizba)),
            1e-3);
}

TEST(Merge, BscUnchangedAndZeroMassDropped) {
  EXPECT_EQ(merge_equivalent_outputs(make_bsc(0.2)).size(), 2u);
  const BinaryChannel w({{0.5, 0.5}, {0.0, 0.0}, {0.5, 0.5}});
  EXPECT_EQ(merge_equivalent_outputs(w).size(), 1u);
}

TEST(EntropyKindNames, RoundTrip) {
  for (EntropyKind kind : {EntropyKind::arimoto, EntropyKind::hayashi, EntropyKind::jizba,
                           EntropyKind::cachin, EntropyKind::shannon, EntropyKind::min_entropy}) {
    EXPECT_EQ(parse_entropy_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_entropy_kind("Q"), std::invalid_argument);
}
