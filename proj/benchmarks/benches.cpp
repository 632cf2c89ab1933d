#include <benchmark/benchmark.h>

#include <random>

#include "renyi/analysis.hpp"
#include "renyi/polarization.hpp"

using namespace renyi;

static void BM_BinaryRenyiInverseDouble(benchmark::State& state) {
  const Alpha<double> alpha(2.5);
  double h = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(binary_renyi_inverse(h, alpha));
    h = h < 0.6 ? h + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_BinaryRenyiInverseDouble);

static void BM_BinaryRenyiInverseExtended(benchmark::State& state) {
  const Alpha<Extended> alpha(Extended("2.5"));
  const Extended h("0.3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(binary_renyi_inverse(h, alpha));
  }
}
BENCHMARK(BM_BinaryRenyiInverseExtended);

static void BM_ClassifyConvexity(benchmark::State& state) {
  ConvexityOptions options;
  options.grid_n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_convexity(KKKind::kk_hayashi, 1.5, options));
  }
}
BENCHMARK(BM_ClassifyConvexity)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_CondEntropy(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const JointDistribution joint = random_joint(rng, static_cast<std::size_t>(state.range(0)));
  const Alpha<double> alpha(2.0);
  for (auto _ : state) {
    for (EntropyKind kind : {EntropyKind::arimoto, EntropyKind::hayashi, EntropyKind::jizba,
                             EntropyKind::cachin}) {
      benchmark::DoNotOptimize(cond_entropy(joint, alpha, kind));
    }
  }
}
BENCHMARK(BM_CondEntropy)->Arg(2)->Arg(16)->Arg(256);

static void BM_PolarTransforms(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const BinaryChannel w = random_channel(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polar_minus(w));
    benchmark::DoNotOptimize(polar_plus(w));
  }
}
BENCHMARK(BM_PolarTransforms)->Arg(4)->Arg(32);

static void BM_PolarizeTree(benchmark::State& state) {
  PolarConfig config;
  config.max_depth = static_cast<std::size_t>(state.range(0));
  const BinaryChannel w = make_bsc(0.11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polarize_tree(w, config));
  }
}
BENCHMARK(BM_PolarizeTree)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
