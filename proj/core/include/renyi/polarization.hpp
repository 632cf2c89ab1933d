#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "renyi/alpha.hpp"
#include "renyi/channels.hpp"

namespace renyi {

/// W⁻((y₁,y₂)|u₁) = ½ Σ_{u₂} W₁(y₁|u₁⊕u₂) W₂(y₂|u₂), output y₁·m₂ + y₂.
BinaryChannel polar_minus(const BinaryChannel& first, const BinaryChannel& second);
inline BinaryChannel polar_minus(const BinaryChannel& w) { return polar_minus(w, w); }

/// W⁺((y₁,y₂,u₁)|u₂) = ½ W₁(y₁|u₁⊕u₂) W₂(y₂|u₂), output (y₁·m₂ + y₂)·2 + u₁.
BinaryChannel polar_plus(const BinaryChannel& first, const BinaryChannel& second);
inline BinaryChannel polar_plus(const BinaryChannel& w) { return polar_plus(w, w); }

/// I_α^J with uniform input, in nats: ln 2 − H_α^J(X|Y). α = 1 gives the
/// Shannon mutual information; α = ∞ is unsupported.
double mutual_info_J(const BinaryChannel& w, const Alpha<double>& alpha);

struct PolarConditions {
  double chain_residual;  ///< I(W⁺) + I(W⁻) − 2 I(W)
  double delta_w;         ///< ½ [I(W⁺) − I(W⁻)]
};

PolarConditions check_polar_conditions(const BinaryChannel& w, const Alpha<double>& alpha);

/// Numerical proxy for κ(a, b): the smallest guaranteed one-step gain
/// I(W) − I(W⁻), normalized by ln 2, over channels with a ≤ I(W)/ln 2 ≤ b.
/// The guarantee comes from the lower bound on H^J(W⁻) valid in the proven
/// κ^H regime at α; throws UnsupportedOrder where no such bound is proven.
double kappa_estimate(const Alpha<double>& alpha, double a, double b, std::size_t grid_n = 2001);

enum class MergePolicy { none, posterior_merge };

struct PolarConfig {
  Alpha<double> alpha = Alpha<double>(2.0);
  std::size_t max_depth = 3;
  double a = 0.1;
  double b = 0.9;
  MergePolicy merge_policy = MergePolicy::none;
};

/// Throws ConfigError on a < b violations, depth beyond the cap (4 without
/// merging, 12 with) or merging requested at an order where it would change
/// the Jizba quantities (any α ≠ 1).
void validate(const PolarConfig& config);

struct PolarNode {
  std::string path;       ///< one of '-' / '+' per level, first transform first
  std::size_t level;
  std::size_t block;      ///< position in a non-stationary sequence; 0 otherwise
  double i_value;         ///< I_α^J / ln 2
  std::size_t distinct_outputs;
};

struct LevelStats {
  std::size_t level;
  double mean;
  double variance;
  double frac_low;   ///< i_value < a
  double frac_mid;   ///< a ≤ i_value ≤ b
  double frac_high;  ///< i_value > b
};

struct PolarTree {
  std::vector<PolarNode> nodes;  ///< level 0 first, then level by level
  std::vector<LevelStats> stats;
};

/// Every synthetic channel down to `config.max_depth`. Outputs are stored
/// with multiplicities, and an output is identified with its swap
/// (w₀,w₁) ↔ (w₁,w₀); both are exact for uniform-input quantities, so the
/// Jizba values are computed without approximation.
PolarTree polarize_tree(const BinaryChannel& w, const PolarConfig& config);

/// Non-stationary variant: 2^max_depth possibly distinct channels, combined
/// pairwise as in the recursive polar construction. Level ℓ holds
/// 2^(max_depth−ℓ) blocks of 2^ℓ channels each.
PolarTree polarize_tree(const std::vector<BinaryChannel>& sequence, const PolarConfig& config);

std::string polar_nodes_csv(const PolarTree& tree);
std::string polar_stats_json(const PolarTree& tree);

}  // namespace renyi
