#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/alpha.hpp"
#include "renyi/entropy_core.hpp"

namespace renyi {

/// Likelihoods of one output symbol: w0 = W(y|0), w1 = W(y|1).
struct LikelihoodPair {
  double w0 = 0;
  double w1 = 0;

  friend bool operator==(const LikelihoodPair&, const LikelihoodPair&) = default;
};

/// Binary-input channel with a finite output alphabet. Immutable once built.
class BinaryChannel {
 public:
  /// Throws DomainError unless every likelihood is ≥ 0 and both rows sum
  /// to 1 within `kMassTolerance`.
  explicit BinaryChannel(std::vector<LikelihoodPair> outputs,
                         std::vector<std::string> labels = {});

  static constexpr double kMassTolerance = 1e-12;

  std::span<const LikelihoodPair> outputs() const noexcept { return outputs_; }
  std::size_t size() const noexcept { return outputs_.size(); }
  const LikelihoodPair& operator[](std::size_t y) const { return outputs_.at(y); }

  /// Empty when the channel was built without labels.
  std::span<const std::string> labels() const noexcept { return labels_; }

  friend bool operator==(const BinaryChannel& a, const BinaryChannel& b) {
    return a.outputs_ == b.outputs_;
  }

 private:
  std::vector<LikelihoodPair> outputs_;
  std::vector<std::string> labels_;
};

BinaryChannel make_bsc(double crossover);
BinaryChannel make_bec(double erasure);

/// Probability table p(x, y) over a finite input alphabet (binary unless
/// built as a product) and a finite output alphabet, stored row-major by x.
class JointDistribution {
 public:
  static constexpr double kMassTolerance = 1e-12;

  JointDistribution(std::size_t x_size, std::size_t y_size, std::vector<double> mass);

  /// Binary-input table from (p(0,y), p(1,y)) columns.
  static JointDistribution binary(std::span<const std::array<double, 2>> columns);

  std::size_t x_size() const noexcept { return x_size_; }
  std::size_t y_size() const noexcept { return y_size_; }
  bool is_binary() const noexcept { return x_size_ == 2; }

  double operator()(std::size_t x, std::size_t y) const { return mass_[x * y_size_ + y]; }
  std::span<const double> mass() const noexcept { return mass_; }

  std::vector<double> y_marginal() const;
  std::vector<double> x_marginal() const;

 private:
  std::size_t x_size_;
  std::size_t y_size_;
  std::vector<double> mass_;
};

/// p(x, y) = p(x) W(y|x) with p(0) = `px0`.
JointDistribution channel_to_joint(const BinaryChannel& channel, double px0 = 0.5);

/// Recovers W(y|x) = p(x, y)/p(x). Requires a binary table with p(0), p(1) > 0.
BinaryChannel joint_to_channel(const JointDistribution& joint);

/// Joint of (X₁X₂, Y₁Y₂) for independent pairs; x = 2·x₁ + x₂ style
/// row-major over (x₁, x₂) and (y₁, y₂).
JointDistribution product_joint(const JointDistribution& first, const JointDistribution& second);

enum class EntropyKind { arimoto, hayashi, jizba, cachin, shannon, min_entropy };

std::string_view to_string(EntropyKind kind) noexcept;
EntropyKind parse_entropy_kind(std::string_view text);

/// Conditional entropy H^kind_α(X|Y) in nats, evaluated directly from its
/// definition. At α = 1 the four Rényi kinds return the Shannon value; at
/// α = ∞ only the Arimoto kind is defined (it becomes the min-entropy).
/// Output symbols with p(y) = 0 are skipped. `min_entropy` ignores α.
double cond_entropy(const JointDistribution& joint, const Alpha<double>& alpha, EntropyKind kind);

/// Same, for the channel driven by a uniform input.
double cond_entropy(const BinaryChannel& channel, const Alpha<double>& alpha, EntropyKind kind);

/// −ln Σ_y p(y) max_x p(x|y).
double cond_min_entropy(const JointDistribution& joint);

/// K^A = e^((1−α)/α·H^A), K^H = e^((1−α)H^H), K^J = e^((1−α)H^J). Only the
/// arimoto, hayashi and jizba kinds are accepted; α = 1 is unsupported.
double k_cond(const JointDistribution& joint, const Alpha<double>& alpha, EntropyKind kind);

/// K-value assembled from per-symbol binary K-values instead of the direct
/// definition: K^A = Σ_y p(y) k^A_α(p(·|y)), K^H = Σ_y p(y) k^H_α(p(·|y)),
/// K^J = Σ_y p̃(y) k^H_α(p(·|y)) with the tilted weights p̃ ∝ p(y)^α.
/// Binary tables only.
double k_cond_by_decomposition(const JointDistribution& joint, const Alpha<double>& alpha,
                               EntropyKind kind);

/// Converts a K-value back to an entropy for the given kind.
double entropy_from_k(double k, const Alpha<double>& alpha, EntropyKind kind);

/// Inverse of `entropy_from_k`.
double k_from_entropy(double h, const Alpha<double>& alpha, EntropyKind kind);

/// p̃(y) = p(y)^α / Σ p(y)^α.
std::vector<double> tilt(std::span<const double> distribution, const Alpha<double>& alpha);

/// Merges outputs whose likelihood pairs are proportional (equal posteriors,
/// relative tolerance 1e-10 on the cross products) and drops zero-mass
/// outputs. Leaves the Arimoto, Hayashi, Cachin, Shannon and min-entropy
/// values unchanged; changes the Jizba value in general.
BinaryChannel merge_equivalent_outputs(const BinaryChannel& channel);

/// Random channel with `outputs` symbols; each row is an independent
/// normalized vector of uniform draws.
BinaryChannel random_channel(std::mt19937_64& rng, std::size_t outputs);

/// Random binary-input joint with `outputs` symbols, full support.
JointDistribution random_joint(std::mt19937_64& rng, std::size_t outputs);

}  // namespace renyi
