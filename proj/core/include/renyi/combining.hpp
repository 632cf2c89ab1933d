#pragma once

#include <optional>
#include <string_view>

#include "renyi/alpha.hpp"
#include "renyi/channels.hpp"
#include "renyi/entropy_core.hpp"

namespace renyi {

/// Joint of (X₁ ⊕ X₂, (Y₁, Y₂)) for independent binary pairs. The output
/// alphabet is the full product, y = y₁·|Y₂| + y₂, never merged.
JointDistribution combine_pair(const JointDistribution& first, const JointDistribution& second);

/// h_α(h_α⁻¹(H₁) ∗ h_α⁻¹(H₂)); met with equality by two BSCs.
template <class Real>
Real bsc_bound(const Real& h1, const Real& h2, const Alpha<Real>& alpha) {
  return binary_renyi(convolve(binary_renyi_inverse(h1, alpha), binary_renyi_inverse(h2, alpha)),
                      alpha);
}

/// Expression met with equality by two BECs.
///
/// Arimoto, Hayashi, Jizba: `first`/`second` are K-values and the result is
///   c_α · ln[(δ − K₁)(δ − K₂)/(1 − δ) + δ]
/// with c_α = α/(1−α), δ = δ^A_α for Arimoto and c_α = 1/(1−α), δ = δ^H_α
/// for Hayashi and Jizba. Cachin: the arguments are entropies and the result
/// is ln 2 − (ln 2 − H₁)(ln 2 − H₂)/ln 2, which is also the Shannon form.
template <class Real>
Real bec_bound(const Real& first, const Real& second, const Alpha<Real>& alpha,
               EntropyKind kind) {
  using std::log;
  if (kind == EntropyKind::cachin || kind == EntropyKind::shannon) {
    const Real ln2 = ln_two<Real>();
    return ln2 - (ln2 - first) * (ln2 - second) / ln2;
  }
  if (kind != EntropyKind::arimoto && kind != EntropyKind::hayashi &&
      kind != EntropyKind::jizba) {
    throw DomainError("bec_bound: unsupported entropy kind");
  }
  const bool arimoto = kind == EntropyKind::arimoto;
  const Real delta = delta_const(alpha, arimoto ? KTransform::arimoto : KTransform::hayashi);
  Real prefactor;
  if (alpha.is_infinite()) {
    prefactor = Real(-1);
  } else if (arimoto) {
    prefactor = alpha.value() * alpha.inverse_one_minus();
  } else {
    prefactor = alpha.inverse_one_minus();
  }
  const Real argument = (delta - first) * (delta - second) / (1 - delta) + delta;
  if (!(argument > 0)) {
    throw DomainError("bec_bound: logarithm argument is not positive");
  }
  return prefactor * log(argument);
}

/// Δ(BSC(p), α): the BSC expression minus the BEC expression, both
/// evaluated for two copies of BSC(p). `kind` is arimoto, hayashi or cachin.
template <class Real>
Real gap_delta(const Real& p, const Alpha<Real>& alpha, EntropyKind kind) {
  if (!(p > 0) || p > Real(0.5)) {
    throw DomainError("gap_delta: crossover must lie in (0, 1/2]");
  }
  if (alpha.is_shannon()) {
    throw UnsupportedOrder("gap_delta: alpha = 1 has no K-transform");
  }
  const Real bsc = binary_renyi(convolve(p, p), alpha);
  switch (kind) {
    case EntropyKind::arimoto: {
      const Real k = k_value(p, alpha, KTransform::arimoto);
      return bsc - bec_bound(k, k, alpha, kind);
    }
    case EntropyKind::hayashi: {
      const Real k = k_value(p, alpha, KTransform::hayashi);
      return bsc - bec_bound(k, k, alpha, kind);
    }
    case EntropyKind::cachin: {
      const Real h = binary_renyi(p, alpha);
      return bsc - bec_bound(h, h, alpha, kind);
    }
    default:
      throw DomainError("gap_delta: kind must be A, H or C");
  }
}

/// Convexity behaviour of the composition function behind each entropy kind,
/// as established (proven) or conjectured for each range of α.
enum class Regime {
  convex,
  concave,
  linear,
  neither,
  conjectured_convex,
  conjectured_concave,
  shannon,
};

struct RegimeInfo {
  Regime regime;
  bool proven;  ///< false for conjectures and for ranges supported only numerically
};

std::string_view to_string(Regime regime) noexcept;

/// The composition whose convexity controls the bounds for `kind`:
/// A → κ^A, H and J → κ^H, C → ℏ.
KKKind composition_for(EntropyKind kind);

RegimeInfo convexity_regime(KKKind function, const Alpha<double>& alpha);

/// Which side of the actual value the BSC expression falls on.
enum class Orientation { bsc_lower, bsc_upper, equality, undetermined };

std::string_view to_string(Orientation orientation) noexcept;

Orientation orientation_for(const RegimeInfo& regime, const Alpha<double>& alpha);

enum class Verdict { sandwiched, bsc_violated, bec_violated, both_violated };

std::string_view to_string(Verdict verdict) noexcept;

/// Actual entropy of the combined pair against both bound expressions.
/// Slacks are signed distances in nats, positive when the bound holds in the
/// orientation implied by the regime (for `equality`, minus the absolute
/// mismatch; for `undetermined`, relative to whichever expression is lower).
struct BoundReport {
  EntropyKind kind;
  Alpha<double> alpha;
  double h1;
  double h2;
  double actual;
  double bsc_bound;
  double bec_bound;
  RegimeInfo regime;
  Orientation orientation;
  double bsc_slack;
  double bec_slack;
  Verdict verdict;
  /// True when the orientation rests on a proven regime, so a violation is
  /// a genuine failure rather than information.
  bool asserted;
  double tolerance;
};

inline constexpr double kBoundSlackTolerance = 1e-10;

/// `kind` ∈ {A, H, J, C, shannon}; α = 1 routes every kind to the Shannon
/// expressions (Mrs. Gerber below, the erasure form above).
BoundReport check_bounds(const JointDistribution& first, const JointDistribution& second,
                         const Alpha<double>& alpha, EntropyKind kind);

struct ShannonBaselines {
  double mgl_lower;   ///< h(h⁻¹(H₁) ∗ h⁻¹(H₂))
  double bec_upper;   ///< ln 2 − (ln 2 − H₁)(ln 2 − H₂)/ln 2
  double plus_lower;  ///< H₁H₂/ln 2, for H(X₂ | X₁+X₂, Y₁Y₂)
  double plus_upper;  ///< H₁ + H₂ − mgl_lower
  std::optional<double> gx15_lower;  ///< present only when H₁ = H₂
};

ShannonBaselines shannon_baselines(double h1, double h2);

/// 0.799·H(ln 2 − H)/ln 2 + H. Throws DomainError unless h1 == h2.
double gx15_lower(double h1, double h2);

/// Shannon H(X₂ | X₁ ⊕ X₂, Y₁, Y₂).
double second_branch_entropy(const JointDistribution& first, const JointDistribution& second);

}  // namespace renyi
