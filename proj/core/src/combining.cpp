#include "renyi/combining.hpp"

#include <algorithm>
#include <cmath>

#include "renyi/errors.hpp"

namespace renyi {
namespace {

constexpr double kGx15Constant = 0.799;

bool in_open(double a, double lo, double hi) { return a > lo && a < hi; }

}  // namespace

JointDistribution combine_pair(const JointDistribution& first, const JointDistribution& second) {
  if (!first.is_binary() || !second.is_binary()) {
    throw DomainError("combine_pair: binary inputs required");
  }
  const std::size_t m1 = first.y_size();
  const std::size_t m2 = second.y_size();
  const std::size_t ny = m1 * m2;
  std::vector<double> mass(2 * ny, 0.0);
  for (std::size_t x1 = 0; x1 < 2; ++x1) {
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      const std::size_t x = x1 ^ x2;
      for (std::size_t y1 = 0; y1 < m1; ++y1) {
        for (std::size_t y2 = 0; y2 < m2; ++y2) {
          mass[x * ny + y1 * m2 + y2] += first(x1, y1) * second(x2, y2);
        }
      }
    }
  }
  return JointDistribution(2, ny, std::move(mass));
}

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::convex:
      return "convex";
    case Regime::concave:
      return "concave";
    case Regime::linear:
      return "linear";
    case Regime::neither:
      return "neither";
    case Regime::conjectured_convex:
      return "conjectured_convex";
    case Regime::conjectured_concave:
      return "conjectured_concave";
    case Regime::shannon:
      return "shannon";
  }
  return "?";
}

std::string_view to_string(Orientation orientation) noexcept {
  switch (orientation) {
    case Orientation::bsc_lower:
      return "bsc_lower";
    case Orientation::bsc_upper:
      return "bsc_upper";
    case Orientation::equality:
      return "equality";
    case Orientation::undetermined:
      return "undetermined";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::sandwiched:
      return "sandwiched";
    case Verdict::bsc_violated:
      return "bsc_violated";
    case Verdict::bec_violated:
      return "bec_violated";
    case Verdict::both_violated:
      return "both_violated";
  }
  return "?";
}

KKKind composition_for(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::arimoto:
      return KKKind::kk_arimoto;
    case EntropyKind::hayashi:
    case EntropyKind::jizba:
      return KKKind::kk_hayashi;
    case EntropyKind::cachin:
      return KKKind::hh;
    default:
      throw DomainError("composition_for: kind has no associated composition function");
  }
}

RegimeInfo convexity_regime(KKKind function, const Alpha<double>& alpha) {
  if (alpha.is_shannon()) {
    return {Regime::shannon, true};
  }
  switch (function) {
    case KKKind::kk_hayashi: {
      if (alpha.is_infinite()) {
        throw UnsupportedOrder("kappa^H has no infinite-order form");
      }
      const double a = alpha.value();
      if (a == 2.0 || a == 3.0) return {Regime::linear, true};
      if (a < 1.0) return {Regime::convex, true};
      if (a < 2.0) return {Regime::concave, true};
      if (a < 3.0) return {Regime::convex, true};
      return {Regime::concave, true};
    }
    case KKKind::kk_arimoto: {
      if (alpha.is_infinite()) return {Regime::linear, true};
      const double a = alpha.value();
      if (a >= 2.0) return {Regime::convex, true};
      if (in_open(a, 1.58, 1.97)) return {Regime::neither, true};
      if (a > 1.5783) return {Regime::neither, false};
      if (a > 1.0) return {Regime::conjectured_concave, false};
      return {Regime::conjectured_convex, false};
    }
    case KKKind::hh: {
      if (alpha.is_infinite()) {
        throw UnsupportedOrder("the Cachin composition has no infinite-order form");
      }
      const double a = alpha.value();
      if (a >= 2.0) return {Regime::conjectured_concave, false};
      if (in_open(a, 1.387, 1.95)) return {Regime::neither, true};
      if (a > 1.3863) return {Regime::neither, false};
      return {Regime::conjectured_convex, false};
    }
  }
  throw DomainError("convexity_regime: unknown function");
}

Orientation orientation_for(const RegimeInfo& regime, const Alpha<double>& alpha) {
  const bool above_one = alpha.is_infinite() || alpha.value() > 1.0;
  switch (regime.regime) {
    case Regime::shannon:
      return Orientation::bsc_lower;
    case Regime::linear:
      return Orientation::equality;
    case Regime::convex:
    case Regime::conjectured_convex:
      return above_one ? Orientation::bsc_upper : Orientation::bsc_lower;
    case Regime::concave:
    case Regime::conjectured_concave:
      return above_one ? Orientation::bsc_lower : Orientation::bsc_upper;
    case Regime::neither:
      return Orientation::undetermined;
  }
  return Orientation::undetermined;
}

BoundReport check_bounds(const JointDistribution& first, const JointDistribution& second,
                         const Alpha<double>& alpha, EntropyKind kind) {
  if (kind == EntropyKind::min_entropy) {
    throw DomainError("check_bounds: the min-entropy has no combining bounds here");
  }
  const bool shannon = kind == EntropyKind::shannon || alpha.is_shannon();
  const Alpha<double> order = shannon ? Alpha<double>::shannon() : alpha;
  const EntropyKind evaluated = shannon ? EntropyKind::shannon : kind;

  const double h1 = cond_entropy(first, order, evaluated);
  const double h2 = cond_entropy(second, order, evaluated);
  const double actual = cond_entropy(combine_pair(first, second), order, evaluated);
  const double bsc = bsc_bound(h1, h2, order);
  double bec = 0;
  if (shannon || kind == EntropyKind::cachin) {
    bec = bec_bound(h1, h2, order, EntropyKind::cachin);
  } else {
    bec = bec_bound(k_from_entropy(h1, order, kind), k_from_entropy(h2, order, kind), order,
                    kind);
  }

  const RegimeInfo regime =
      shannon ? RegimeInfo{Regime::shannon, true} : convexity_regime(composition_for(kind), order);
  const Orientation orientation = orientation_for(regime, order);

  double bsc_slack = 0;
  double bec_slack = 0;
  switch (orientation) {
    case Orientation::bsc_lower:
      bsc_slack = actual - bsc;
      bec_slack = bec - actual;
      break;
    case Orientation::bsc_upper:
      bsc_slack = bsc - actual;
      bec_slack = actual - bec;
      break;
    case Orientation::equality:
      bsc_slack = -std::abs(actual - bsc);
      bec_slack = -std::abs(actual - bec);
      break;
    case Orientation::undetermined:
      if (bsc <= bec) {
        bsc_slack = actual - bsc;
        bec_slack = bec - actual;
      } else {
        bsc_slack = bsc - actual;
        bec_slack = actual - bec;
      }
      break;
  }
  const bool bsc_ok = bsc_slack >= -kBoundSlackTolerance;
  const bool bec_ok = bec_slack >= -kBoundSlackTolerance;
  Verdict verdict = Verdict::sandwiched;
  if (!bsc_ok && !bec_ok) {
    verdict = Verdict::both_violated;
  } else if (!bsc_ok) {
    verdict = Verdict::bsc_violated;
  } else if (!bec_ok) {
    verdict = Verdict::bec_violated;
  }
  const bool asserted = regime.proven && orientation != Orientation::undetermined;
  return BoundReport{kind,      order,     h1,        h2,         actual,  bsc,
                     bec,       regime,    orientation, bsc_slack, bec_slack, verdict,
                     asserted,  kBoundSlackTolerance};
}

double gx15_lower(double h1, double h2) {
  if (h1 != h2) {
    throw DomainError("gx15_lower: defined only for equal entropies");
  }
  const double ln2 = std::log(2.0);
  return kGx15Constant * h1 * (ln2 - h1) / ln2 + h1;
}

ShannonBaselines shannon_baselines(double h1, double h2) {
  const double ln2 = std::log(2.0);
  const double slack = NumericTraits<double>::domain_slack();
  if (h1 < -slack || h2 < -slack || h1 > ln2 + slack || h2 > ln2 + slack) {
    throw DomainError("shannon_baselines: entropies must lie in [0, ln 2]");
  }
  const Alpha<double> shannon = Alpha<double>::shannon();
  ShannonBaselines out{};
  out.mgl_lower = bsc_bound(h1, h2, shannon);
  out.bec_upper = bec_bound(h1, h2, shannon, EntropyKind::shannon);
  out.plus_lower = h1 * h2 / ln2;
  out.plus_upper = h1 + h2 - out.mgl_lower;
  if (h1 == h2) {
    out.gx15_lower = gx15_lower(h1, h2);
  }
  return out;
}

double second_branch_entropy(const JointDistribution& first, const JointDistribution& second) {
  if (!first.is_binary() || !second.is_binary()) {
    throw DomainError("second_branch_entropy: binary inputs required");
  }
  // x = x₂; side information = (x₁ ⊕ x₂, y₁, y₂).
  const std::size_t m1 = first.y_size();
  const std::size_t m2 = second.y_size();
  const std::size_t ny = 2 * m1 * m2;
  std::vector<double> mass(2 * ny, 0.0);
  for (std::size_t x2 = 0; x2 < 2; ++x2) {
    for (std::size_t s = 0; s < 2; ++s) {
      const std::size_t x1 = s ^ x2;
      for (std::size_t y1 = 0; y1 < m1; ++y1) {
        for (std::size_t y2 = 0; y2 < m2; ++y2) {
          mass[x2 * ny + (s * m1 + y1) * m2 + y2] = first(x1, y1) * second(x2, y2);
        }
      }
    }
  }
  return cond_entropy(JointDistribution(2, ny, std::move(mass)), Alpha<double>::shannon(),
                      EntropyKind::shannon);
}

}  // namespace renyi
