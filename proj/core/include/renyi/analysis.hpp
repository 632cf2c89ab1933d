#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "renyi/combining.hpp"
#include "renyi/entropy_core.hpp"
#include "renyi/precision.hpp"

namespace renyi {

/// Arithmetic grid of Rényi orders, start:end:step, end-exclusive. The
/// bounds are kept as decimal text so that extended-precision runs use the
/// exact decimal grid points.
class AlphaRange {
 public:
  AlphaRange(std::string start, std::string end, std::string step);

  /// Parses "start:end:step".
  static AlphaRange parse(std::string_view text);

  std::size_t size() const noexcept { return count_; }
  const std::string& start() const noexcept { return start_; }
  const std::string& end() const noexcept { return end_; }
  const std::string& step() const noexcept { return step_; }
  std::string str() const { return start_ + ":" + end_ + ":" + step_; }

  template <class Real>
  std::vector<Real> values() const {
    std::vector<Real> out;
    out.reserve(count_);
    for (const std::string& text : texts()) {
      out.push_back(parse_real<Real>(text));
    }
    return out;
  }

  /// Grid points as exact decimal text (start + i·step in decimal arithmetic).
  std::vector<std::string> texts() const;

 private:
  std::string start_;
  std::string end_;
  std::string step_;
  std::size_t count_;
};

enum class Classification { convex, concave, linear, neither };

std::string_view to_string(Classification classification) noexcept;

struct SliceEvidence {
  double y;
  double max_second_difference;
  double min_second_difference;
};

/// Outcome of a grid scan of x ↦ kk(x, y) for every grid value of y.
/// `neither` means some second difference exceeds +tolerance and another
/// falls below −tolerance; `linear` means all lie within ±tolerance.
struct ConvexityVerdict {
  KKKind function;
  std::string alpha;
  Precision precision;
  Classification classification;
  double max_second_difference;
  double min_second_difference;
  std::vector<SliceEvidence> slices;
  std::size_t grid_n;
  double tolerance;
  double margin;
};

struct ConvexityOptions {
  std::size_t grid_n = 64;
  /// Defaults to 1e-9 (double) or 1e-20 (extended).
  std::optional<double> tolerance;
  /// Distance kept from both ends of the domain, where the inverse
  /// K-functions have unbounded slope.
  double margin = 1e-4;
  Precision precision = Precision::native;
};

double default_classification_tolerance(Precision precision) noexcept;

/// `alpha` is decimal text or "inf" (κ^A only).
ConvexityVerdict classify_convexity(KKKind function, const std::string& alpha,
                                    const ConvexityOptions& options = {});
ConvexityVerdict classify_convexity(KKKind function, double alpha,
                                    const ConvexityOptions& options = {});

/// Shortest decimal text that reads back as `value`.
std::string decimal_text(double value);

struct GapPoint {
  double alpha;
  std::string alpha_text;
  double delta;
  std::string delta_text;  ///< 17 (double) or 40 (extended) significant digits
};

/// Δ^kind(BSC(p), α) along an α grid; kind ∈ {A, H, C}.
std::vector<GapPoint> gap_curve(EntropyKind kind, const std::string& p, const AlphaRange& range,
                                Precision precision);

struct GapScan {
  std::string p;
  AlphaRange range;
  int expected_sign;
  std::vector<GapPoint> points;
  std::vector<double> offending_alphas;
  double worst_margin;  ///< min over the grid of expected_sign · Δ
  double best_margin;   ///< max over the grid of expected_sign · Δ
  bool passed() const noexcept { return offending_alphas.empty(); }
};

/// Two BSCs whose gaps take opposite signs on an overlapping α range; on
/// the overlap the composition function can be neither convex nor concave.
struct CounterexampleReport {
  EntropyKind kind;
  Precision precision;
  GapScan small_p;
  GapScan large_p;
  /// Grid points of `large_p.range` that also lie in `small_p`'s range and
  /// carry opposite signs.
  std::vector<double> conflicting_alphas;
  bool passed() const noexcept { return small_p.passed() && large_p.passed(); }
};

/// Δ^A(BSC(1e-6), α) < 0 on 1.001:1.97:0.005 and Δ^A(BSC(0.49), α) > 0 on
/// 1.581:1.999:0.005.
CounterexampleReport verify_counterexample_A(Precision precision);

/// Δ^C(BSC(1e-7), α) < 0 on 1.001:1.95:0.005 and Δ^C(BSC(0.49), α) > 0 on
/// 1.388:1.999:0.005.
CounterexampleReport verify_counterexample_C(Precision precision);

struct CheckItem {
  std::string name;
  bool passed;
  double worst;      ///< worst observed defect (units depend on the check)
  double tolerance;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::vector<CheckItem> items;
  bool passed() const noexcept;
};

VerificationReport to_verification(const CounterexampleReport& report);

enum class LinearCase { kk_hayashi_2, kk_hayashi_3, kk_arimoto_inf };

std::string_view to_string(LinearCase which) noexcept;

inline constexpr double kLinearityTolerance = 1e-10;

/// Midpoint-linearity defect on a grid, plus equality of the combined-pair
/// entropy with the BSC expression on random channel pairs. For κ^A_∞ the
/// piecewise form of k^A_∞(x ∗ c) is also checked directly.
VerificationReport verify_linearity(LinearCase which, std::uint64_t seed = 0,
                                    std::size_t samples = 500);

/// The first-order-condition identities behind the κ^H convexity regimes:
/// (i) h'_α closed form vs finite differences, (ii) stationarity of g_α^x at
/// y = x, (iii) closed forms of k^H_2(y∗c), k^H_3(y∗c), (iv) g_α^x constant
/// in y at α ∈ {2, 3}, (v) the sign of g_α^x(y) − g_α^x(x) agreeing with the
/// grid classification of κ^H at α ∈ {0.5, 1.5, 2.5, 4}.
VerificationReport verify_appendix_identities(std::uint64_t seed = 0, std::size_t samples = 100);

/// Classification per α, reported as numerical evidence only.
struct ConjectureScan {
  KKKind function;
  AlphaRange range;
  std::vector<ConvexityVerdict> verdicts;
  /// Last α classified convex/concave before the first `neither`.
  std::optional<double> last_definite_alpha;
  std::optional<double> first_neither_alpha;
  /// Smallest grid α at which the two counterexample gaps (small and large
  /// crossover) have opposite signs; κ^A and ℏ only.
  std::optional<double> gap_sign_transition;
};

ConjectureScan conjecture_scan(KKKind function, const AlphaRange& range,
                               const ConvexityOptions& options = {});

}  // namespace renyi
