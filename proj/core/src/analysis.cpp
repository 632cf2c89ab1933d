#include "renyi/analysis.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

std::string describe(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

std::vector<std::string> split_colon(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t colon = text.find(':', begin);
    parts.emplace_back(text.substr(begin, colon - begin));
    if (colon == std::string_view::npos) {
      break;
    }
    begin = colon + 1;
  }
  return parts;
}

double parse_double_or_throw(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return value;
  } catch (const std::exception&) {
    throw ConfigError(std::string("alpha range: cannot parse ") + what + " '" + text + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------- AlphaRange

AlphaRange::AlphaRange(std::string start, std::string end, std::string step)
    : start_(std::move(start)), end_(std::move(end)), step_(std::move(step)), count_(0) {
  const double a = parse_double_or_throw(start_, "start");
  const double b = parse_double_or_throw(end_, "end");
  const double s = parse_double_or_throw(step_, "step");
  if (!(s > 0) || !std::isfinite(s)) {
    throw ConfigError("alpha range: step must be positive");
  }
  if (!(a > 0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ConfigError("alpha range: bounds must be finite and start > 0");
  }
  if (!(b > a)) {
    throw ConfigError("alpha range: end must exceed start");
  }
  // End-exclusive; the small offset keeps an end that is an exact grid
  // point out of the range despite rounding in (b − a)/s.
  count_ = static_cast<std::size_t>(std::ceil((b - a) / s - 1e-9));
}

std::vector<std::string> AlphaRange::texts() const {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal first(start_);
  const Decimal stride(step_);
  std::vector<std::string> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    out.push_back(Decimal(first + stride * static_cast<unsigned>(i)).str());
  }
  return out;
}

AlphaRange AlphaRange::parse(std::string_view text) {
  const auto parts = split_colon(text);
  if (parts.size() != 3) {
    throw ConfigError("alpha range must have the form start:end:step");
  }
  return AlphaRange(parts[0], parts[1], parts[2]);
}

std::string_view to_string(Classification classification) noexcept {
  switch (classification) {
    case Classification::convex:
      return "convex";
    case Classification::concave:
      return "concave";
    case Classification::linear:
      return "linear";
    case Classification::neither:
      return "neither";
  }
  return "?";
}

std::string decimal_text(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

double default_classification_tolerance(Precision precision) noexcept {
  return precision == Precision::extended ? 1e-20 : 1e-9;
}

// ------------------------------------------------------- convexity by grid

namespace {

template <class Real>
ConvexityVerdict classify_impl(KKKind function, const std::string& alpha_text,
                               const ConvexityOptions& options) {
  const auto alpha = Alpha<Real>::parse(alpha_text);
  if (alpha.is_shannon()) {
    throw UnsupportedOrder("classify: K-transforms degenerate at alpha = 1");
  }
  if (alpha.is_infinite() && function != KKKind::kk_arimoto) {
    throw UnsupportedOrder("classify: only kappa^A has an infinite-order form");
  }
  if (options.grid_n < 16) {
    throw ConfigError("classify: grid must have at least 16 points");
  }
  const std::size_t n = options.grid_n;
  const double tolerance =
      options.tolerance.value_or(default_classification_tolerance(options.precision));

  const auto [lo, hi] = kk_domain(alpha, function);
  const Real margin(options.margin);
  const Real first = lo + margin;
  const Real spacing = (hi - lo - 2 * margin) / static_cast<unsigned>(n - 1);

  // Map each grid point back to a crossover once; kk(g_i, g_j) is then the
  // forward transform of p_i ∗ p_j.
  std::vector<Real> grid(n);
  std::vector<Real> crossover(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = first + spacing * static_cast<unsigned>(i);
    switch (function) {
      case KKKind::kk_arimoto:
        crossover[i] = k_inverse(grid[i], alpha, KTransform::arimoto);
        break;
      case KKKind::kk_hayashi:
        crossover[i] = k_inverse(grid[i], alpha, KTransform::hayashi);
        break;
      case KKKind::hh:
        crossover[i] = binary_renyi_inverse(grid[i], alpha);
        break;
    }
  }
  auto forward = [&](const Real& p) -> Real {
    switch (function) {
      case KKKind::kk_arimoto:
        return k_value(p, alpha, KTransform::arimoto);
      case KKKind::kk_hayashi:
        return k_value(p, alpha, KTransform::hayashi);
      case KKKind::hh:
        return binary_renyi(p, alpha);
    }
    return Real(0);
  };

  ConvexityVerdict verdict{function,
                           alpha.str(),
                           options.precision,
                           Classification::neither,
                           -std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity(),
                           {},
                           n,
                           tolerance,
                           options.margin};
  verdict.slices.reserve(n);
  std::vector<Real> column(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      column[i] = forward(convolve(crossover[i], crossover[j]));
    }
    SliceEvidence slice{to_double(grid[j]), -std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity()};
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double d = to_double(Real(column[i - 1] - 2 * column[i] + column[i + 1]));
      slice.max_second_difference = std::max(slice.max_second_difference, d);
      slice.min_second_difference = std::min(slice.min_second_difference, d);
    }
    verdict.max_second_difference =
        std::max(verdict.max_second_difference, slice.max_second_difference);
    verdict.min_second_difference =
        std::min(verdict.min_second_difference, slice.min_second_difference);
    verdict.slices.push_back(slice);
  }

  const double up = verdict.max_second_difference;
  const double down = verdict.min_second_difference;
  if (up < tolerance && down > -tolerance) {
    verdict.classification = Classification::linear;
  } else if (down > -tolerance) {
    verdict.classification = Classification::convex;
  } else if (up < tolerance) {
    verdict.classification = Classification::concave;
  } else {
    verdict.classification = Classification::neither;
  }
  return verdict;
}

}  // namespace

ConvexityVerdict classify_convexity(KKKind function, const std::string& alpha,
                                    const ConvexityOptions& options) {
  if (options.precision == Precision::extended) {
    return classify_impl<Extended>(function, alpha, options);
  }
  return classify_impl<double>(function, alpha, options);
}

ConvexityVerdict classify_convexity(KKKind function, double alpha,
                                    const ConvexityOptions& options) {
  return classify_convexity(function, std::isinf(alpha) ? std::string("inf") : decimal_text(alpha),
                            options);
}

// ------------------------------------------------------------- gap curves

namespace {

template <class Real>
std::vector<GapPoint> gap_curve_impl(EntropyKind kind, const std::string& p_text,
                                     const AlphaRange& range) {
  const Real p = parse_real<Real>(p_text);
  std::vector<GapPoint> points;
  points.reserve(range.size());
  for (const std::string& text : range.texts()) {
    const Real a = parse_real<Real>(text);
    if (a == 1) {
      continue;  // no K-transform at the Shannon point
    }
    const Alpha<Real> alpha(a);
    const Real delta = gap_delta(p, alpha, kind);
    points.push_back({to_double(a), text, to_double(delta), format_real(delta)});
  }
  return points;
}

GapScan run_gap_scan(EntropyKind kind, std::string p, AlphaRange range, int expected_sign,
                     Precision precision) {
  GapScan scan{std::move(p),
               std::move(range),
               expected_sign,
               {},
               {},
               std::numeric_limits<double>::infinity(),
               -std::numeric_limits<double>::infinity()};
  scan.points = gap_curve(kind, scan.p, scan.range, precision);
  for (const GapPoint& point : scan.points) {
    const double signed_gap = expected_sign * point.delta;
    scan.worst_margin = std::min(scan.worst_margin, signed_gap);
    scan.best_margin = std::max(scan.best_margin, signed_gap);
    if (!(signed_gap > 0)) {
      scan.offending_alphas.push_back(point.alpha);
    }
  }
  return scan;
}

CounterexampleReport counterexample(EntropyKind kind, const std::string& small_p,
                                    const AlphaRange& small_range, const std::string& large_p,
                                    const AlphaRange& large_range, Precision precision) {
  CounterexampleReport report{kind, precision,
                              run_gap_scan(kind, small_p, small_range, -1, precision),
                              run_gap_scan(kind, large_p, large_range, +1, precision),
                              {}};
  const double small_end = std::stod(small_range.end());
  for (const GapPoint& point : report.large_p.points) {
    if (point.alpha >= small_end || !(point.delta > 0)) {
      continue;
    }
    const EntropyKind k = kind;
    const double other = precision == Precision::extended
                             ? to_double(gap_delta(parse_real<Extended>(small_p),
                                                   Alpha<Extended>(parse_real<Extended>(
                                                       point.alpha_text)),
                                                   k))
                             : gap_delta(std::stod(small_p), Alpha<double>(point.alpha), k);
    if (other < 0) {
      report.conflicting_alphas.push_back(point.alpha);
    }
  }
  return report;
}

}  // namespace

std::vector<GapPoint> gap_curve(EntropyKind kind, const std::string& p, const AlphaRange& range,
                                Precision precision) {
  if (kind != EntropyKind::arimoto && kind != EntropyKind::hayashi &&
      kind != EntropyKind::cachin) {
    throw ConfigError("gap curve: kind must be A, H or C");
  }
  if (precision == Precision::extended) {
    return gap_curve_impl<Extended>(kind, p, range);
  }
  return gap_curve_impl<double>(kind, p, range);
}

CounterexampleReport verify_counterexample_A(Precision precision) {
  return counterexample(EntropyKind::arimoto, "1e-6", AlphaRange("1.001", "1.97", "0.005"),
                        "0.49", AlphaRange("1.581", "1.999", "0.005"), precision);
}

CounterexampleReport verify_counterexample_C(Precision precision) {
  return counterexample(EntropyKind::cachin, "1e-7", AlphaRange("1.001", "1.95", "0.005"),
                        "0.49", AlphaRange("1.388", "1.999", "0.005"), precision);
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

VerificationReport to_verification(const CounterexampleReport& report) {
  VerificationReport out{std::string("counterexample ") + std::string(to_string(report.kind)),
                         {}};
  for (const GapScan* scan : {&report.small_p, &report.large_p}) {
    const char* sign = scan->expected_sign < 0 ? "negative" : "positive";
    std::string detail = std::to_string(scan->points.size()) + " grid points, " +
                         std::to_string(scan->offending_alphas.size()) +
                         " with the wrong sign; weakest margin " + describe(scan->worst_margin);
    if (!scan->offending_alphas.empty()) {
      detail += "; first offending alpha " + describe(scan->offending_alphas.front());
    }
    out.items.push_back({"gap at p=" + scan->p + " " + sign + " on " + scan->range.str(),
                         scan->passed(), scan->worst_margin, 0.0, std::move(detail)});
  }
  out.items.push_back({"alphas with both signs", !report.conflicting_alphas.empty(),
                       static_cast<double>(report.conflicting_alphas.size()), 0.0,
                       std::to_string(report.conflicting_alphas.size()) +
                           " grid orders exhibit opposite gap signs"});
  return out;
}

// -------------------------------------------------------------- linearity

std::string_view to_string(LinearCase which) noexcept {
  switch (which) {
    case LinearCase::kk_hayashi_2:
      return "kappa^H at alpha=2";
    case LinearCase::kk_hayashi_3:
      return "kappa^H at alpha=3";
    case LinearCase::kk_arimoto_inf:
      return "kappa^A at alpha=inf";
  }
  return "?";
}

namespace {

CheckItem make_item(std::string name, double worst, double tolerance, std::string detail) {
  const bool ok = worst < tolerance;
  return {std::move(name), ok, worst, tolerance,
          "max defect " + describe(worst) + " (tolerance " + describe(tolerance) + ")" +
              (detail.empty() ? std::string() : "; " + detail)};
}

}  // namespace

VerificationReport verify_linearity(LinearCase which, std::uint64_t seed, std::size_t samples) {
  const KKKind function =
      which == LinearCase::kk_arimoto_inf ? KKKind::kk_arimoto : KKKind::kk_hayashi;
  const Alpha<double> alpha = which == LinearCase::kk_hayashi_2   ? Alpha<double>(2.0)
                              : which == LinearCase::kk_hayashi_3 ? Alpha<double>(3.0)
                                                                  : Alpha<double>::infinity();
  VerificationReport report{"linearity of " + std::string(to_string(which)), {}};

  // Midpoint defect over a grid of (x₁, x₂, y).
  {
    const auto [lo, hi] = kk_domain(alpha, function);
    constexpr std::size_t n = 24;
    constexpr double margin = 1e-4;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = lo + margin + (hi - lo - 2 * margin) * static_cast<double>(i) / (n - 1);
    }
    double worst = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const double mid = 0.5 * (grid[a] + grid[b]);
        for (double y : grid) {
          const double lhs = kk(mid, y, alpha, function);
          const double rhs = 0.5 * (kk(grid[a], y, alpha, function) + kk(grid[b], y, alpha, function));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
    report.items.push_back(
        make_item("midpoint linearity on a 24-point grid", worst, kLinearityTolerance, ""));
  }

  std::mt19937_64 rng(seed);

  // The combined pair attains the BSC expression for arbitrary channels.
  {
    std::uniform_int_distribution<std::size_t> outputs(2, 6);
    const std::vector<EntropyKind> kinds =
        alpha.is_infinite() ? std::vector<EntropyKind>{EntropyKind::arimoto}
                            : std::vector<EntropyKind>{EntropyKind::hayashi, EntropyKind::jizba};
    for (EntropyKind kind : kinds) {
      double worst = 0;
      for (std::size_t s = 0; s < samples; ++s) {
        const JointDistribution first = random_joint(rng, outputs(rng));
        const JointDistribution second = random_joint(rng, outputs(rng));
        const double h1 = cond_entropy(first, alpha, kind);
        const double h2 = cond_entropy(second, alpha, kind);
        const double actual = cond_entropy(combine_pair(first, second), alpha, kind);
        worst = std::max(worst, std::abs(actual - bsc_bound(h1, h2, alpha)));
      }
      report.items.push_back(make_item(
          "combined entropy (" + std::string(to_string(kind)) + ") equals the BSC expression",
          worst, kLinearityTolerance, std::to_string(samples) + " random channel pairs"));
    }
  }

  // k^A_∞(x ∗ c) is affine in x ∈ [1/2, 1] on either side of c = 1/2.
  if (alpha.is_infinite()) {
    std::uniform_real_distribution<double> upper(0.5, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const double x = upper(rng);
      const double c = unit(rng);
      const double xc = convolve(x, c);
      const double expected = c >= 0.5 ? 1 - xc : xc;
      worst = std::max(worst, std::abs(k_value(xc, alpha, KTransform::arimoto) - expected));
      worst = std::max(worst,
                       std::abs(k_value(convolve(1 - x, c), alpha, KTransform::arimoto) - expected));
    }
    report.items.push_back(make_item("piecewise form of k^A_inf(x*c)", worst, kLinearityTolerance,
                                     std::to_string(samples) + " random (x, c)"));
  }
  return report;
}

// ------------------------------------------------------ appendix identities

VerificationReport verify_appendix_identities(std::uint64_t seed, std::size_t samples) {
  VerificationReport report{"first-order conditions for kappa^H", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<double> orders{0.5, 1.5, 2.5, 4.0};

  // (i) closed-form derivative of h_α against central differences.
  {
    constexpr double step = 1e-6;
    double worst = 0;
    for (double a : orders) {
      const Alpha<double> alpha(a);
      for (int i = 1; i <= 49; ++i) {
        const double x = 0.02 * i;
        if (std::abs(x - 0.5) < 0.015) {
          continue;
        }
        const double fd =
            (binary_renyi(x + step, alpha) - binary_renyi(x - step, alpha)) / (2 * step);
        const double exact = appendix_hprime(x, alpha);
        worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
      }
    }
    report.items.push_back(make_item("(i) h' closed form vs central difference (relative)", worst,
                                     1e-6, "step 1e-6"));
  }

  // (ii) y = x is a stationary point of g_α^x.
  {
    constexpr double step = 1e-6;
    std::uniform_real_distribution<double> order(0.3, 5.0);
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      double a = order(rng);
      if (std::abs(a - 1) < 0.05) {
        a += 0.1;
      }
      const Alpha<double> alpha(a);
      const double x = 0.05 + 0.9 * unit(rng);
      if (std::abs(x - 0.5) < 0.02) {
        continue;
      }
      const double c = unit(rng);
      const double fd =
          (appendix_g(x + step, x, c, alpha) - appendix_g(x - step, x, c, alpha)) / (2 * step);
      worst = std::max(worst, std::abs(fd));
    }
    report.items.push_back(
        make_item("(ii) g'(x) = 0 at y = x", worst, 1e-6, std::to_string(samples) + " random (alpha, x, c)"));
  }

  // (iii) polynomial forms of k^H_2(y∗c) and k^H_3(y∗c).
  {
    double worst = 0;
    for (int order : {2, 3}) {
      const Alpha<double> alpha(static_cast<double>(order));
      for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
          const double y = i / 9.0;
          const double c = j / 9.0;
          const double direct = k_value(convolve(y, c), alpha, KTransform::hayashi);
          worst = std::max(worst, std::abs(direct - closed_form_k23(y, c, order)));
        }
      }
    }
    report.items.push_back(
        make_item("(iii) closed forms of k^H_2(y*c), k^H_3(y*c)", worst, 1e-14, "10x10 grid"));
  }

  // (iv) g_α^x does not depend on y at α = 2, 3.
  {
    double worst = 0;
    for (double a : {2.0, 3.0}) {
      const Alpha<double> alpha(a);
      for (std::size_t s = 0; s < 20; ++s) {
        const double x = 0.02 + 0.96 * unit(rng);
        const double c = unit(rng);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int i = 1; i < 50; ++i) {
          const double g = appendix_g(i / 50.0, x, c, alpha);
          lo = std::min(lo, g);
          hi = std::max(hi, g);
        }
        worst = std::max(worst, hi - lo);
      }
    }
    report.items.push_back(
        make_item("(iv) g constant in y at alpha = 2, 3", worst, 1e-12, "spread over 49 y values"));
  }

  // (v) sign of g(y) − g(x) agrees with the grid classification of κ^H.
  {
    constexpr double tolerance = 1e-10;
    double worst = 0;
    std::string summary;
    for (double a : orders) {
      const Alpha<double> alpha(a);
      const ConvexityVerdict verdict = classify_convexity(KKKind::kk_hayashi, a);
      const double sign = verdict.classification == Classification::convex    ? 1.0
                          : verdict.classification == Classification::concave ? -1.0
                                                                              : 0.0;
      summary += decimal_text(a) + ":" + std::string(to_string(verdict.classification)) + " ";
      if (sign == 0) {
        worst = std::numeric_limits<double>::infinity();
        continue;
      }
      for (std::size_t s = 0; s < samples; ++s) {
        const double x = 0.01 + 0.98 * unit(rng);
        const double y = 0.01 + 0.98 * unit(rng);
        const double c = unit(rng);
        if (std::abs(x - 0.5) < 0.02) {
          continue;
        }
        const double diff = sign * (appendix_g(y, x, c, alpha) - appendix_g(x, x, c, alpha));
        worst = std::max(worst, -diff);
      }
    }
    worst = std::max(worst, 0.0);
    report.items.push_back(make_item("(v) g(y) - g(x) sign matches the grid classification", worst,
                                     tolerance, summary));
  }
  return report;
}

// -------------------------------------------------------- conjecture scan

ConjectureScan conjecture_scan(KKKind function, const AlphaRange& range,
                               const ConvexityOptions& options) {
  ConjectureScan scan{function, range, {}, std::nullopt, std::nullopt, std::nullopt};
  std::optional<double> last_definite;
  for (const std::string& text : range.texts()) {
    if (std::stod(text) == 1.0) {
      continue;
    }
    ConvexityVerdict verdict = classify_convexity(function, text, options);
    const double a = std::stod(text);
    if (verdict.classification == Classification::neither) {
      if (!scan.first_neither_alpha) {
        scan.first_neither_alpha = a;
        scan.last_definite_alpha = last_definite;
      }
    } else if (verdict.classification != Classification::linear && !scan.first_neither_alpha) {
      last_definite = a;
    }
    scan.verdicts.push_back(std::move(verdict));
  }
  if (function != KKKind::kk_hayashi) {
    const EntropyKind kind = function == KKKind::kk_arimoto ? EntropyKind::arimoto : EntropyKind::cachin;
    const std::string small_p = function == KKKind::kk_arimoto ? "1e-6" : "1e-7";
    const auto small = gap_curve(kind, small_p, range, options.precision);
    const auto large = gap_curve(kind, "0.49", range, options.precision);
    for (std::size_t i = 0; i < small.size(); ++i) {
      if (small[i].delta < 0 && large[i].delta > 0) {
        scan.gap_sign_transition = small[i].alpha;
        break;
      }
    }
  }
  return scan;
}

}  // namespace renyi
