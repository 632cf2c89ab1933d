#pragma once

// Scalar kernels for binary Rényi entropies: h_α and its inverse, the binary
// convolution, the K-transforms k^A_α / k^H_α with their inverses, the
// bivariate composition functions, and the one-dimensional functions used
// when testing convexity of the Hayashi composition through first-order
// conditions.
//
// Every function is a template over the scalar type and is instantiated for
// `double` and `renyi::Extended`. All entropies are in nats.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "renyi/alpha.hpp"
#include "renyi/errors.hpp"
#include "renyi/precision.hpp"

namespace renyi {

/// Which exponential reparameterization of the binary entropy.
enum class KTransform {
  arimoto,  ///< k^A_α(p) = (p^α + (1−p)^α)^(1/α)
  hayashi,  ///< k^H_α(p) = p^α + (1−p)^α
};

/// Bivariate composition f(f⁻¹(x) ∗ f⁻¹(y)) for f ∈ {k^A_α, k^H_α, h_α}.
enum class KKKind { kk_arimoto, kk_hayashi, hh };

std::string_view to_string(KTransform kind) noexcept;
std::string_view to_string(KKKind kind) noexcept;

namespace detail {

template <class Real>
void require_probability(const Real& p, const char* where) {
  using std::isnan;
  if (isnan(p) || p < 0 || p > 1) {
    throw DomainError(std::string(where) + ": probability outside [0,1]");
  }
}

template <class Real>
Real smaller_mass(const Real& p) {
  return p <= Real(0.5) ? p : Real(1 - p);
}

/// ln(p^α + (1−p)^α) for finite α, factoring out the larger mass so that
/// large orders do not underflow.
template <class Real>
Real log_power_sum(const Real& p, const Real& alpha) {
  using std::log;
  using std::log1p;
  using std::pow;
  const Real q = smaller_mass(p);
  const Real m = 1 - q;
  return alpha * log(m) + log1p(pow(q / m, alpha));
}

/// Inverts a function that is monotone on [0, 1/2]. `at_zero` and `at_half`
/// are its values at the two ends as computed by `value_at`.
template <class Real, class F>
Real invert_on_lower_half(F&& value_at, const Real& target, const Real& at_zero,
                          const Real& at_half) {
  using std::abs;
  const bool increasing = at_half > at_zero;
  if (target == at_zero) {
    return Real(0);
  }
  if (increasing ? target >= at_half : target <= at_half) {
    return Real(0.5);
  }
  if (increasing ? target <= at_zero : target >= at_zero) {
    return Real(0);
  }
  auto residual = [&](const Real& p) -> Real { return value_at(p) - target; };
  const Real tolerance = NumericTraits<Real>::root_tolerance();
  const Real relative = 8 * std::numeric_limits<Real>::epsilon();
  auto converged = [&](const Real& a, const Real& b) {
    const Real width = abs(b - a);
    return width <= tolerance && width <= relative * abs(b);
  };
  std::uintmax_t iterations = 400;
  const auto bracket = boost::math::tools::toms748_solve(residual, Real(0), Real(0.5),
                                                         Real(at_zero - target),
                                                         Real(at_half - target), converged,
                                                         iterations);
  return Real((bracket.first + bracket.second) / 2);
}

}  // namespace detail

/// a ∗ b = a(1−b) + (1−a)b.
template <class Real>
Real convolve(const Real& a, const Real& b) {
  detail::require_probability(a, "convolve");
  detail::require_probability(b, "convolve");
  return a * (1 - b) + (1 - a) * b;
}

template <class Real>
Real shannon_binary(const Real& p) {
  using std::log;
  using std::log1p;
  detail::require_probability(p, "shannon_binary");
  const Real q = detail::smaller_mass(p);
  if (q == 0) {
    return Real(0);
  }
  return -q * log(q) - (1 - q) * log1p(-q);
}

/// h_α(p) = ln(p^α + (1−p)^α)/(1−α), with the Shannon form at α = 1 and
/// −ln max(p, 1−p) at α = ∞.
template <class Real>
Real binary_renyi(const Real& p, const Alpha<Real>& alpha) {
  using std::log;
  using std::log1p;
  detail::require_probability(p, "binary_renyi");
  if (alpha.is_infinite()) {
    return -log1p(-detail::smaller_mass(p));
  }
  if (alpha.is_shannon()) {
    return shannon_binary(p);
  }
  return detail::log_power_sum(p, alpha.value()) * alpha.inverse_one_minus();
}

/// The p ∈ [0, 1/2] with h_α(p) = h.
template <class Real>
Real binary_renyi_inverse(const Real& h, const Alpha<Real>& alpha) {
  using std::expm1;
  using std::isnan;
  const Real ln2 = ln_two<Real>();
  const Real slack = NumericTraits<Real>::domain_slack();
  if (isnan(h) || h < -slack || h > ln2 + slack) {
    throw DomainError("binary_renyi_inverse: entropy outside [0, ln 2]");
  }
  if (h <= 0) {
    return Real(0);
  }
  if (alpha.is_infinite()) {
    return std::min(Real(-expm1(-h)), Real(0.5));
  }
  auto value_at = [&](const Real& p) { return binary_renyi(p, alpha); };
  return detail::invert_on_lower_half(value_at, h, Real(0), value_at(Real(0.5)));
}

/// δ^A_α = 2^((1−α)/α) or δ^H_α = 2^(1−α): the K-value of a uniform bit.
template <class Real>
Real delta_const(const Alpha<Real>& alpha, KTransform kind) {
  using std::pow;
  if (alpha.is_shannon()) {
    throw UnsupportedOrder("delta_const: K-transforms degenerate at alpha = 1");
  }
  if (kind == KTransform::arimoto) {
    if (alpha.is_infinite()) {
      return Real(0.5);
    }
    return pow(Real(2), Real((1 - alpha.value()) / alpha.value()));
  }
  if (alpha.is_infinite()) {
    throw UnsupportedOrder("delta_const: k^H has no infinite-order form");
  }
  return pow(Real(2), Real(1 - alpha.value()));
}

template <class Real>
Real k_value(const Real& p, const Alpha<Real>& alpha, KTransform kind) {
  using std::pow;
  detail::require_probability(p, "k_value");
  if (alpha.is_shannon()) {
    throw UnsupportedOrder("k_value: K-transforms degenerate at alpha = 1");
  }
  const Real q = detail::smaller_mass(p);
  const Real m = 1 - q;
  if (kind == KTransform::arimoto) {
    if (alpha.is_infinite()) {
      return m;
    }
    const Real& a = alpha.value();
    return m * pow(Real(1 + pow(Real(q / m), a)), Real(1 / a));
  }
  if (alpha.is_infinite()) {
    throw UnsupportedOrder("k_value: k^H has no infinite-order form");
  }
  return pow(q, alpha.value()) + pow(m, alpha.value());
}

/// The p ∈ [0, 1/2] with k_value(p, α, kind) = k.
template <class Real>
Real k_inverse(const Real& k, const Alpha<Real>& alpha, KTransform kind) {
  using std::isnan;
  const Real delta = delta_const(alpha, kind);
  const Real lo = std::min(Real(1), delta);
  const Real hi = std::max(Real(1), delta);
  const Real slack = NumericTraits<Real>::domain_slack();
  if (isnan(k) || k < lo - slack || k > hi + slack) {
    throw DomainError("k_inverse: K-value outside [min(1,delta), max(1,delta)]");
  }
  if (kind == KTransform::arimoto && alpha.is_infinite()) {
    return std::clamp(Real(1 - k), Real(0), Real(0.5));
  }
  auto value_at = [&](const Real& p) { return k_value(p, alpha, kind); };
  return detail::invert_on_lower_half(value_at, k, Real(1), value_at(Real(0.5)));
}

/// κ^A_α(x,y), κ^H_α(x,y) or ℏ_α(x,y). For `hh` the arguments are entropies.
template <class Real>
Real kk(const Real& x, const Real& y, const Alpha<Real>& alpha, KKKind kind) {
  switch (kind) {
    case KKKind::kk_arimoto:
      return k_value(convolve(k_inverse(x, alpha, KTransform::arimoto),
                              k_inverse(y, alpha, KTransform::arimoto)),
                     alpha, KTransform::arimoto);
    case KKKind::kk_hayashi:
      return k_value(convolve(k_inverse(x, alpha, KTransform::hayashi),
                              k_inverse(y, alpha, KTransform::hayashi)),
                     alpha, KTransform::hayashi);
    case KKKind::hh:
      return binary_renyi(
          convolve(binary_renyi_inverse(x, alpha), binary_renyi_inverse(y, alpha)), alpha);
  }
  throw DomainError("kk: unknown function");
}

/// Closed interval on which `kk` is defined in each argument.
template <class Real>
std::pair<Real, Real> kk_domain(const Alpha<Real>& alpha, KKKind kind) {
  if (kind == KKKind::hh) {
    return {Real(0), ln_two<Real>()};
  }
  const Real delta = delta_const(
      alpha, kind == KKKind::kk_arimoto ? KTransform::arimoto : KTransform::hayashi);
  return {std::min(Real(1), delta), std::max(Real(1), delta)};
}

/// f(x) = x^(α−1) − (1−x)^(α−1).
template <class Real>
Real appendix_f(const Real& x, const Alpha<Real>& alpha) {
  using std::pow;
  detail::require_probability(x, "appendix_f");
  if (alpha.is_infinite()) {
    throw UnsupportedOrder("appendix_f: finite order required");
  }
  const Real& a = alpha.value();
  if (a < 1 && (x == 0 || x == 1)) {
    throw DomainError("appendix_f: endpoint is singular for alpha < 1");
  }
  const Real e = a - 1;
  return pow(x, e) - pow(Real(1 - x), e);
}

/// Derivative of h_α: (α/(1−α)) · f(x) / k^H_α(x).
template <class Real>
Real appendix_hprime(const Real& x, const Alpha<Real>& alpha) {
  detail::require_probability(x, "appendix_hprime");
  if (x == 0 || x == 1) {
    throw DomainError("appendix_hprime: open interval (0,1) required");
  }
  if (alpha.is_shannon() || alpha.is_infinite()) {
    throw UnsupportedOrder("appendix_hprime: order must be finite and != 1");
  }
  return alpha.value() * alpha.inverse_one_minus() * appendix_f(x, alpha) /
         k_value(x, alpha, KTransform::hayashi);
}

/// g_α^x(y): k^H_α(x∗c)·g_α^x(y) = k^H_α(y∗c) − k^H_α(y)(1−2c)·f(x∗c)/f(x).
/// κ^H in its first argument (second fixed through c) is convex exactly
/// when g_α^x(y) ≥ g_α^x(x) for all x, y. At x = 1/2 the ratio f(x∗c)/f(x)
/// takes its limit 1 − 2c.
template <class Real>
Real appendix_g(const Real& y, const Real& x, const Real& c, const Alpha<Real>& alpha) {
  detail::require_probability(y, "appendix_g");
  detail::require_probability(x, "appendix_g");
  detail::require_probability(c, "appendix_g");
  if (x == 0 || x == 1 || y == 0 || y == 1) {
    throw DomainError("appendix_g: x and y must lie in (0,1)");
  }
  if (alpha.is_shannon() || alpha.is_infinite()) {
    throw UnsupportedOrder("appendix_g: order must be finite and != 1");
  }
  const Real xc = convolve(x, c);
  const Real yc = convolve(y, c);
  const Real one_minus_2c = 1 - 2 * c;
  Real ratio;
  if (x == Real(0.5)) {
    ratio = one_minus_2c;
  } else {
    const Real fx = appendix_f(x, alpha);
    if (fx == 0) {
      throw DomainError("appendix_g: f(x) vanishes away from x = 1/2");
    }
    ratio = appendix_f(xc, alpha) / fx;
  }
  const auto k = [&](const Real& p) { return k_value(p, alpha, KTransform::hayashi); };
  return (k(yc) - k(y) * one_minus_2c * ratio) / k(xc);
}

/// k^H_2(y∗c) and k^H_3(y∗c) as explicit polynomials.
template <class Real>
Real closed_form_k23(const Real& y, const Real& c, int order) {
  detail::require_probability(y, "closed_form_k23");
  detail::require_probability(c, "closed_form_k23");
  const Real spread = y * (1 - y) * (1 - 2 * c) * (1 - 2 * c);
  if (order == 2) {
    return (1 - c) * (1 - c) + c * c - 2 * spread;
  }
  if (order == 3) {
    return 1 - 3 * c + 3 * c * c - 3 * spread;
  }
  throw DomainError("closed_form_k23: order must be 2 or 3");
}

/// Rényi entropy of an arbitrary finite distribution (mass need not be
/// normalized exactly; zero entries are skipped).
template <class Real>
Real renyi_entropy(std::span<const Real> probabilities, const Alpha<Real>& alpha) {
  using std::log;
  using std::pow;
  Real largest = 0;
  for (const Real& p : probabilities) {
    if (p < 0) {
      throw DomainError("renyi_entropy: negative probability");
    }
    largest = std::max(largest, p);
  }
  if (largest == 0) {
    throw DomainError("renyi_entropy: empty distribution");
  }
  if (alpha.is_infinite()) {
    return -log(largest);
  }
  if (alpha.is_shannon()) {
    Real h = 0;
    for (const Real& p : probabilities) {
      if (p > 0) {
        h -= p * log(p);
      }
    }
    return h;
  }
  const Real& a = alpha.value();
  Real scaled = 0;
  for (const Real& p : probabilities) {
    if (p > 0) {
      scaled += pow(Real(p / largest), a);
    }
  }
  return (a * log(largest) + log(scaled)) * alpha.inverse_one_minus();
}

}  // namespace renyi
