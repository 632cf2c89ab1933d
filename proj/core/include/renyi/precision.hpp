#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <string_view>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace renyi {

/// Software floating point with 50 significant decimal digits.
using Extended = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                              boost::multiprecision::et_off>;

enum class Precision { native, extended };

Precision parse_precision(std::string_view text);
std::string_view to_string(Precision precision) noexcept;

/// Reads RENYI_PRECISION; falls back to `fallback` when unset.
Precision precision_from_environment(Precision fallback = Precision::native);

template <class Real>
struct NumericTraits;

template <>
struct NumericTraits<double> {
  static constexpr Precision precision = Precision::native;
  static constexpr int output_digits = 17;
  /// Absolute bracket width at which root finding stops.
  static double root_tolerance() { return 1e-14; }
  /// Slack accepted on range checks of computed inputs (e.g. h slightly above ln 2).
  static double domain_slack() { return 1e-12; }
  static double parse(const std::string& text) { return std::stod(text); }
};

template <>
struct NumericTraits<Extended> {
  static constexpr Precision precision = Precision::extended;
  static constexpr int output_digits = 40;
  static Extended root_tolerance() { return Extended("1e-30"); }
  static Extended domain_slack() { return Extended("1e-40"); }
  static Extended parse(const std::string& text) { return Extended(text); }
};

template <class Real>
Real ln_two() {
  return boost::math::constants::ln_two<Real>();
}

template <class Real>
Real parse_real(const std::string& text) {
  return NumericTraits<Real>::parse(text);
}

/// Decimal text with the precision-appropriate number of significant digits.
inline std::string format_real(double value, int digits = NumericTraits<double>::output_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

inline std::string format_real(const Extended& value,
                               int digits = NumericTraits<Extended>::output_digits) {
  return value.str(digits);
}

inline double to_double(double value) { return value; }
inline double to_double(const Extended& value) { return value.convert_to<double>(); }

}  // namespace renyi
