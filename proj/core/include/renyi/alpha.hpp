#pragma once

#include <string>

#include "renyi/errors.hpp"
#include "renyi/precision.hpp"

namespace renyi {

/// Rényi order: a finite value > 0 or infinity. The Shannon point α = 1 and
/// the min-entropy point α = ∞ are tested explicitly by every formula that
/// would otherwise divide by 1 − α.
template <class Real>
class Alpha {
 public:
  explicit Alpha(Real value) : value_(std::move(value)), infinite_(false) {
    using std::isnan;
    if (isnan(value_) || !(value_ > 0)) {
      throw DomainError("Rényi order must be positive");
    }
    using std::isinf;
    if (isinf(value_)) {
      infinite_ = true;
    }
  }

  static Alpha infinity() {
    Alpha a(Real(1));
    a.infinite_ = true;
    return a;
  }

  static Alpha shannon() { return Alpha(Real(1)); }

  /// Accepts a decimal number or one of "inf", "infinity", "∞".
  static Alpha parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "∞") {
      return infinity();
    }
    try {
      return Alpha(parse_real<Real>(text));
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw DomainError("cannot parse Rényi order '" + text + "'");
    }
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_shannon() const noexcept { return !infinite_ && value_ == 1; }
  bool is_finite() const noexcept { return !infinite_; }

  /// The finite order. Calling this on α = ∞ is a logic error.
  const Real& value() const {
    if (infinite_) {
      throw UnsupportedOrder("infinite Rényi order has no finite value");
    }
    return value_;
  }

  /// 1/(1−α); never evaluated at α = 1.
  Real inverse_one_minus() const {
    if (is_shannon()) {
      throw UnsupportedOrder("1/(1-alpha) is singular at alpha = 1");
    }
    return Real(1) / (Real(1) - value());
  }

  double approx() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : to_double(value_);
  }

  std::string str() const { return infinite_ ? std::string("inf") : format_real(value_); }

  template <class Other>
  Alpha<Other> convert() const {
    if (infinite_) {
      return Alpha<Other>::infinity();
    }
    return Alpha<Other>(Other(value_));
  }

 private:
  Real value_;
  bool infinite_;
};

}  // namespace renyi
