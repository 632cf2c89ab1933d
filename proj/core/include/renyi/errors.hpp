#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace renyi {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested Rényi order has no defined value for this quantity
/// (for example K-transforms at the Shannon point, or H/J/C at infinity).
class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inconsistent option combination, e.g. output merging on the Jizba path.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed channel description. `row()` is the zero-based output index
/// that failed, or npos when the failure is not tied to a row.
class ParseError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t row = npos)
      : std::runtime_error(row == npos ? what : "row " + std::to_string(row) + ": " + what),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace renyi
