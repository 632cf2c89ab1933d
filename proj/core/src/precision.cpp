#include "renyi/precision.hpp"

#include <cstdlib>
#include <string>

#include "renyi/entropy_core.hpp"
#include "renyi/errors.hpp"

namespace renyi {

Precision parse_precision(std::string_view text) {
  if (text == "double" || text == "native") {
    return Precision::native;
  }
  if (text == "extended") {
    return Precision::extended;
  }
  throw ConfigError("unknown precision '" + std::string(text) + "' (expected double|extended)");
}

std::string_view to_string(Precision precision) noexcept {
  return precision == Precision::extended ? "extended" : "double";
}

Precision precision_from_environment(Precision fallback) {
  const char* value = std::getenv("RENYI_PRECISION");
  if (value == nullptr || *value == '\0') {
    return fallback;
  }
  return parse_precision(value);
}

std::string_view to_string(KTransform kind) noexcept {
  return kind == KTransform::arimoto ? "A" : "H";
}

std::string_view to_string(KKKind kind) noexcept {
  switch (kind) {
    case KKKind::kk_arimoto:
      return "kkA";
    case KKKind::kk_hayashi:
      return "kkH";
    case KKKind::hh:
      return "hh";
  }
  return "?";
}

}  // namespace renyi
