#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace renyi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Runs one verb. `args` excludes the program name. Results go to `out`
/// unless an --out path is given (written atomically); diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace renyi::cli
