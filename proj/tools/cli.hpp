#pragma once

#include <iosfwd>

namespace oasbench::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 1;
inline constexpr int kExitValidationFailed = 2;

/// Entry point of the `oasbench` tool: run, sweep, validate, bounds.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oasbench::cli
