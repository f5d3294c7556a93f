#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with captured streams.

#include <ostream>
#include <string>
#include <vector>

namespace vincular::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kSuiteFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kGuardrail = 3;
inline constexpr int kMapDomain = 4;
inline constexpr int kMismatch = 5;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vincular::cli
