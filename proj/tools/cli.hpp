#pragma once

#include <iosfwd>

namespace surfke::cli {

/// Exit codes: 0 success, 1 usage or configuration error, 2 data or model error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace surfke::cli
