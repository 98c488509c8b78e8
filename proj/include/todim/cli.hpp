#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

namespace todim::cli {

/// Exit codes: 0 success, 2 usage or validation error, 1 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUser = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "start:stop:step", inclusive of stop (within rounding). Throws
/// todim::Error on malformed or non-positive input.
std::vector<double> parse_lambda_range(std::string_view spec);

}  // namespace todim::cli
