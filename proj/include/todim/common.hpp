#pragma once

#include <cstddef>

namespace todim {

/// Slack allowed on probability sums (normalized mass, Σp ≤ 1 check).
inline constexpr double kProbabilityTolerance = 1e-9;

/// Two scores (or variances) closer than this are treated as tied.
inline constexpr double kTieTolerance = 1e-9;

enum class Ordering { Less, Equal, Greater };

enum class Direction { Ascending, Descending };

constexpr Ordering reverse(Ordering o) noexcept {
    return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : Ordering::Equal;
}

}  // namespace todim
