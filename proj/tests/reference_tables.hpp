#pragma once

// Two-decimal values as printed for the bundled case study. Off-diagonal
// cells are listed in the order (1,2) (1,3) (1,4) (2,1) (2,3) (2,4) (3,1)
// (3,2) (3,4) (4,1) (4,2) (4,3); use `reference::at` to index them.

#include <array>
#include <cstddef>

namespace reference {

using Cells = std::array<double, 12>;

inline constexpr std::array<double, 4> kPhfRelative = {1.0, 0.28, 0.57, 0.68};
inline constexpr std::array<double, 4> kPhfWeights = {0.395, 0.112, 0.224, 0.269};
inline constexpr std::array<double, 4> kHfRelative = {1.0, 0.27, 0.55, 0.65};

inline constexpr std::array<Cells, 4> kPhfDominance = {{
    {-2.29, -1.05, -2.12, 2.03, 1.96, 2.08, 0.93, -2.20, -2.00, 1.89, -2.34, 1.78},
    {-4.60, -2.34, -2.61, 1.16, 1.29, 1.34, 0.59, -5.10, 0.44, 0.66, -5.29, -1.74},
    {-2.15, -2.00, -1.32, 1.08, 1.48, 1.27, 1.00, -2.94, 0.76, 0.66, -2.52, -1.51},
    {-1.89, -3.64, -2.55, 1.14, 2.11, 1.77, 2.20, -3.49, 1.57, 1.54, -2.92, -2.60},
}};
inline constexpr Cells kPhfTheta = {-10.92, -9.04, -8.61, 5.42, 6.84, 6.46, 4.74, -13.73, 0.77, 4.76, -13.08, -4.07};
inline constexpr std::array<double, 4> kPhfOverall = {0.0, 1.0, 0.43, 0.34};

inline constexpr std::array<Cells, 4> kHfDominance = {{
    {-1.80, -1.56, -1.66, 1.64, -1.07, -1.56, 1.42, 0.97, 1.16, 1.51, 1.42, -1.28},
    {-4.14, -3.15, -2.13, 1.02, 0.66, 0.87, 0.78, -2.69, 0.57, 0.52, -3.56, -2.33},
    {-2.66, -2.30, -1.80, 1.34, 1.22, 1.31, 1.16, -2.42, 0.72, 0.91, -2.60, -1.43},
    {-3.36, -2.35, -1.74, 1.98, 1.42, 1.70, 1.39, -2.40, 0.94, 1.02, -2.88, -1.58},
}};
inline constexpr Cells kHfTheta = {-11.97, -9.37, -7.32, 5.98, 2.23, 2.32, 4.74, -6.54, 3.39, 3.97, -7.61, -6.62};
inline constexpr std::array<double, 4> kHfOverall = {0.0, 1.0, 0.77, 0.47};

/// Both case-study pipelines rank A2 > A3 > A4 > A1 (0-based indices).
inline constexpr std::array<std::size_t, 4> kOrder = {1, 2, 3, 0};

/// Position of pair (i, k), i != k, in a `Cells` list.
constexpr std::size_t slot(std::size_t i, std::size_t k) { return i * 3 + (k < i ? k : k - 1); }
constexpr double at(const Cells& cells, std::size_t i, std::size_t k) { return i == k ? 0.0 : cells[slot(i, k)]; }

}  // namespace reference
