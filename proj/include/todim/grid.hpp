#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace todim {

/// Dense row-major matrix.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, std::vector<T> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {}
    Grid(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {cells_.data() + r * cols_, cols_}; }
    std::span<const T> cells() const noexcept { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> cells_;
};

}  // namespace todim
