/**
 * @file grid.hpp
 * @brief Row-major 2-D container used for images, fields, masks and labels
 *
 * Origin is the top-left pixel; x is the column index and y the row index,
 * with y increasing downward.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "convexseg/error.hpp"

namespace convexseg {

struct PixelCoord {
    int x = 0;
    int y = 0;

    bool operator==(const PixelCoord&) const = default;
};

template <typename T>
class Grid {
public:
    using value_type = T;

    Grid() = default;

    Grid(int width, int height, T fill = T{}) : width_(width), height_(height) {
        check_dims(width, height);
        data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    Grid(int width, int height, std::vector<T> data)
        : width_(width), height_(height), data_(std::move(data)) {
        check_dims(width, height);
        if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
            throw Error(ErrorCode::DimensionMismatch,
                        "sample count " + std::to_string(data_.size()) + " != " +
                            std::to_string(width) + "x" + std::to_string(height));
        }
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    bool contains(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    T& operator()(int x, int y) noexcept { return data_[index(x, y)]; }
    const T& operator()(int x, int y) const noexcept { return data_[index(x, y)]; }
    T& operator[](std::size_t i) noexcept { return data_[i]; }
    const T& operator[](std::size_t i) const noexcept { return data_[i]; }

    /// Sample with replicate (clamp-to-edge) border handling.
    const T& clamped(int x, int y) const noexcept {
        x = x < 0 ? 0 : (x >= width_ ? width_ - 1 : x);
        y = y < 0 ? 0 : (y >= height_ ? height_ - 1 : y);
        return (*this)(x, y);
    }

    std::span<T> row(int y) noexcept {
        return {data_.data() + index(0, y), static_cast<std::size_t>(width_)};
    }
    std::span<const T> row(int y) const noexcept {
        return {data_.data() + index(0, y), static_cast<std::size_t>(width_)};
    }

    std::span<T> data() noexcept { return data_; }
    std::span<const T> data() const noexcept { return data_; }
    const std::vector<T>& values() const noexcept { return data_; }

    template <typename U>
    bool same_shape(const Grid<U>& other) const noexcept {
        return width_ == other.width() && height_ == other.height();
    }

    bool operator==(const Grid&) const = default;

private:
    static void check_dims(int width, int height) {
        if (width <= 0 || height <= 0) {
            throw Error(ErrorCode::InvalidArgument, "grid dimensions must be positive, got " +
                                                        std::to_string(width) + "x" +
                                                        std::to_string(height));
        }
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

/// Real-valued per-pixel field (derivatives, determinant, curvature).
using Field = Grid<double>;

template <typename T, typename U>
void require_same_shape(const Grid<T>& a, const Grid<U>& b, const char* what) {
    if (!a.same_shape(b)) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a.width()) + "x" +
                        std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                        std::to_string(b.height()));
    }
}

}  // namespace convexseg
