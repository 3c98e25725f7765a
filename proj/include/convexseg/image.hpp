/**
 * @file image.hpp
 * @brief Grayscale image, binary mask, label map and RGB raster types
 */

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "convexseg/grid.hpp"

namespace convexseg {

/**
 * @brief Immutable grayscale image with finite real samples
 *
 * Samples loaded from files are normalized to [0, 1]; synthetic images may
 * use any finite range.
 */
class Image {
public:
    Image() = default;
    Image(int width, int height, std::vector<double> samples);
    explicit Image(Field samples);

    /// Builds an image by evaluating fn(x, y) at every pixel.
    static Image generate(int width, int height, const std::function<double(int, int)>& fn);

    int width() const noexcept { return samples_.width(); }
    int height() const noexcept { return samples_.height(); }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }

    double operator()(int x, int y) const noexcept { return samples_(x, y); }
    double operator[](std::size_t i) const noexcept { return samples_[i]; }
    double clamped(int x, int y) const noexcept { return samples_.clamped(x, y); }
    std::span<const double> row(int y) const noexcept { return samples_.row(y); }
    std::span<const double> data() const noexcept { return samples_.data(); }

    const Field& field() const noexcept { return samples_; }

    bool operator==(const Image&) const = default;

private:
    Field samples_;
};

/// Per-pixel boolean stored as 0/1 bytes.
class BinaryMask : public Grid<std::uint8_t> {
public:
    using Grid::Grid;
    BinaryMask() = default;
    explicit BinaryMask(Grid<std::uint8_t> bits) : Grid(std::move(bits)) {}

    bool test(int x, int y) const noexcept { return (*this)(x, y) != 0; }
    void set(int x, int y, bool value = true) noexcept { (*this)(x, y) = value ? 1 : 0; }
    std::size_t count() const noexcept;
    bool any() const noexcept { return count() != 0; }
};

BinaryMask operator&(const BinaryMask& a, const BinaryMask& b);
BinaryMask operator|(const BinaryMask& a, const BinaryMask& b);
BinaryMask operator~(const BinaryMask& a);

/// Connected-component or catchment-basin labels; 0 is background.
struct LabelMap {
    Grid<std::int32_t> labels;
    int count = 0;

    int width() const noexcept { return labels.width(); }
    int height() const noexcept { return labels.height(); }
    std::int32_t operator()(int x, int y) const noexcept { return labels(x, y); }

    /// Pixel area of every label; index 0 holds the background area.
    std::vector<std::size_t> areas() const;
};

using Rgb = std::array<std::uint8_t, 3>;

/// 8-bit RGB raster used for overlays and composites.
using RgbImage = Grid<Rgb>;

/// Affine map of a field onto [0, 1]; a constant field maps to 0.5.
Image rescale_to_unit(const Field& field);

/// Converts a [0, 1] sample to an 8-bit level (rounded, clamped).
std::uint8_t to_byte(double sample) noexcept;

}  // namespace convexseg
