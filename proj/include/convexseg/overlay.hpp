/**
 * @file overlay.hpp
 * @brief RGB renderings of regions, boundaries and basins
 *
 * Convex pixels are tinted blue and concave pixels red with a 50% blend;
 * boundary pixels are drawn opaque on top.
 */

#pragma once

#include <string_view>

#include "convexseg/classify.hpp"
#include "convexseg/image.hpp"

namespace convexseg {

enum class OverlayStyle { RegionFill, BoundaryOnly, Both };

OverlayStyle parse_overlay_style(std::string_view name);

inline constexpr Rgb kConvexTint{0, 0, 255};
inline constexpr Rgb kConcaveTint{255, 0, 0};
inline constexpr Rgb kDefaultBoundaryColor{255, 255, 0};

struct OverlayOptions {
    OverlayStyle style = OverlayStyle::Both;
    Rgb boundary_color = kDefaultBoundaryColor;
};

/// Per-channel (a + b) / 2 with integer truncation.
constexpr Rgb blend_half(const Rgb& a, const Rgb& b) noexcept {
    return {static_cast<std::uint8_t>((a[0] + b[0]) / 2),
            static_cast<std::uint8_t>((a[1] + b[1]) / 2),
            static_cast<std::uint8_t>((a[2] + b[2]) / 2)};
}

/// Gray base replicated into all three channels.
RgbImage gray_to_rgb(const Image& base);

RgbImage render_overlay(const Image& base, const ClassificationMap& classification,
                        const BinaryMask& boundary, const OverlayOptions& options = {});

/// Blends fill_color over fill pixels, then paints outline pixels opaque.
RgbImage render_mask_overlay(const Image& base, const BinaryMask& fill, const Rgb& fill_color,
                             const BinaryMask& outline, const Rgb& outline_color);

/// Label 0 black, watershed pixels white, basins from a fixed hash palette.
RgbImage render_basins(const LabelMap& labels, const BinaryMask& watershed);

Rgb palette_color(std::int32_t label) noexcept;

/// Places two equally sized panels left and right.
RgbImage side_by_side(const RgbImage& left, const RgbImage& right);

}  // namespace convexseg
