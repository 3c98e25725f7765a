#include "convexseg/overlay.hpp"

#include <string>

namespace convexseg {

OverlayStyle parse_overlay_style(std::string_view name) {
    if (name == "fill" || name == "region-fill") return OverlayStyle::RegionFill;
    if (name == "boundary" || name == "boundary-only") return OverlayStyle::BoundaryOnly;
    if (name == "both") return OverlayStyle::Both;
    throw Error(ErrorCode::InvalidArgument, "unknown overlay style '" + std::string(name) + "'");
}

RgbImage gray_to_rgb(const Image& base) {
    RgbImage out(base.width(), base.height());
    for (std::size_t i = 0; i < base.size(); ++i) {
        const std::uint8_t g = to_byte(base[i]);
        out[i] = {g, g, g};
    }
    return out;
}

RgbImage render_overlay(const Image& base, const ClassificationMap& classification,
                        const BinaryMask& boundary, const OverlayOptions& options) {
    require_same_shape(base.field(), classification, "render_overlay classification");
    require_same_shape(base.field(), boundary, "render_overlay boundary");
    RgbImage out = gray_to_rgb(base);
    const bool fill = options.style != OverlayStyle::BoundaryOnly;
    const bool lines = options.style != OverlayStyle::RegionFill;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (fill) {
            if (classification[i] == Curvature::Convex) {
                out[i] = blend_half(out[i], kConvexTint);
            } else if (classification[i] == Curvature::Concave) {
                out[i] = blend_half(out[i], kConcaveTint);
            }
        }
        if (lines && boundary[i] != 0) {
            out[i] = options.boundary_color;
        }
    }
    return out;
}

RgbImage render_mask_overlay(const Image& base, const BinaryMask& fill, const Rgb& fill_color,
                             const BinaryMask& outline, const Rgb& outline_color) {
    require_same_shape(base.field(), fill, "render_mask_overlay fill");
    require_same_shape(base.field(), outline, "render_mask_overlay outline");
    RgbImage out = gray_to_rgb(base);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (fill[i] != 0) {
            out[i] = blend_half(out[i], fill_color);
        }
        if (outline[i] != 0) {
            out[i] = outline_color;
        }
    }
    return out;
}

Rgb palette_color(std::int32_t label) noexcept {
    if (label == 0) {
        return {0, 0, 0};
    }
    // splitmix-style integer hash; channels kept in 48..239 so basins never
    // read as black background or white watershed.
    auto h = static_cast<std::uint32_t>(label) * 0x9E3779B9u;
    h ^= h >> 16;
    h *= 0x85EBCA6Bu;
    h ^= h >> 13;
    const auto channel = [&](int shift) {
        return static_cast<std::uint8_t>(48 + ((h >> shift) & 0xFFu) * 191 / 255);
    };
    return {channel(0), channel(8), channel(16)};
}

RgbImage render_basins(const LabelMap& labels, const BinaryMask& watershed) {
    require_same_shape(labels.labels, watershed, "render_basins");
    RgbImage out(labels.width(), labels.height());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = watershed[i] != 0 ? Rgb{255, 255, 255} : palette_color(labels.labels[i]);
    }
    return out;
}

RgbImage side_by_side(const RgbImage& left, const RgbImage& right) {
    require_same_shape(left, right, "side_by_side");
    const int width = left.width();
    RgbImage out(2 * width, left.height());
    for (int y = 0; y < left.height(); ++y) {
        for (int x = 0; x < width; ++x) {
            out(x, y) = left(x, y);
            out(x + width, y) = right(x, y);
        }
    }
    return out;
}

}  // namespace convexseg
