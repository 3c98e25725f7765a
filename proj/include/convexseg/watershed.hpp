/**
 * @file watershed.hpp
 * @brief Marker-less watershed by priority flooding of a gradient-modulus relief
 *
 * Flooding rules:
 *  - The relief is quantized to 16-bit levels (min -> 0, max -> 65535).
 *  - Regional minima are 8-connected plateaus with no strictly lower
 *    8-neighbor; each seeds one basin, numbered in raster order of the
 *    plateau's first pixel.
 *  - Pixels leave the queue ordered by (level, insertion sequence). A popped
 *    pixel whose labeled 8-neighbors carry exactly one basin label joins that
 *    basin; otherwise it becomes a watershed pixel. Either way its unvisited
 *    neighbors are queued in raster neighbor order.
 */

#pragma once

#include <cstdint>

#include "convexseg/derivatives.hpp"
#include "convexseg/image.hpp"

namespace convexseg {

struct BasinLabeling {
    /// Basins numbered from 1; watershed pixels carry 0.
    LabelMap labels;
    BinaryMask watershed;
};

/// sqrt(fx^2 + fy^2) with the given first-derivative stencil.
Image gradient_modulus(const Image& image, Stencil stencil = Stencil::Sobel);

/// Affine quantization onto 0..65535; a constant relief maps to 0.
Grid<std::uint16_t> quantize_relief(const Image& relief);

/// Regional minima of a quantized relief, labeled 1..count.
LabelMap regional_minima(const Grid<std::uint16_t>& levels);

BasinLabeling flood(const Image& relief);
BasinLabeling flood(const Grid<std::uint16_t>& levels);

/// Optional smoothing (sigma > 0), gradient modulus, flood; returns watershed lines.
BinaryMask watershed_contours(const Image& image, double sigma, Stencil stencil = Stencil::Sobel);

/// Same pipeline, returning the full basin labeling.
BasinLabeling watershed_basins(const Image& image, double sigma, Stencil stencil = Stencil::Sobel);

}  // namespace convexseg
