/**
 * @file morphology.hpp
 * @brief 3x3 dilation, exterior boundary, connected components and size pruning
 */

#pragma once

#include <cstddef>

#include "convexseg/image.hpp"

namespace convexseg {

enum class Connectivity { Four = 4, Eight = 8 };

Connectivity parse_connectivity(int neighbors);

/// Dilation by the full 3x3 square, clipped at the frame.
BinaryMask dilate3(const BinaryMask& mask);

/// Pixels outside the mask that are 8-adjacent to it: dilate3(mask) & ~mask.
BinaryMask exterior_boundary(const BinaryMask& mask);

/// Labels are assigned 1..count in raster order of each component's first pixel.
LabelMap label_components(const BinaryMask& mask, Connectivity connectivity = Connectivity::Eight);

/// Keeps pixels whose component has at least min_area pixels.
BinaryMask prune_small(const LabelMap& labels, std::size_t min_area);

/// True where the pixel lies on the outer frame of the image.
constexpr bool on_frame(int x, int y, int width, int height) noexcept {
    return x == 0 || y == 0 || x == width - 1 || y == height - 1;
}

}  // namespace convexseg
