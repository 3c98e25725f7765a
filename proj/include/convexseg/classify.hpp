/**
 * @file classify.hpp
 * @brief Second-partial-derivative test: per-pixel convex / concave labeling
 *
 * A pixel is Convex when D > 0 and fxx > 0, Concave when D > 0 and fxx < 0,
 * and Neither otherwise. Inequalities are strict with no tolerance band.
 */

#pragma once

#include <cstdint>
#include <string_view>

#include "convexseg/derivatives.hpp"
#include "convexseg/image.hpp"

namespace convexseg {

enum class Curvature : std::uint8_t { Neither = 0, Convex = 1, Concave = 2 };

using ClassificationMap = Grid<Curvature>;

enum class RegionMode { ConvexOnly, ConcaveOnly, Combined };

std::string_view to_string(RegionMode mode);
RegionMode parse_region_mode(std::string_view name);

/// Applies the test to one pixel's second derivatives.
constexpr Curvature classify_pixel(double det, double fxx) noexcept {
    if (det > 0.0) {
        if (fxx > 0.0) {
            return Curvature::Convex;
        }
        if (fxx < 0.0) {
            return Curvature::Concave;
        }
    }
    return Curvature::Neither;
}

ClassificationMap classify(const DifferentialMaps& maps);

/// Region as foreground (true), i.e. the inverse polarity of a 0/1 "region is 0" labeling.
BinaryMask region_mask(const ClassificationMap& classification, RegionMode mode);

}  // namespace convexseg
