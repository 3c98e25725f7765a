/**
 * @file multiscale.hpp
 * @brief Single-scale detection pipeline and two-scale compositing
 */

#pragma once

#include "convexseg/classify.hpp"
#include "convexseg/derivatives.hpp"
#include "convexseg/image.hpp"

namespace convexseg {

struct Detection {
    BinaryMask region;
    BinaryMask boundary;
};

/// smooth -> hessian_maps -> classify -> region_mask -> exterior_boundary.
Detection detect_at_scale(const Image& image, double sigma, RegionMode mode = RegionMode::Combined,
                          Stencil stencil = Stencil::Sobel);

class ScalePair {
public:
    ScalePair(double sigma_small, double sigma_large);

    double small() const noexcept { return small_; }
    double large() const noexcept { return large_; }

private:
    double small_;
    double large_;
};

/// Fill: regions at the small scale. Outline: boundaries at the large scale.
struct MultiscaleComposite {
    BinaryMask fill;
    BinaryMask outline;
};

MultiscaleComposite multiscale_composite(const Image& image, const ScalePair& scales,
                                         RegionMode mode = RegionMode::Combined,
                                         Stencil stencil = Stencil::Sobel);

}  // namespace convexseg
