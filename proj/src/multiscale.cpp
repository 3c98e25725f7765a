#include "convexseg/multiscale.hpp"

#include <cmath>
#include <string>

#include "convexseg/morphology.hpp"
#include "convexseg/smoothing.hpp"

namespace convexseg {

Detection detect_at_scale(const Image& image, double sigma, RegionMode mode, Stencil stencil) {
    const Image smoothed = smooth(image, make_kernel(sigma));
    const DifferentialMaps maps = hessian_maps(smoothed, stencil);
    BinaryMask region = region_mask(classify(maps), mode);
    BinaryMask boundary = exterior_boundary(region);
    return {std::move(region), std::move(boundary)};
}

ScalePair::ScalePair(double sigma_small, double sigma_large)
    : small_(sigma_small), large_(sigma_large) {
    if (!std::isfinite(sigma_small) || !std::isfinite(sigma_large) || sigma_small <= 0.0 ||
        sigma_small >= sigma_large) {
        throw Error(ErrorCode::InvalidArgument,
                    "scale pair needs 0 < small < large, got (" + std::to_string(sigma_small) +
                        ", " + std::to_string(sigma_large) + ")");
    }
}

MultiscaleComposite multiscale_composite(const Image& image, const ScalePair& scales,
                                         RegionMode mode, Stencil stencil) {
    Detection fine = detect_at_scale(image, scales.small(), mode, stencil);
    Detection coarse = detect_at_scale(image, scales.large(), mode, stencil);
    return {std::move(fine.region), std::move(coarse.boundary)};
}

}  // namespace convexseg
