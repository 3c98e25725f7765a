#include "convexseg/classify.hpp"

#include <string>

namespace convexseg {

std::string_view to_string(RegionMode mode) {
    switch (mode) {
        case RegionMode::ConvexOnly:  return "convex";
        case RegionMode::ConcaveOnly: return "concave";
        case RegionMode::Combined:    return "combined";
    }
    return "unknown";
}

RegionMode parse_region_mode(std::string_view name) {
    if (name == "convex" || name == "convex-only") {
        return RegionMode::ConvexOnly;
    }
    if (name == "concave" || name == "concave-only") {
        return RegionMode::ConcaveOnly;
    }
    if (name == "combined") {
        return RegionMode::Combined;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown region mode '" + std::string(name) + "'");
}

ClassificationMap classify(const DifferentialMaps& maps) {
    require_same_shape(maps.det, maps.fxx, "classify");
    ClassificationMap labels(maps.width(), maps.height(), Curvature::Neither);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = classify_pixel(maps.det[i], maps.fxx[i]);
    }
    return labels;
}

BinaryMask region_mask(const ClassificationMap& classification, RegionMode mode) {
    BinaryMask mask(classification.width(), classification.height());
    for (std::size_t i = 0; i < classification.size(); ++i) {
        const Curvature c = classification[i];
        bool on = false;
        switch (mode) {
            case RegionMode::ConvexOnly:  on = c == Curvature::Convex; break;
            case RegionMode::ConcaveOnly: on = c == Curvature::Concave; break;
            case RegionMode::Combined:    on = c != Curvature::Neither; break;
        }
        mask[i] = on ? 1 : 0;
    }
    return mask;
}

}  // namespace convexseg
