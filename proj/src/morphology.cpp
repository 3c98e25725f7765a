#include "convexseg/morphology.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace convexseg {

Connectivity parse_connectivity(int neighbors) {
    if (neighbors == 4) {
        return Connectivity::Four;
    }
    if (neighbors == 8) {
        return Connectivity::Eight;
    }
    throw Error(ErrorCode::InvalidArgument,
                "connectivity must be 4 or 8, got " + std::to_string(neighbors));
}

BinaryMask dilate3(const BinaryMask& mask) {
    const int width = mask.width();
    const int height = mask.height();

    // Row pass (horizontal 1x3 max) then column pass (vertical 3x1 max).
    BinaryMask rows(width, height);
    for (int y = 0; y < height; ++y) {
        const auto src = mask.row(y);
        auto dst = rows.row(y);
        for (int x = 0; x < width; ++x) {
            const auto c = static_cast<std::size_t>(x);
            std::uint8_t v = src[c];
            if (x > 0) v |= src[c - 1];
            if (x < width - 1) v |= src[c + 1];
            dst[c] = v;
        }
    }
    BinaryMask out(width, height);
    for (int y = 0; y < height; ++y) {
        auto dst = out.row(y);
        const auto mid = rows.row(y);
        std::copy(mid.begin(), mid.end(), dst.begin());
        if (y > 0) {
            const auto up = rows.row(y - 1);
            for (std::size_t x = 0; x < dst.size(); ++x) dst[x] |= up[x];
        }
        if (y < height - 1) {
            const auto down = rows.row(y + 1);
            for (std::size_t x = 0; x < dst.size(); ++x) dst[x] |= down[x];
        }
    }
    return out;
}

BinaryMask exterior_boundary(const BinaryMask& mask) {
    BinaryMask boundary = dilate3(mask);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        boundary[i] = (boundary[i] != 0 && mask[i] == 0) ? 1 : 0;
    }
    return boundary;
}

LabelMap label_components(const BinaryMask& mask, Connectivity connectivity) {
    static constexpr int kDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    static constexpr int kDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
    static constexpr int kFour[4] = {1, 3, 4, 6};

    const int width = mask.width();
    const int height = mask.height();
    LabelMap result{Grid<std::int32_t>(width, height, 0), 0};
    std::vector<PixelCoord> stack;

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (!mask.test(x, y) || result.labels(x, y) != 0) {
                continue;
            }
            const std::int32_t label = ++result.count;
            result.labels(x, y) = label;
            stack.push_back({x, y});
            while (!stack.empty()) {
                const PixelCoord p = stack.back();
                stack.pop_back();
                const int n = connectivity == Connectivity::Eight ? 8 : 4;
                for (int k = 0; k < n; ++k) {
                    const int d = connectivity == Connectivity::Eight ? k : kFour[k];
                    const int qx = p.x + kDx[d];
                    const int qy = p.y + kDy[d];
                    if (mask.contains(qx, qy) && mask.test(qx, qy) &&
                        result.labels(qx, qy) == 0) {
                        result.labels(qx, qy) = label;
                        stack.push_back({qx, qy});
                    }
                }
            }
        }
    }
    return result;
}

BinaryMask prune_small(const LabelMap& labels, std::size_t min_area) {
    const auto areas = labels.areas();
    BinaryMask out(labels.width(), labels.height());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto label = static_cast<std::size_t>(labels.labels[i]);
        out[i] = (label != 0 && areas[label] >= min_area) ? 1 : 0;
    }
    return out;
}

}  // namespace convexseg
