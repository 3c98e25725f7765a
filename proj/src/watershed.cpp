#include "convexseg/watershed.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "convexseg/smoothing.hpp"

namespace convexseg {

namespace {

constexpr int kDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

struct QueueEntry {
    std::uint16_t level;
    std::uint64_t sequence;
    std::uint32_t index;

    // std::priority_queue is a max-heap; invert so the lowest (level, sequence) wins.
    bool operator<(const QueueEntry& other) const noexcept {
        if (level != other.level) {
            return level > other.level;
        }
        return sequence > other.sequence;
    }
};

enum PixelState : std::uint8_t { Unvisited = 0, Queued = 1, Done = 2 };

}  // namespace

Image gradient_modulus(const Image& image, Stencil stencil) {
    const Gradient g = gradient(image, stencil);
    Field out(image.width(), image.height());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::sqrt(g.fx[i] * g.fx[i] + g.fy[i] * g.fy[i]);
    }
    return Image(std::move(out));
}

Grid<std::uint16_t> quantize_relief(const Image& relief) {
    const auto values = relief.data();
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    Grid<std::uint16_t> levels(relief.width(), relief.height(), 0);
    if (*hi > *lo) {
        const double scale = 65535.0 / (*hi - *lo);
        for (std::size_t i = 0; i < levels.size(); ++i) {
            levels[i] = static_cast<std::uint16_t>(std::lround((relief[i] - *lo) * scale));
        }
    }
    return levels;
}

LabelMap regional_minima(const Grid<std::uint16_t>& levels) {
    const int width = levels.width();
    const int height = levels.height();
    LabelMap minima{Grid<std::int32_t>(width, height, 0), 0};
    std::vector<std::uint8_t> visited(levels.size(), 0);
    std::vector<PixelCoord> plateau;
    std::vector<PixelCoord> stack;

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (visited[levels.index(x, y)] != 0) {
                continue;
            }
            const std::uint16_t level = levels(x, y);
            bool has_lower = false;
            plateau.clear();
            visited[levels.index(x, y)] = 1;
            stack.push_back({x, y});
            while (!stack.empty()) {
                const PixelCoord p = stack.back();
                stack.pop_back();
                plateau.push_back(p);
                for (int k = 0; k < 8; ++k) {
                    const int qx = p.x + kDx[k];
                    const int qy = p.y + kDy[k];
                    if (!levels.contains(qx, qy)) {
                        continue;
                    }
                    const std::uint16_t q = levels(qx, qy);
                    if (q < level) {
                        has_lower = true;
                    } else if (q == level && visited[levels.index(qx, qy)] == 0) {
                        visited[levels.index(qx, qy)] = 1;
                        stack.push_back({qx, qy});
                    }
                }
            }
            if (!has_lower) {
                const std::int32_t label = ++minima.count;
                for (const auto& p : plateau) {
                    minima.labels(p.x, p.y) = label;
                }
            }
        }
    }
    return minima;
}

BasinLabeling flood(const Grid<std::uint16_t>& levels) {
    const int width = levels.width();
    const int height = levels.height();
    LabelMap basins = regional_minima(levels);
    BinaryMask watershed(width, height);
    std::vector<std::uint8_t> state(levels.size(), Unvisited);
    std::priority_queue<QueueEntry> queue;
    std::uint64_t sequence = 0;

    auto enqueue_neighbors = [&](int x, int y) {
        for (int k = 0; k < 8; ++k) {
            const int qx = x + kDx[k];
            const int qy = y + kDy[k];
            if (!levels.contains(qx, qy)) {
                continue;
            }
            const std::size_t q = levels.index(qx, qy);
            if (state[q] == Unvisited) {
                state[q] = Queued;
                queue.push({levels[q], sequence++, static_cast<std::uint32_t>(q)});
            }
        }
    };

    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (basins.labels[i] != 0) {
            state[i] = Done;
        }
    }
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (basins.labels(x, y) != 0) {
                enqueue_neighbors(x, y);
            }
        }
    }

    while (!queue.empty()) {
        const QueueEntry entry = queue.top();
        queue.pop();
        const int x = static_cast<int>(entry.index % static_cast<std::uint32_t>(width));
        const int y = static_cast<int>(entry.index / static_cast<std::uint32_t>(width));

        std::int32_t seen = 0;
        bool conflict = false;
        for (int k = 0; k < 8 && !conflict; ++k) {
            const int qx = x + kDx[k];
            const int qy = y + kDy[k];
            if (!levels.contains(qx, qy)) {
                continue;
            }
            const std::int32_t label = basins.labels(qx, qy);
            if (label == 0) {
                continue;
            }
            if (seen == 0) {
                seen = label;
            } else if (label != seen) {
                conflict = true;
            }
        }
        if (seen != 0 && !conflict) {
            basins.labels[entry.index] = seen;
        } else {
            watershed[entry.index] = 1;
        }
        state[entry.index] = Done;
        enqueue_neighbors(x, y);
    }
    return {std::move(basins), std::move(watershed)};
}

BasinLabeling flood(const Image& relief) { return flood(quantize_relief(relief)); }

BasinLabeling watershed_basins(const Image& image, double sigma, Stencil stencil) {
    if (!std::isfinite(sigma) || sigma < 0.0) {
        throw Error(ErrorCode::InvalidArgument,
                    "watershed sigma must be non-negative, got " + std::to_string(sigma));
    }
    const Image relief = sigma > 0.0 ? gradient_modulus(smooth(image, make_kernel(sigma)), stencil)
                                     : gradient_modulus(image, stencil);
    return flood(relief);
}

BinaryMask watershed_contours(const Image& image, double sigma, Stencil stencil) {
    return watershed_basins(image, sigma, stencil).watershed;
}

}  // namespace convexseg
