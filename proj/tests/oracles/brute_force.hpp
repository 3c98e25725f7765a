/**
 * @file brute_force.hpp
 * @brief Slow reference implementations used only by tests
 *
 * Each routine here is written from its definition, deliberately without
 * sharing code or loop structure with the library it checks.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "convexseg/image.hpp"

namespace convexseg::testing {

inline int clamp_index(int v, int n) { return v < 0 ? 0 : (v >= n ? n - 1 : v); }

/// Full 2-D convolution with the outer product of a 1-D kernel, replicate borders.
inline Field conv2d_outer(const Image& f, const std::vector<double>& w) {
    const int r = static_cast<int>(w.size() / 2);
    Field out(f.width(), f.height());
    for (int y = 0; y < f.height(); ++y) {
        for (int x = 0; x < f.width(); ++x) {
            double acc = 0.0;
            for (int j = -r; j <= r; ++j) {
                for (int i = -r; i <= r; ++i) {
                    acc += w[static_cast<std::size_t>(i + r)] * w[static_cast<std::size_t>(j + r)] *
                           f(clamp_index(x + i, f.width()), clamp_index(y + j, f.height()));
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

/// Correlation with an explicit 3x3 kernel (row-major, kernel[dy+1][dx+1]), replicate borders.
inline Field correlate3x3(const Field& f, const double (&k)[3][3]) {
    Field out(f.width(), f.height());
    for (int y = 0; y < f.height(); ++y) {
        for (int x = 0; x < f.width(); ++x) {
            double acc = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    acc += k[dy + 1][dx + 1] *
                           f(clamp_index(x + dx, f.width()), clamp_index(y + dy, f.height()));
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

/// Dilation by brute 3x3 neighbourhood scan.
inline BinaryMask dilate_brute(const BinaryMask& m) {
    BinaryMask out(m.width(), m.height());
    for (int y = 0; y < m.height(); ++y) {
        for (int x = 0; x < m.width(); ++x) {
            bool any = false;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    any = any || (m.contains(x + dx, y + dy) && m.test(x + dx, y + dy));
                }
            }
            out.set(x, y, any);
        }
    }
    return out;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::size_t> parent_;
};

/// Component id per pixel (root index + 1, 0 for background) via union-find.
inline std::vector<std::size_t> union_find_components(const BinaryMask& m, bool eight) {
    UnionFind uf(m.size());
    for (int y = 0; y < m.height(); ++y) {
        for (int x = 0; x < m.width(); ++x) {
            if (!m.test(x, y)) continue;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if ((dx == 0 && dy == 0) || (!eight && dx != 0 && dy != 0)) continue;
                    if (m.contains(x + dx, y + dy) && m.test(x + dx, y + dy)) {
                        uf.unite(m.index(x, y), m.index(x + dx, y + dy));
                    }
                }
            }
        }
    }
    std::vector<std::size_t> ids(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) ids[i] = uf.find(i) + 1;
    }
    return ids;
}

/// True when two labelings induce the same partition (0 must map to 0).
template <typename A, typename B>
bool same_partition(const std::vector<A>& a, const std::vector<B>& b) {
    if (a.size() != b.size()) return false;
    std::map<A, B> forward;
    std::map<B, A> backward;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        auto [f, fnew] = forward.emplace(a[i], b[i]);
        auto [g, gnew] = backward.emplace(b[i], a[i]);
        if (f->second != b[i] || g->second != a[i]) return false;
    }
    return true;
}

struct ImmersionResult {
    std::vector<std::int32_t> labels;
    std::vector<std::uint8_t> watershed;
    int basins = 0;
};

/**
 * Ordered-immersion simulation by exhaustive linear scans.
 *
 * Minima: union of equal-valued 8-neighbours, keep classes with no strictly
 * lower neighbour, number them by their smallest raster index. Flooding:
 * repeatedly take the frontier pixel with the smallest (value, entry time);
 * it joins the unique basin among its labeled neighbours, otherwise it is a
 * watershed pixel; its unvisited neighbours then enter the frontier in
 * (dy, dx) raster order.
 */
inline ImmersionResult immersion_oracle(const std::vector<int>& values, int width, int height) {
    const auto n = static_cast<std::size_t>(width * height);
    auto at = [&](int x, int y) { return values[static_cast<std::size_t>(y * width + x)]; };
    auto inside = [&](int x, int y) { return x >= 0 && y >= 0 && x < width && y < height; };

    UnionFind uf(n);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    if (inside(x + dx, y + dy) && at(x + dx, y + dy) == at(x, y))
                        uf.unite(static_cast<std::size_t>(y * width + x),
                                 static_cast<std::size_t>((y + dy) * width + x + dx));

    std::vector<bool> root_has_lower(n, false);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    if (inside(x + dx, y + dy) && at(x + dx, y + dy) < at(x, y))
                        root_has_lower[uf.find(static_cast<std::size_t>(y * width + x))] = true;

    ImmersionResult r;
    r.labels.assign(n, 0);
    r.watershed.assign(n, 0);
    std::map<std::size_t, std::int32_t> root_label;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        if (root_has_lower[root]) continue;
        auto it = root_label.find(root);
        if (it == root_label.end()) it = root_label.emplace(root, ++r.basins).first;
        r.labels[i] = it->second;
    }

    // state: 0 unvisited, 1 frontier (with entry time), 2 settled
    std::vector<int> state(n, 0);
    std::vector<long> entry(n, -1);
    long clock = 0;
    auto admit_neighbours = [&](int x, int y) {
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if ((dx == 0 && dy == 0) || !inside(x + dx, y + dy)) continue;
                const auto q = static_cast<std::size_t>((y + dy) * width + x + dx);
                if (state[q] == 0) {
                    state[q] = 1;
                    entry[q] = clock++;
                }
            }
    };
    for (std::size_t i = 0; i < n; ++i)
        if (r.labels[i] != 0) state[i] = 2;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (r.labels[static_cast<std::size_t>(y * width + x)] != 0) admit_neighbours(x, y);

    for (;;) {
        long best = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (state[i] != 1) continue;
            if (best < 0 || values[i] < values[static_cast<std::size_t>(best)] ||
                (values[i] == values[static_cast<std::size_t>(best)] &&
                 entry[i] < entry[static_cast<std::size_t>(best)])) {
                best = static_cast<long>(i);
            }
        }
        if (best < 0) break;
        const auto p = static_cast<std::size_t>(best);
        const int x = static_cast<int>(p) % width;
        const int y = static_cast<int>(p) / width;
        std::vector<std::int32_t> seen;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if ((dx == 0 && dy == 0) || !inside(x + dx, y + dy)) continue;
                const auto l = r.labels[static_cast<std::size_t>((y + dy) * width + x + dx)];
                if (l != 0 && std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
            }
        if (seen.size() == 1) {
            r.labels[p] = seen.front();
        } else {
            r.watershed[p] = 1;
        }
        state[p] = 2;
        admit_neighbours(x, y);
    }
    return r;
}

}  // namespace convexseg::testing
