#include "convexseg/oracle.hpp"

#include <cmath>

namespace convexseg::oracle {

namespace {

// Polynomial factor of a P(x, y) * exp(Q) term with its partials.
struct Poly {
    double p, px, py, pxx, pxy, pyy;
};

// exp(-c ((x - x0)^2 + (y - y0)^2)) term; the exponent's partials are
// qx = -2c(x - x0), qy = -2c(y - y0), qxx = qyy = -2c, qxy = 0.
SurfaceSample gaussian_term(const Poly& p, double c, double dx, double dy) {
    const double e = std::exp(-c * (dx * dx + dy * dy));
    const double qx = -2.0 * c * dx;
    const double qy = -2.0 * c * dy;
    const double qxx = -2.0 * c;
    const double qyy = -2.0 * c;
    SurfaceSample s;
    s.z = p.p * e;
    s.zx = (p.px + p.p * qx) * e;
    s.zy = (p.py + p.p * qy) * e;
    s.zxx = (p.pxx + 2.0 * p.px * qx + p.p * (qxx + qx * qx)) * e;
    s.zyy = (p.pyy + 2.0 * p.py * qy + p.p * (qyy + qy * qy)) * e;
    s.zxy = (p.pxy + p.px * qy + p.py * qx + p.p * qx * qy) * e;
    return s;
}

SurfaceSample& operator+=(SurfaceSample& a, const SurfaceSample& b) {
    a.z += b.z;
    a.zx += b.zx;
    a.zy += b.zy;
    a.zxx += b.zxx;
    a.zxy += b.zxy;
    a.zyy += b.zyy;
    return a;
}

SurfaceSample peaks_like(double x, double y, const Poly& middle) {
    const double u = 1.0 - x;
    SurfaceSample s = gaussian_term({3.0 * u * u, -6.0 * u, 0.0, 6.0, 0.0, 0.0}, 1.0, x, y + 1.0);
    s += gaussian_term(middle, 1.0, x, y);
    s += gaussian_term({-1.0 / 3.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 1.0, x + 1.0, y);
    return s;
}

}  // namespace

AnalyticSurface demo_surface() {
    return {"demo", [](double x, double y) {
                // -2 (x - 5x^3 - 5y^5)
                const double x2 = x * x;
                const double y3 = y * y * y;
                const Poly middle{-2.0 * (x - 5.0 * x2 * x - 5.0 * y3 * y * y),
                                  -2.0 * (1.0 - 15.0 * x2),
                                  -2.0 * (-25.0 * y3 * y),
                                  -2.0 * (-30.0 * x),
                                  0.0,
                                  -2.0 * (-100.0 * y3)};
                return peaks_like(x, y, middle);
            }};
}

AnalyticSurface peaks_surface() {
    return {"peaks", [](double x, double y) {
                // -10 (x/5 - x^3 - y^5)
                const double x2 = x * x;
                const double y3 = y * y * y;
                const Poly middle{-10.0 * (x / 5.0 - x2 * x - y3 * y * y),
                                  -10.0 * (0.2 - 3.0 * x2),
                                  -10.0 * (-5.0 * y3 * y),
                                  -10.0 * (-6.0 * x),
                                  0.0,
                                  -10.0 * (-20.0 * y3)};
                return peaks_like(x, y, middle);
            }};
}

AnalyticSurface bowl_surface() {
    return {"bowl", [](double x, double y) {
                return SurfaceSample{x * x + y * y, 2.0 * x, 2.0 * y, 2.0, 0.0, 2.0};
            }};
}

AnalyticSurface inverted_bowl_surface() {
    return {"inverted-bowl", [](double x, double y) {
                return SurfaceSample{-(x * x + y * y), -2.0 * x, -2.0 * y, -2.0, 0.0, -2.0};
            }};
}

AnalyticSurface saddle_surface() {
    return {"saddle", [](double x, double y) {
                return SurfaceSample{x * x - y * y, 2.0 * x, -2.0 * y, 2.0, 0.0, -2.0};
            }};
}

AnalyticSurface constant_surface(double value) {
    return {"constant", [value](double, double) { return SurfaceSample{value, 0, 0, 0, 0, 0}; }};
}

AnalyticSurface gaussian_blobs(std::vector<GaussianBlob> blobs) {
    return {"gaussian-blobs", [blobs = std::move(blobs)](double x, double y) {
                SurfaceSample total;
                for (const auto& b : blobs) {
                    const Poly amplitude{b.amplitude, 0.0, 0.0, 0.0, 0.0, 0.0};
                    total += gaussian_term(amplitude, 1.0 / (2.0 * b.sigma * b.sigma), x - b.cx,
                                           y - b.cy);
                }
                return total;
            }};
}

AnalyticSurface surface_by_name(const std::string& name) {
    if (name == "demo") return demo_surface();
    if (name == "peaks") return peaks_surface();
    if (name == "bowl") return bowl_surface();
    if (name == "inverted-bowl") return inverted_bowl_surface();
    if (name == "saddle") return saddle_surface();
    throw Error(ErrorCode::InvalidArgument, "unknown surface '" + name + "'");
}

void GridSpec::validate() const {
    if (!(x_min < x_max) || !(y_min < y_max) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
        !std::isfinite(y_min) || !std::isfinite(y_max)) {
        throw Error(ErrorCode::InvalidArgument, "grid extent must satisfy min < max");
    }
    if (nx < 2 || ny < 2) {
        throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 nodes per axis");
    }
}

Raster rasterize(const AnalyticSurface& surface, const GridSpec& grid) {
    grid.validate();
    Field raw(grid.nx, grid.ny);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            raw(i, j) = surface(grid.x(i), grid.y(j)).z;
        }
    }
    Image image = rescale_to_unit(raw);
    return {std::move(raw), std::move(image)};
}

Field analytic_det(const AnalyticSurface& surface, const GridSpec& grid) {
    grid.validate();
    Field det(grid.nx, grid.ny);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            det(i, j) = surface(grid.x(i), grid.y(j)).det();
        }
    }
    return det;
}

ClassificationMap analytic_classification(const AnalyticSurface& surface, const GridSpec& grid) {
    grid.validate();
    ClassificationMap labels(grid.nx, grid.ny, Curvature::Neither);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const SurfaceSample s = surface(grid.x(i), grid.y(j));
            labels(i, j) = classify_pixel(s.det(), s.zxx);
        }
    }
    return labels;
}

}  // namespace convexseg::oracle
