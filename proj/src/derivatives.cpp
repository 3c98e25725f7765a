#include "convexseg/derivatives.hpp"

#include <string>

namespace convexseg {

std::string_view to_string(Stencil stencil) {
    switch (stencil) {
        case Stencil::Sobel:   return "sobel";
        case Stencil::Central: return "central";
    }
    return "unknown";
}

Stencil parse_stencil(std::string_view name) {
    if (name == "sobel") {
        return Stencil::Sobel;
    }
    if (name == "central") {
        return Stencil::Central;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown stencil '" + std::string(name) + "'");
}

namespace {

void require_min_size(int width, int height, int min, const char* what) {
    if (width < min || height < min) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + " requires at least " + std::to_string(min) + "x" +
                        std::to_string(min) + ", got " + std::to_string(width) + "x" +
                        std::to_string(height));
    }
}

Gradient central_gradient(const Field& f) {
    const int width = f.width();
    const int height = f.height();
    Gradient g{Field(width, height), Field(width, height)};
    for (int y = 0; y < height; ++y) {
        const auto up = f.row(y > 0 ? y - 1 : 0);
        const auto mid = f.row(y);
        const auto down = f.row(y < height - 1 ? y + 1 : height - 1);
        auto gx = g.fx.row(y);
        auto gy = g.fy.row(y);
        for (int x = 0; x < width; ++x) {
            const auto l = static_cast<std::size_t>(x > 0 ? x - 1 : 0);
            const auto r = static_cast<std::size_t>(x < width - 1 ? x + 1 : width - 1);
            const auto c = static_cast<std::size_t>(x);
            gx[c] = (mid[r] - mid[l]) / 2.0;
            gy[c] = (down[c] - up[c]) / 2.0;
        }
    }
    return g;
}

Gradient sobel_gradient(const Field& f) {
    const int width = f.width();
    const int height = f.height();
    Gradient g{Field(width, height), Field(width, height)};
    for (int y = 0; y < height; ++y) {
        const auto up = f.row(y > 0 ? y - 1 : 0);
        const auto mid = f.row(y);
        const auto down = f.row(y < height - 1 ? y + 1 : height - 1);
        auto gx = g.fx.row(y);
        auto gy = g.fy.row(y);
        for (int x = 0; x < width; ++x) {
            const auto l = static_cast<std::size_t>(x > 0 ? x - 1 : 0);
            const auto r = static_cast<std::size_t>(x < width - 1 ? x + 1 : width - 1);
            const auto c = static_cast<std::size_t>(x);
            gx[c] = (up[r] - up[l]) + 2.0 * (mid[r] - mid[l]) + (down[r] - down[l]);
            gy[c] = (down[l] - up[l]) + 2.0 * (down[c] - up[c]) + (down[r] - up[r]);
        }
    }
    return g;
}

}  // namespace

Gradient gradient(const Field& field, Stencil stencil) {
    require_min_size(field.width(), field.height(), 3, "gradient");
    return stencil == Stencil::Sobel ? sobel_gradient(field) : central_gradient(field);
}

Gradient gradient(const Image& image, Stencil stencil) { return gradient(image.field(), stencil); }

DifferentialMaps hessian_maps(const Image& image, Stencil stencil) {
    require_min_size(image.width(), image.height(), 5, "hessian_maps");
    auto first = gradient(image.field(), stencil);
    auto from_fx = gradient(first.fx, stencil);
    auto from_fy = gradient(first.fy, stencil);

    DifferentialMaps maps;
    maps.stencil = stencil;
    maps.fx = std::move(first.fx);
    maps.fy = std::move(first.fy);
    maps.fxx = std::move(from_fx.fx);
    maps.fxy = std::move(from_fx.fy);
    maps.fyy = std::move(from_fy.fy);
    maps.det = Field(image.width(), image.height());
    maps.curvature = Field(image.width(), image.height());
    for (std::size_t i = 0; i < maps.det.size(); ++i) {
        const double d = maps.fxx[i] * maps.fyy[i] - maps.fxy[i] * maps.fxy[i];
        const double slope = 1.0 + maps.fx[i] * maps.fx[i] + maps.fy[i] * maps.fy[i];
        maps.det[i] = d;
        maps.curvature[i] = d / (slope * slope);
    }
    return maps;
}

Grid<std::int8_t> curvature_sign_field(const DifferentialMaps& maps) {
    Grid<std::int8_t> sign(maps.width(), maps.height());
    for (std::size_t i = 0; i < maps.det.size(); ++i) {
        const double d = maps.det[i];
        sign[i] = static_cast<std::int8_t>((d > 0.0) - (d < 0.0));
    }
    return sign;
}

}  // namespace convexseg
