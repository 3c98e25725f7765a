/**
 * @file derivatives.hpp
 * @brief First/second derivative fields, Hessian determinant and Gaussian curvature
 *
 * Second derivatives are obtained by applying the first-derivative stencil
 * twice: (fxx, fxy) from the gradient of fx, fyy from the gradient of fy.
 * The y-then-x mixed derivative is never formed.
 *
 * Sign conventions: fx is positive where intensity increases to the right,
 * fy is positive where intensity increases downward (toward larger row index).
 */

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "convexseg/image.hpp"

namespace convexseg {

enum class Stencil {
    /// 3x3 Sobel correlation, [[-1,0,1],[-2,0,2],[-1,0,1]] for x and its transpose for y.
    Sobel,
    /// (f(p+1) - f(p-1)) / 2.
    Central,
};

std::string_view to_string(Stencil stencil);
Stencil parse_stencil(std::string_view name);

struct Gradient {
    Field fx;
    Field fy;
};

struct DifferentialMaps {
    Field fx, fy;
    Field fxx, fxy, fyy;
    /// Hessian determinant fxx*fyy - fxy^2.
    Field det;
    /// Gaussian curvature det / (1 + fx^2 + fy^2)^2.
    Field curvature;
    Stencil stencil = Stencil::Sobel;

    int width() const noexcept { return det.width(); }
    int height() const noexcept { return det.height(); }
};

/// Requires at least 3x3; replicate borders.
Gradient gradient(const Field& field, Stencil stencil);
Gradient gradient(const Image& image, Stencil stencil);

/// Requires at least 5x5.
DifferentialMaps hessian_maps(const Image& image, Stencil stencil = Stencil::Sobel);

/// Per-pixel sign of the determinant in {-1, 0, +1}; equals the sign of K.
Grid<std::int8_t> curvature_sign_field(const DifferentialMaps& maps);

}  // namespace convexseg
