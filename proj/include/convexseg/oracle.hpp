/**
 * @file oracle.hpp
 * @brief Analytic test surfaces with closed-form derivatives
 *
 * Used as ground truth for the discrete pipeline: the surfaces are sampled
 * on a grid and their exact Hessians classified with the same convexity test.
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "convexseg/classify.hpp"
#include "convexseg/image.hpp"

namespace convexseg::oracle {

/// Value and exact partial derivatives at one point.
struct SurfaceSample {
    double z = 0.0;
    double zx = 0.0;
    double zy = 0.0;
    double zxx = 0.0;
    double zxy = 0.0;
    double zyy = 0.0;

    double det() const noexcept { return zxx * zyy - zxy * zxy; }
};

struct AnalyticSurface {
    std::string name;
    std::function<SurfaceSample(double x, double y)> evaluate;

    SurfaceSample operator()(double x, double y) const { return evaluate(x, y); }
};

/**
 * 3(1-x)^2 exp(-x^2-(y+1)^2) - 2(x - 5x^3 - 5y^5) exp(-x^2-y^2) - (1/3) exp(-(x+1)^2-y^2)
 */
AnalyticSurface demo_surface();

/// The same surface written in the familiar "peaks" coefficients, 10(x/5 - x^3 - y^5).
AnalyticSurface peaks_surface();

AnalyticSurface bowl_surface();           ///< x^2 + y^2
AnalyticSurface inverted_bowl_surface();  ///< -(x^2 + y^2)
AnalyticSurface saddle_surface();         ///< x^2 - y^2
AnalyticSurface constant_surface(double value);

struct GaussianBlob {
    double cx = 0.0;
    double cy = 0.0;
    double sigma = 1.0;
    double amplitude = 1.0;
};

/// Sum of isotropic Gaussians amplitude * exp(-r^2 / (2 sigma^2)).
AnalyticSurface gaussian_blobs(std::vector<GaussianBlob> blobs);

/// Looks up a built-in surface by name: demo, peaks, bowl, inverted-bowl, saddle.
AnalyticSurface surface_by_name(const std::string& name);

/**
 * Node (i, j) sits at x = x_min + i (x_max - x_min) / (nx - 1) and
 * y = y_min + j (y_max - y_min) / (ny - 1); row j of the raster holds y_j.
 */
struct GridSpec {
    double x_min = -3.0;
    double x_max = 3.0;
    double y_min = -3.0;
    double y_max = 3.0;
    int nx = 512;
    int ny = 512;

    void validate() const;
    double x(int i) const noexcept { return x_min + i * (x_max - x_min) / (nx - 1); }
    double y(int j) const noexcept { return y_min + j * (y_max - y_min) / (ny - 1); }
};

struct Raster {
    /// Unscaled surface values at the grid nodes.
    Field raw;
    /// raw affinely rescaled to [0, 1] (0.5 everywhere for a constant surface).
    Image image;
};

Raster rasterize(const AnalyticSurface& surface, const GridSpec& grid);

/// Exact Hessian determinant at each node.
Field analytic_det(const AnalyticSurface& surface, const GridSpec& grid);

ClassificationMap analytic_classification(const AnalyticSurface& surface, const GridSpec& grid);

}  // namespace convexseg::oracle
