/**
 * @file smoothing.hpp
 * @brief Separable Gaussian scale-space smoothing
 *
 * The kernel is truncated at radius ceil(2 sigma) (window 2*ceil(2 sigma)+1)
 * and renormalized so the weights sum to one. Borders are replicated.
 */

#pragma once

#include <vector>

#include "convexseg/image.hpp"

namespace convexseg {

/// One-dimensional half of the separable 2-D Gaussian.
class GaussianKernel {
public:
    explicit GaussianKernel(double sigma);

    double sigma() const noexcept { return sigma_; }
    int radius() const noexcept { return radius_; }
    int size() const noexcept { return 2 * radius_ + 1; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double operator[](int i) const noexcept { return weights_[static_cast<std::size_t>(i)]; }

private:
    double sigma_;
    int radius_;
    std::vector<double> weights_;
};

/// Throws InvalidArgument unless sigma is finite and positive.
GaussianKernel make_kernel(double sigma);

/// Horizontal pass then vertical pass, replicate borders.
Image smooth(const Image& image, const GaussianKernel& kernel);

inline Image smooth(const Image& image, double sigma) { return smooth(image, make_kernel(sigma)); }

}  // namespace convexseg
