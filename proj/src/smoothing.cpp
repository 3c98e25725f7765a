#include "convexseg/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace convexseg {

GaussianKernel::GaussianKernel(double sigma) : sigma_(sigma) {
    if (!std::isfinite(sigma) || sigma <= 0.0) {
        throw Error(ErrorCode::InvalidArgument,
                    "sigma must be finite and positive, got " + std::to_string(sigma));
    }
    radius_ = static_cast<int>(std::ceil(2.0 * sigma));
    weights_.resize(static_cast<std::size_t>(size()));
    const double denom = 2.0 * sigma * sigma;
    double total = 0.0;
    for (int i = 0; i < size(); ++i) {
        const double d = static_cast<double>(i - radius_);
        weights_[static_cast<std::size_t>(i)] = std::exp(-d * d / denom);
        total += weights_[static_cast<std::size_t>(i)];
    }
    for (auto& w : weights_) {
        w /= total;
    }
}

GaussianKernel make_kernel(double sigma) { return GaussianKernel(sigma); }

Image smooth(const Image& image, const GaussianKernel& kernel) {
    if (image.empty()) {
        throw Error(ErrorCode::InvalidArgument, "cannot smooth an empty image");
    }
    const int width = image.width();
    const int height = image.height();
    const int radius = kernel.radius();
    const int taps = kernel.size();
    const double* w = kernel.weights().data();

    // Horizontal pass over a replicate-padded copy of each row.
    Field horizontal(width, height);
    std::vector<double> padded(static_cast<std::size_t>(width + 2 * radius));
    for (int y = 0; y < height; ++y) {
        const auto src = image.row(y);
        for (int i = 0; i < width + 2 * radius; ++i) {
            padded[static_cast<std::size_t>(i)] =
                src[static_cast<std::size_t>(std::clamp(i - radius, 0, width - 1))];
        }
        auto dst = horizontal.row(y);
        for (int x = 0; x < width; ++x) {
            const double* p = padded.data() + x;
            double acc = 0.0;
            for (int k = 0; k < taps; ++k) {
                acc += w[k] * p[k];
            }
            dst[static_cast<std::size_t>(x)] = acc;
        }
    }

    // Vertical pass, accumulated row by row; per pixel the taps are summed in
    // the same k order as the horizontal pass.
    Field out(width, height);
    for (int y = 0; y < height; ++y) {
        auto dst = out.row(y);
        std::fill(dst.begin(), dst.end(), 0.0);
        for (int k = 0; k < taps; ++k) {
            const auto src = horizontal.row(std::clamp(y + k - radius, 0, height - 1));
            const double wk = w[k];
            for (int x = 0; x < width; ++x) {
                dst[static_cast<std::size_t>(x)] += wk * src[static_cast<std::size_t>(x)];
            }
        }
    }
    return Image(std::move(out));
}

}  // namespace convexseg
