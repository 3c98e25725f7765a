#include "convexseg/synthetic.hpp"

#include <random>

namespace convexseg::synthetic {

Image blob_image(int width, int height, const std::vector<oracle::GaussianBlob>& blobs,
                 double background) {
    const oracle::AnalyticSurface surface = oracle::gaussian_blobs(blobs);
    return Image::generate(width, height, [&](int x, int y) {
        return background + surface(static_cast<double>(x), static_cast<double>(y)).z;
    });
}

Image add_noise(const Image& image, double stddev, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, stddev);
    Field out(image.width(), image.height());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = image[i] + noise(rng);
    }
    return Image(std::move(out));
}

std::vector<oracle::GaussianBlob> two_blob_layout() {
    return {{88.0, 112.0, 16.0, 1.0}, {168.0, 144.0, 16.0, 1.0}};
}

Image noisy_two_blob(std::uint64_t seed) {
    return add_noise(blob_image(256, 256, two_blob_layout()), 0.01, seed);
}

std::vector<Image> noisy_two_blob_corpus() {
    std::vector<Image> corpus;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        corpus.push_back(noisy_two_blob(seed));
    }
    return corpus;
}

std::vector<oracle::GaussianBlob> small_large_layout() {
    return {{128.0, 160.0, 40.0, 1.0}, {188.0, 160.0, 3.0, 1.0}};
}

Image small_large_blob() { return blob_image(320, 320, small_large_layout()); }

Image random_image(int width, int height, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Field out(width, height);
    for (auto& v : out.data()) {
        v = uniform(rng);
    }
    return Image(std::move(out));
}

}  // namespace convexseg::synthetic
