/**
 * @file synthetic.hpp
 * @brief Deterministic synthetic test images (Gaussian blobs, noise, ramps)
 */

#pragma once

#include <cstdint>
#include <vector>

#include "convexseg/image.hpp"
#include "convexseg/oracle.hpp"

namespace convexseg::synthetic {

/// Blobs in pixel coordinates (cx, cy in columns/rows, sigma in pixels).
Image blob_image(int width, int height, const std::vector<oracle::GaussianBlob>& blobs,
                 double background = 0.0);

/// Adds N(0, stddev^2) noise from a seeded Mersenne Twister.
Image add_noise(const Image& image, double stddev, std::uint64_t seed);

/// Two unit-amplitude blobs on a 256x256 field.
std::vector<oracle::GaussianBlob> two_blob_layout();

/// Noisy two-blob image: two_blob_layout() plus 1% Gaussian noise.
Image noisy_two_blob(std::uint64_t seed);

/// Seeds 1..10 of noisy_two_blob.
std::vector<Image> noisy_two_blob_corpus();

/// Large blob (sigma 40) with a small blob (sigma 3) on its flank, 320x320.
std::vector<oracle::GaussianBlob> small_large_layout();
Image small_large_blob();

/// Uniform [0, 1) samples from a seeded generator.
Image random_image(int width, int height, std::uint64_t seed);

}  // namespace convexseg::synthetic
