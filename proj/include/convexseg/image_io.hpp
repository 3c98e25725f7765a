/**
 * @file image_io.hpp
 * @brief PGM (P2/P5) and PNG reading, PGM mask writing, PNG overlay writing
 *
 * Loaded samples are normalized to [0, 1] by the format's maximum value.
 * Color PNGs are reduced to gray with configurable luma weights
 * (Rec.601 by default) before normalization.
 */

#pragma once

#include <filesystem>
#include <iosfwd>

#include "convexseg/image.hpp"

namespace convexseg {

struct LumaCoefficients {
    double red = 0.299;
    double green = 0.587;
    double blue = 0.114;
};

struct LoadOptions {
    LumaCoefficients luma;
};

Image load_image(const std::filesystem::path& path, const LoadOptions& options = {});

/// Parses a PGM stream (P2 or P5, maxval up to 65535).
Image read_pgm(std::istream& in);

/// Loads a PGM mask; any sample above one half becomes true.
BinaryMask load_mask(const std::filesystem::path& path);

/// Writes a binary P5 PGM with maxval 255, true as 255 and false as 0.
void save_mask(const BinaryMask& mask, const std::filesystem::path& path);
void write_mask(const BinaryMask& mask, std::ostream& out);

/// Writes an image as 8-bit P5 PGM after rounding samples in [0, 1].
void save_pgm(const Image& image, const std::filesystem::path& path);

void save_png(const RgbImage& image, const std::filesystem::path& path);

}  // namespace convexseg
