#include "convexseg/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

namespace convexseg {

namespace {

// =============================================================================
// PGM
// =============================================================================

class PgmHeaderReader {
public:
    explicit PgmHeaderReader(std::string_view bytes) : bytes_(bytes) {}

    // Reads a non-negative decimal token, skipping whitespace and '#' comments.
    long next_int(const char* field) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            throw Error(ErrorCode::MalformedHeader, std::string("expected ") + field);
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000'000L) {
                throw Error(ErrorCode::MalformedHeader, std::string(field) + " out of range");
            }
            ++pos_;
        }
        return value;
    }

    // Exactly one whitespace byte separates maxval from a binary raster.
    void end_binary_header() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw Error(ErrorCode::MalformedHeader, "missing whitespace after maxval");
        }
        ++pos_;
    }

    std::size_t position() const noexcept { return pos_; }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
                    ++pos_;
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view bytes_;
    std::size_t pos_ = 2;
};

Image parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw Error(ErrorCode::UnsupportedFormat, "not a P2/P5 PGM stream");
    }
    const bool ascii = bytes[1] == '2';
    PgmHeaderReader header(bytes);
    const long width = header.next_int("width");
    const long height = header.next_int("height");
    const long maxval = header.next_int("maxval");
    if (width <= 0 || height <= 0) {
        throw Error(ErrorCode::MalformedHeader, "dimensions must be positive");
    }
    if (maxval == 0) {
        throw Error(ErrorCode::MalformedHeader, "maxval must be positive");
    }
    if (maxval > 65535) {
        throw Error(ErrorCode::UnsupportedBitDepth,
                    "maxval " + std::to_string(maxval) + " exceeds 16 bits");
    }

    const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    const auto scale = static_cast<double>(maxval);
    std::vector<double> samples(count);

    auto store = [&](std::size_t i, long value) {
        if (value > maxval) {
            throw Error(ErrorCode::MalformedData, "sample " + std::to_string(value) +
                                                      " exceeds maxval " + std::to_string(maxval));
        }
        samples[i] = static_cast<double>(value) / scale;
    };

    if (ascii) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                store(i, header.next_int("sample"));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::MalformedHeader) {
                    throw;
                }
                throw Error(ErrorCode::TruncatedData, "ASCII raster ends after " +
                                                          std::to_string(i) + " samples");
            }
        }
    } else {
        header.end_binary_header();
        const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
        const std::size_t offset = header.position();
        if (bytes.size() - offset < count * bytes_per_sample) {
            throw Error(ErrorCode::TruncatedData,
                        "raster needs " + std::to_string(count * bytes_per_sample) +
                            " bytes, found " + std::to_string(bytes.size() - offset));
        }
        const auto* raster = reinterpret_cast<const unsigned char*>(bytes.data() + offset);
        for (std::size_t i = 0; i < count; ++i) {
            const long value = bytes_per_sample == 1
                                   ? raster[i]
                                   : (static_cast<long>(raster[2 * i]) << 8) | raster[2 * i + 1];
            store(i, value);
        }
    }
    return Image(static_cast<int>(width), static_cast<int>(height), std::move(samples));
}

// =============================================================================
// PNG (libpng; error paths use setjmp, so no non-trivial locals live in the
// frames that call into libpng)
// =============================================================================

struct PngErrorContext {
    std::array<char, 256> message{};
};

extern "C" void on_png_error(png_structp png, png_const_charp msg) {
    auto* ctx = static_cast<PngErrorContext*>(png_get_error_ptr(png));
    std::snprintf(ctx->message.data(), ctx->message.size(), "%s", msg);
    png_longjmp(png, 1);
}

extern "C" void on_png_warning(png_structp, png_const_charp) {}

struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngRaster {
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    int channels = 0;
    int bit_depth = 0;
    int color_type = 0;
    std::vector<png_byte> bytes;
    std::vector<png_bytep> rows;
};

enum class PngStatus { Ok, LibraryError, UnsupportedBitDepth };

PngStatus read_png_raster(png_structp png, png_infop info, PngRaster& raster) {
    if (setjmp(png_jmpbuf(png))) {
        return PngStatus::LibraryError;
    }
    png_read_info(png, info);
    const int color_type = png_get_color_type(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    } else if (bit_depth < 8) {
        raster.bit_depth = bit_depth;
        return PngStatus::UnsupportedBitDepth;
    }
    if (color_type & PNG_COLOR_MASK_ALPHA) {
        png_set_strip_alpha(png);
    }
    png_read_update_info(png, info);

    raster.width = png_get_image_width(png, info);
    raster.height = png_get_image_height(png, info);
    raster.channels = png_get_channels(png, info);
    raster.bit_depth = png_get_bit_depth(png, info);
    raster.color_type = png_get_color_type(png, info);
    const std::size_t rowbytes = png_get_rowbytes(png, info);
    raster.bytes.resize(rowbytes * raster.height);
    raster.rows.resize(raster.height);
    for (png_uint_32 y = 0; y < raster.height; ++y) {
        raster.rows[y] = raster.bytes.data() + y * rowbytes;
    }
    png_read_image(png, raster.rows.data());
    png_read_end(png, nullptr);
    return PngStatus::Ok;
}

Image load_png(const std::filesystem::path& path, const LoadOptions& options) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) {
        throw Error(ErrorCode::FileUnreadable, path.string());
    }
    PngErrorContext ctx;
    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, &ctx, on_png_error, on_png_warning);
    if (png == nullptr) {
        throw Error(ErrorCode::FileUnreadable, "cannot initialize PNG reader");
    }
    png_infop info = png_create_info_struct(png);
    png_init_io(png, file.get());

    PngRaster raster;
    const PngStatus status = info != nullptr ? read_png_raster(png, info, raster)
                                             : PngStatus::LibraryError;
    png_destroy_read_struct(&png, info != nullptr ? &info : nullptr, nullptr);

    if (status == PngStatus::UnsupportedBitDepth) {
        throw Error(ErrorCode::UnsupportedBitDepth,
                    path.string() + ": " + std::to_string(raster.bit_depth) + "-bit gray");
    }
    if (status != PngStatus::Ok) {
        throw Error(ErrorCode::MalformedData, path.string() + ": " + ctx.message.data());
    }
    if (raster.channels != 1 && raster.channels != 3) {
        throw Error(ErrorCode::UnsupportedFormat,
                    path.string() + ": " + std::to_string(raster.channels) + " channels");
    }

    const bool wide = raster.bit_depth == 16;
    const double maxval = wide ? 65535.0 : 255.0;
    const auto channel = [&](std::size_t sample) -> double {
        if (wide) {
            return static_cast<double>((raster.bytes[2 * sample] << 8) | raster.bytes[2 * sample + 1]);
        }
        return static_cast<double>(raster.bytes[sample]);
    };

    const auto width = static_cast<int>(raster.width);
    const auto height = static_cast<int>(raster.height);
    std::vector<double> samples(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    const auto& luma = options.luma;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double gray = 0.0;
        if (raster.channels == 1) {
            gray = channel(i);
        } else {
            gray = luma.red * channel(3 * i) + luma.green * channel(3 * i + 1) +
                   luma.blue * channel(3 * i + 2);
        }
        samples[i] = std::clamp(gray / maxval, 0.0, 1.0);
    }
    return Image(width, height, std::move(samples));
}

bool write_png_raster(png_structp png, png_infop info, const RgbImage& image,
                      std::vector<png_bytep>& rows) {
    if (setjmp(png_jmpbuf(png))) {
        return false;
    }
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width()),
                 static_cast<png_uint_32>(image.height()), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    return true;
}

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::FileUnreadable, path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

constexpr std::array<unsigned char, 8> kPngSignature = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

}  // namespace

Image read_pgm(std::istream& in) {
    const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_pgm(bytes);
}

Image load_image(const std::filesystem::path& path, const LoadOptions& options) {
    const std::string bytes = read_all(path);
    if (bytes.size() >= kPngSignature.size() &&
        std::memcmp(bytes.data(), kPngSignature.data(), kPngSignature.size()) == 0) {
        return load_png(path, options);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P') {
        return parse_pgm(bytes);
    }
    throw Error(ErrorCode::UnsupportedFormat, path.string() + ": neither PGM nor PNG");
}

BinaryMask load_mask(const std::filesystem::path& path) {
    const Image image = load_image(path);
    BinaryMask mask(image.width(), image.height());
    for (std::size_t i = 0; i < image.size(); ++i) {
        mask[i] = image[i] > 0.5 ? 1 : 0;
    }
    return mask;
}

void write_mask(const BinaryMask& mask, std::ostream& out) {
    out << "P5\n" << mask.width() << ' ' << mask.height() << "\n255\n";
    std::string payload(mask.size(), '\0');
    for (std::size_t i = 0; i < mask.size(); ++i) {
        payload[i] = mask[i] != 0 ? static_cast<char>(255) : '\0';
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

void save_mask(const BinaryMask& mask, const std::filesystem::path& path) {
    if (mask.empty()) {
        throw Error(ErrorCode::InvalidArgument, "cannot save an empty mask");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::FileUnwritable, path.string());
    }
    write_mask(mask, out);
    if (!out) {
        throw Error(ErrorCode::FileUnwritable, path.string());
    }
}

void save_pgm(const Image& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::FileUnwritable, path.string());
    }
    out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
    std::string payload(image.size(), '\0');
    for (std::size_t i = 0; i < image.size(); ++i) {
        payload[i] = static_cast<char>(to_byte(image[i]));
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) {
        throw Error(ErrorCode::FileUnwritable, path.string());
    }
}

void save_png(const RgbImage& image, const std::filesystem::path& path) {
    if (image.empty()) {
        throw Error(ErrorCode::InvalidArgument, "cannot save an empty image");
    }
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) {
        throw Error(ErrorCode::FileUnwritable, path.string());
    }
    PngErrorContext ctx;
    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, &ctx, on_png_error, on_png_warning);
    if (png == nullptr) {
        throw Error(ErrorCode::FileUnwritable, "cannot initialize PNG writer");
    }
    png_infop info = png_create_info_struct(png);
    png_init_io(png, file.get());

    // Rgb is a packed 3-byte array, so each grid row is a ready-made PNG row.
    static_assert(sizeof(Rgb) == 3);
    std::vector<png_bytep> rows(static_cast<std::size_t>(image.height()));
    for (int y = 0; y < image.height(); ++y) {
        rows[static_cast<std::size_t>(y)] =
            const_cast<png_bytep>(reinterpret_cast<const png_byte*>(image.row(y).data()));
    }
    const bool ok = info != nullptr && write_png_raster(png, info, image, rows);
    png_destroy_write_struct(&png, info != nullptr ? &info : nullptr);
    if (!ok) {
        throw Error(ErrorCode::FileUnwritable, path.string() + ": " + ctx.message.data());
    }
    if (std::fflush(file.get()) != 0) {
        throw Error(ErrorCode::FileUnwritable, path.string());
    }
}

}  // namespace convexseg
