#include "convexseg/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace convexseg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::FileUnreadable:      return "file unreadable";
        case ErrorCode::FileUnwritable:      return "file unwritable";
        case ErrorCode::MalformedHeader:     return "malformed header";
        case ErrorCode::TruncatedData:       return "truncated data";
        case ErrorCode::MalformedData:       return "malformed data";
        case ErrorCode::UnsupportedFormat:   return "unsupported format";
        case ErrorCode::UnsupportedBitDepth: return "unsupported bit depth";
        case ErrorCode::InvalidArgument:     return "invalid argument";
        case ErrorCode::DimensionMismatch:   return "dimension mismatch";
    }
    return "unknown error";
}

namespace {

void require_finite(const Field& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i])) {
            throw Error(ErrorCode::InvalidArgument,
                        "non-finite sample at index " + std::to_string(i));
        }
    }
}

}  // namespace

Image::Image(int width, int height, std::vector<double> samples)
    : samples_(width, height, std::move(samples)) {
    require_finite(samples_);
}

Image::Image(Field samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "image must be non-empty");
    }
    require_finite(samples_);
}

Image Image::generate(int width, int height, const std::function<double(int, int)>& fn) {
    Field samples(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            samples(x, y) = fn(x, y);
        }
    }
    return Image(std::move(samples));
}

std::size_t BinaryMask::count() const noexcept {
    const auto bits = data();
    return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(),
                                                  [](std::uint8_t b) { return b != 0; }));
}

namespace {

template <typename Op>
BinaryMask combine(const BinaryMask& a, const BinaryMask& b, Op op, const char* what) {
    require_same_shape(a, b, what);
    BinaryMask out(a.width(), a.height());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = op(a[i] != 0, b[i] != 0) ? 1 : 0;
    }
    return out;
}

}  // namespace

BinaryMask operator&(const BinaryMask& a, const BinaryMask& b) {
    return combine(a, b, [](bool p, bool q) { return p && q; }, "mask and");
}

BinaryMask operator|(const BinaryMask& a, const BinaryMask& b) {
    return combine(a, b, [](bool p, bool q) { return p || q; }, "mask or");
}

BinaryMask operator~(const BinaryMask& a) {
    BinaryMask out(a.width(), a.height());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] != 0 ? 0 : 1;
    }
    return out;
}

std::vector<std::size_t> LabelMap::areas() const {
    std::vector<std::size_t> result(static_cast<std::size_t>(count) + 1, 0);
    for (const auto label : labels.data()) {
        ++result[static_cast<std::size_t>(label)];
    }
    return result;
}

Image rescale_to_unit(const Field& field) {
    const auto values = field.data();
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    Field out(field.width(), field.height(), 0.5);
    if (*hi > *lo) {
        const double span = *hi - *lo;
        for (std::size_t i = 0; i < field.size(); ++i) {
            out[i] = (field[i] - *lo) / span;
        }
    }
    return Image(std::move(out));
}

std::uint8_t to_byte(double sample) noexcept {
    const double level = std::round(std::clamp(sample, 0.0, 1.0) * 255.0);
    return static_cast<std::uint8_t>(level);
}

}  // namespace convexseg
