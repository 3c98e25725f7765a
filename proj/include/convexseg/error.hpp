/**
 * @file error.hpp
 * @brief Error type shared by every convexseg module
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace convexseg {

enum class ErrorCode {
    FileUnreadable,
    FileUnwritable,
    MalformedHeader,
    TruncatedData,
    MalformedData,
    UnsupportedFormat,
    UnsupportedBitDepth,
    InvalidArgument,
    DimensionMismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace convexseg
