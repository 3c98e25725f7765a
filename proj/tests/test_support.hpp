#pragma once

#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "test_geometry.hpp"

namespace convexseg::testing {

/// Fresh per-test scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    auto dir = std::filesystem::temp_directory_path() / "convexseg_tests" /
               (std::string(info->test_suite_name()) + "." + info->name());
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace convexseg::testing
