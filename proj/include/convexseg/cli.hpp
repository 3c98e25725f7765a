/**
 * @file cli.hpp
 * @brief Command-line front end: flag parsing and command execution
 *
 * Commands: smooth, maps, classify, boundary, detect, multiscale, watershed,
 * compare, oracle. Invoking the tool with only an input path runs detect.
 * Exit status is 0 on success, 1 for I/O or pipeline failures and 2 for
 * usage errors.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "convexseg/classify.hpp"
#include "convexseg/derivatives.hpp"
#include "convexseg/morphology.hpp"
#include "convexseg/oracle.hpp"
#include "convexseg/overlay.hpp"

namespace convexseg::cli {

enum class Command { Smooth, Maps, Classify, Boundary, Detect, Multiscale, Watershed, Compare, Oracle };

std::string_view to_string(Command command);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::Detect;
    std::filesystem::path input;
    std::filesystem::path out_dir = ".";
    /// Output file stem; defaults to the input stem (or the surface name for oracle).
    std::string prefix;
    double sigma = 10.0;
    std::optional<double> sigma2;
    RegionMode mode = RegionMode::Combined;
    Stencil stencil = Stencil::Sobel;
    std::size_t min_area = 0;
    Connectivity connectivity = Connectivity::Eight;
    OverlayOptions overlay;
    /// Emit wall-clock lines in reports (turn off for byte-reproducible reports).
    bool timing = true;
    std::string surface = "demo";
    oracle::GridSpec grid;

    /// Throws InvalidArgument when a command-specific requirement is unmet.
    void validate() const;
    std::string output_stem() const;
    std::filesystem::path output(const std::string& suffix) const;
};

struct ParseResult {
    std::optional<RunConfig> config;
    /// Set when parsing ended the invocation (help or usage error).
    int exit_code = kExitOk;
};

/// Parses argv; usage messages go to err, help to out.
ParseResult parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a validated config; progress and reports go to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + run.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CompareSummary {
    std::size_t convexity_components = 0;
    std::size_t watershed_basins = 0;
    std::size_t watershed_pixels = 0;
    std::size_t boundary_pixels = 0;
};

/// Key=value lines for the compare report.
void write_compare_report(std::ostream& out, const RunConfig& config, int width, int height,
                          const CompareSummary& summary,
                          const std::vector<std::pair<std::string, double>>& timings);

}  // namespace convexseg::cli
