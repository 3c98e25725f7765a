/**
 * @file bench.hpp
 * @brief Stage timings for the detection pipeline and the watershed baseline
 *
 * Each measurement discards one warm-up run and reports the median of the
 * remaining runs.
 */

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "convexseg/image.hpp"

namespace convexseg::bench {

struct BenchReport {
    std::string stage;
    int width = 0;
    int height = 0;
    double sigma = 0.0;
    /// Median wall-clock seconds per run.
    double seconds = 0.0;
    int runs = 0;
    /// width * height / seconds.
    double throughput = 0.0;
    int threads = 1;
};

inline constexpr int kMinRuns = 5;

/// Times fn: one discarded warm-up call, then `runs` timed calls (at least kMinRuns).
BenchReport time_stage(const std::string& stage, int width, int height, double sigma,
                       const std::function<void()>& fn, int runs = kMinRuns);

/// Times smooth, maps, classify, boundary, detect and watershed for every size and sigma.
std::vector<BenchReport> bench_pipeline(const std::vector<std::pair<int, int>>& sizes,
                                        const std::vector<double>& sigmas, int runs = kMinRuns);

/// Least-squares line through (x, y); returns {intercept, slope}.
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// key=value lines, one block per report, blank line between blocks.
void write_report(std::ostream& out, const std::vector<BenchReport>& reports);

}  // namespace convexseg::bench
