#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "convexseg/bench.hpp"
#include "convexseg/multiscale.hpp"
#include "convexseg/synthetic.hpp"

namespace convexseg::bench {
namespace {

TEST(TimeStage, WarmUpPlusRequestedRuns) {
    int calls = 0;
    const BenchReport r = time_stage("noop", 10, 20, 1.5, [&] { ++calls; }, 7);
    EXPECT_EQ(calls, 8);
    EXPECT_EQ(r.runs, 7);
    EXPECT_EQ(r.stage, "noop");
    EXPECT_EQ(r.width, 10);
    EXPECT_EQ(r.height, 20);
    EXPECT_EQ(r.sigma, 1.5);
    EXPECT_EQ(r.threads, 1);
}

TEST(TimeStage, EnforcesMinimumRuns) {
    int calls = 0;
    const BenchReport r = time_stage("noop", 1, 1, 1.0, [&] { ++calls; }, 1);
    EXPECT_EQ(r.runs, kMinRuns);
    EXPECT_EQ(calls, kMinRuns + 1);
}

TEST(TimeStage, ThroughputIsPixelsPerMedianSecond) {
    volatile double sink = 0.0;
    const BenchReport r = time_stage("spin", 300, 200, 1.0, [&] {
        for (int i = 0; i < 20000; ++i) sink = sink + std::sqrt(static_cast<double>(i));
    });
    ASSERT_GT(r.seconds, 0.0);
    EXPECT_DOUBLE_EQ(r.throughput, 300.0 * 200.0 / r.seconds);
}

TEST(BenchPipeline, ReportsEveryStage) {
    const auto reports = bench_pipeline({{64, 48}}, {2.0, 3.0}, 5);
    ASSERT_EQ(reports.size(), 12u);
    std::set<std::string> stages;
    for (const auto& r : reports) {
        stages.insert(r.stage);
        EXPECT_EQ(r.width, 64);
        EXPECT_EQ(r.height, 48);
        EXPECT_GE(r.runs, kMinRuns);
        EXPECT_TRUE(std::isfinite(r.seconds));
        EXPECT_GE(r.seconds, 0.0);
    }
    EXPECT_EQ(stages, (std::set<std::string>{"smooth", "maps", "classify", "boundary", "detect",
                                              "watershed"}));
}

TEST(BenchPipeline, DoesNotAlterOutputs) {
    const Image image = synthetic::noisy_two_blob(3);
    const Detection before = detect_at_scale(image, 4.0);
    (void)bench_pipeline({{96, 96}}, {4.0}, 5);
    const Detection after = detect_at_scale(image, 4.0);
    EXPECT_EQ(before.region, after.region);
    EXPECT_EQ(before.boundary, after.boundary);
}

TEST(LinearFit, ExactLine) {
    const auto [a, b] = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
    EXPECT_NEAR(a, 1.0, 1e-12);
    EXPECT_NEAR(b, 2.0, 1e-12);
}

TEST(LinearFit, RejectsDegenerateInput) {
    EXPECT_THROW(linear_fit({1}, {2}), Error);
    EXPECT_THROW(linear_fit({2, 2}, {1, 3}), Error);
    EXPECT_THROW(linear_fit({1, 2}, {1}), Error);
}

TEST(WriteReport, KeyValueBlocks) {
    BenchReport r{"detect", 1200, 1200, 10.0, 0.5, 5, 2880000.0, 1};
    std::ostringstream out;
    write_report(out, {r, r});
    const std::string block =
        "stage=detect\nwidth=1200\nheight=1200\nsigma=10\nseconds=0.5\nruns=5\n"
        "throughput=2.88e+06\nthreads=1\n";
    EXPECT_EQ(out.str(), block + "\n" + block);
}

}  // namespace
}  // namespace convexseg::bench
