#include "convexseg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "convexseg/classify.hpp"
#include "convexseg/derivatives.hpp"
#include "convexseg/morphology.hpp"
#include "convexseg/multiscale.hpp"
#include "convexseg/smoothing.hpp"
#include "convexseg/synthetic.hpp"
#include "convexseg/watershed.hpp"

namespace convexseg::bench {

BenchReport time_stage(const std::string& stage, int width, int height, double sigma,
                       const std::function<void()>& fn, int runs) {
    runs = std::max(runs, kMinRuns);
    using Clock = std::chrono::steady_clock;
    fn();
    std::vector<double> seconds;
    seconds.reserve(static_cast<std::size_t>(runs));
    for (int i = 0; i < runs; ++i) {
        const auto start = Clock::now();
        fn();
        seconds.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    }
    std::sort(seconds.begin(), seconds.end());
    const std::size_t mid = seconds.size() / 2;
    const double median =
        seconds.size() % 2 == 1 ? seconds[mid] : 0.5 * (seconds[mid - 1] + seconds[mid]);

    BenchReport report;
    report.stage = stage;
    report.width = width;
    report.height = height;
    report.sigma = sigma;
    report.seconds = median;
    report.runs = runs;
    report.throughput = median > 0.0 ? static_cast<double>(width) * height / median : 0.0;
    return report;
}

std::vector<BenchReport> bench_pipeline(const std::vector<std::pair<int, int>>& sizes,
                                        const std::vector<double>& sigmas, int runs) {
    std::vector<BenchReport> reports;
    for (const auto& [width, height] : sizes) {
        // Blobs scaled to the frame, plus noise, so every stage sees structure.
        const double s = std::min(width, height);
        const Image image = synthetic::add_noise(
            synthetic::blob_image(width, height,
                                  {{0.35 * width, 0.45 * height, 0.06 * s, 1.0},
                                   {0.65 * width, 0.55 * height, 0.06 * s, 1.0}}),
            0.01, 7);
        for (const double sigma : sigmas) {
            const GaussianKernel kernel = make_kernel(sigma);
            const Image smoothed = smooth(image, kernel);
            const DifferentialMaps maps = hessian_maps(smoothed);
            const ClassificationMap labels = classify(maps);
            const BinaryMask region = region_mask(labels, RegionMode::Combined);

            reports.push_back(time_stage("smooth", width, height, sigma,
                                         [&] { (void)smooth(image, kernel); }, runs));
            reports.push_back(time_stage("maps", width, height, sigma,
                                         [&] { (void)hessian_maps(smoothed); }, runs));
            reports.push_back(
                time_stage("classify", width, height, sigma,
                           [&] { (void)region_mask(classify(maps), RegionMode::Combined); }, runs));
            reports.push_back(time_stage("boundary", width, height, sigma,
                                         [&] { (void)exterior_boundary(region); }, runs));
            reports.push_back(time_stage("detect", width, height, sigma,
                                         [&] { (void)detect_at_scale(image, sigma); }, runs));
            reports.push_back(time_stage("watershed", width, height, sigma,
                                         [&] { (void)watershed_contours(image, sigma); }, runs));
        }
    }
    return reports;
}

std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "linear_fit needs two or more paired points");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "linear_fit needs distinct x values");
    }
    const double slope = (n * sxy - sx * sy) / denom;
    return {(sy - slope * sx) / n, slope};
}

void write_report(std::ostream& out, const std::vector<BenchReport>& reports) {
    bool first = true;
    for (const auto& r : reports) {
        if (!first) {
            out << '\n';
        }
        first = false;
        out << "stage=" << r.stage << '\n'
            << "width=" << r.width << '\n'
            << "height=" << r.height << '\n'
            << "sigma=" << r.sigma << '\n'
            << "seconds=" << r.seconds << '\n'
            << "runs=" << r.runs << '\n'
            << "throughput=" << r.throughput << '\n'
            << "threads=" << r.threads << '\n';
    }
}

}  // namespace convexseg::bench
