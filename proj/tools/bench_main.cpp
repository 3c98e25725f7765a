// Stage timings for the detection pipeline and the watershed baseline,
// written as key=value blocks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "convexseg/bench.hpp"

int main(int argc, char** argv) {
    CLI::App app{"convexseg pipeline benchmarks"};
    std::vector<int> sizes{1200};
    std::vector<double> sigmas{10.0};
    int runs = convexseg::bench::kMinRuns;
    std::string output;
    app.add_option("--sizes", sizes, "square image sizes in pixels")->capture_default_str();
    app.add_option("--sigmas", sigmas, "smoothing sigmas")->capture_default_str();
    app.add_option("--runs", runs, "timed runs per stage (minimum 5)")->capture_default_str();
    app.add_option("-o,--output", output, "write the report here as well as to stdout");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<std::pair<int, int>> dims;
    for (const int s : sizes) {
        dims.emplace_back(s, s);
    }
    try {
        const auto reports = convexseg::bench::bench_pipeline(dims, sigmas, runs);
        convexseg::bench::write_report(std::cout, reports);
        if (!output.empty()) {
            std::ofstream file(output);
            convexseg::bench::write_report(file, reports);
        }
    } catch (const convexseg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
