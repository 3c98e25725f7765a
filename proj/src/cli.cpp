#include "convexseg/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "convexseg/image_io.hpp"
#include "convexseg/multiscale.hpp"
#include "convexseg/smoothing.hpp"
#include "convexseg/watershed.hpp"

namespace convexseg::cli {

namespace {

constexpr std::array<std::pair<std::string_view, Command>, 9> kCommands = {{
    {"smooth", Command::Smooth},
    {"maps", Command::Maps},
    {"classify", Command::Classify},
    {"boundary", Command::Boundary},
    {"detect", Command::Detect},
    {"multiscale", Command::Multiscale},
    {"watershed", Command::Watershed},
    {"compare", Command::Compare},
    {"oracle", Command::Oracle},
}};

constexpr std::string_view kDescriptions[] = {
    "write the Gaussian-smoothed image",
    "write derivative, determinant and curvature heatmaps",
    "write convex / concave masks and a tinted overlay",
    "write region and exterior-boundary masks",
    "full pipeline: region, boundary and overlay (default command)",
    "small-scale regions filled, large-scale boundaries outlined",
    "gradient watershed baseline: basins and watershed lines",
    "watershed vs convexity side by side, plus a key=value report",
    "rasterize an analytic surface and its exact classification",
};

Rgb parse_color(const std::string& text) {
    std::array<int, 3> c{};
    char sep1 = 0, sep2 = 0;
    std::istringstream in(text);
    if (!(in >> c[0] >> sep1 >> c[1] >> sep2 >> c[2]) || sep1 != ',' || sep2 != ',' ||
        !in.eof()) {
        throw Error(ErrorCode::InvalidArgument, "color must be R,G,B, got '" + text + "'");
    }
    for (const int v : c) {
        if (v < 0 || v > 255) {
            throw Error(ErrorCode::InvalidArgument, "color channel out of range in '" + text + "'");
        }
    }
    return {static_cast<std::uint8_t>(c[0]), static_cast<std::uint8_t>(c[1]),
            static_cast<std::uint8_t>(c[2])};
}

// Flag values as typed on the command line, converted after parsing.
struct RawFlags {
    std::string input;
    std::string out_dir = ".";
    std::string prefix;
    double sigma = 10.0;
    double sigma2 = 0.0;
    std::string mode = "combined";
    std::string stencil = "sobel";
    std::size_t min_area = 0;
    int connectivity = 8;
    std::string style = "both";
    std::string boundary_color = "255,255,0";
    bool no_timing = false;
    std::string surface = "demo";
    oracle::GridSpec grid;
};

void add_common_flags(CLI::App& app, RawFlags& flags, Command command) {
    if (command != Command::Oracle) {
        app.add_option("input", flags.input, "input image (PGM P2/P5 or PNG)")->required();
    }
    app.add_option("-o,--out-dir", flags.out_dir, "output directory")->capture_default_str();
    app.add_option("-p,--prefix", flags.prefix, "output file stem (default: input stem)");
    if (command == Command::Oracle) {
        app.add_option("--surface", flags.surface, "demo | peaks | bowl | inverted-bowl | saddle")
            ->capture_default_str();
        app.add_option("--nx", flags.grid.nx, "grid columns")->capture_default_str();
        app.add_option("--ny", flags.grid.ny, "grid rows")->capture_default_str();
        app.add_option("--xmin", flags.grid.x_min, "domain left edge")->capture_default_str();
        app.add_option("--xmax", flags.grid.x_max, "domain right edge")->capture_default_str();
        app.add_option("--ymin", flags.grid.y_min, "domain top edge")->capture_default_str();
        app.add_option("--ymax", flags.grid.y_max, "domain bottom edge")->capture_default_str();
        app.add_option("--style", flags.style, "overlay style: fill | boundary | both")
            ->capture_default_str();
        app.add_option("--boundary-color", flags.boundary_color, "boundary color R,G,B")
            ->capture_default_str();
        return;
    }
    app.add_option("-s,--sigma", flags.sigma, "Gaussian smoothing sigma in pixels")
        ->capture_default_str();
    if (command == Command::Multiscale) {
        app.add_option("--sigma2", flags.sigma2, "large smoothing sigma (> sigma)")->required();
    }
    app.add_option("--stencil", flags.stencil, "derivative stencil: sobel | central")
        ->capture_default_str();
    if (command == Command::Smooth || command == Command::Maps) {
        return;
    }
    app.add_option("--mode", flags.mode, "region mode: combined | convex | concave")
        ->capture_default_str();
    app.add_option("--min-area", flags.min_area, "drop components smaller than this (0 = keep all)")
        ->capture_default_str();
    app.add_option("--connectivity", flags.connectivity, "component connectivity: 4 | 8")
        ->capture_default_str();
    app.add_option("--style", flags.style, "overlay style: fill | boundary | both")
        ->capture_default_str();
    app.add_option("--boundary-color", flags.boundary_color, "boundary color R,G,B")
        ->capture_default_str();
    if (command == Command::Compare) {
        app.add_flag("--no-timing", flags.no_timing, "omit wall-clock lines from the report");
    }
}

RunConfig to_config(Command command, const RawFlags& flags, bool sigma2_given) {
    RunConfig config;
    config.command = command;
    config.input = flags.input;
    config.out_dir = flags.out_dir;
    config.prefix = flags.prefix;
    config.sigma = flags.sigma;
    if (sigma2_given) {
        config.sigma2 = flags.sigma2;
    }
    config.mode = parse_region_mode(flags.mode);
    config.stencil = parse_stencil(flags.stencil);
    config.min_area = flags.min_area;
    config.connectivity = parse_connectivity(flags.connectivity);
    config.overlay.style = parse_overlay_style(flags.style);
    config.overlay.boundary_color = parse_color(flags.boundary_color);
    config.timing = !flags.no_timing;
    config.surface = flags.surface;
    config.grid = flags.grid;
    config.validate();
    return config;
}

// ----------------------------------------------------------------------------
// Command execution
// ----------------------------------------------------------------------------

class StageTimer {
public:
    template <typename Fn>
    auto operator()(const std::string& stage, Fn&& fn) {
        current_ = stage;
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            record(stage, start);
        } else {
            auto result = fn();
            record(stage, start);
            return result;
        }
    }

    const std::string& current() const noexcept { return current_; }
    const std::vector<std::pair<std::string, double>>& timings() const noexcept {
        return timings_;
    }
    double total(const std::vector<std::string>& stages) const {
        double sum = 0.0;
        for (const auto& [name, seconds] : timings_) {
            if (std::find(stages.begin(), stages.end(), name) != stages.end()) {
                sum += seconds;
            }
        }
        return sum;
    }

private:
    void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
        timings_.emplace_back(
            stage,
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }

    std::string current_ = "setup";
    std::vector<std::pair<std::string, double>> timings_;
};

struct Pipeline {
    Image smoothed;
    DifferentialMaps maps;
    ClassificationMap labels;
    BinaryMask region;
    BinaryMask boundary;
    std::size_t components = 0;
};

Pipeline run_pipeline(const Image& image, const RunConfig& config, StageTimer& timer) {
    Pipeline p;
    p.smoothed = timer("smooth", [&] { return smooth(image, make_kernel(config.sigma)); });
    p.maps = timer("maps", [&] { return hessian_maps(p.smoothed, config.stencil); });
    p.labels = timer("classify", [&] { return classify(p.maps); });
    p.region = timer("region", [&] { return region_mask(p.labels, config.mode); });
    const LabelMap components =
        timer("label", [&] { return label_components(p.region, config.connectivity); });
    if (config.min_area > 0) {
        p.region = timer("prune", [&] { return prune_small(components, config.min_area); });
        p.components = timer("label", [&] {
            return static_cast<std::size_t>(label_components(p.region, config.connectivity).count);
        });
    } else {
        p.components = static_cast<std::size_t>(components.count);
    }
    p.boundary = timer("boundary", [&] { return exterior_boundary(p.region); });
    return p;
}

// Classification restricted to the kept region, so pruned pixels are not tinted.
ClassificationMap masked_labels(const ClassificationMap& labels, const BinaryMask& region) {
    ClassificationMap out = labels;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (region[i] == 0) {
            out[i] = Curvature::Neither;
        }
    }
    return out;
}

void print_timing(std::ostream& out, const RunConfig& config, const Image& image,
                  const StageTimer& timer) {
    double total = 0.0;
    for (const auto& [name, seconds] : timer.timings()) {
        total += seconds;
    }
    out << to_string(config.command) << ": " << image.width() << "x" << image.height()
        << " sigma=" << config.sigma << " time=" << std::fixed << std::setprecision(4) << total
        << "s" << std::defaultfloat << '\n';
}

int run_oracle(const RunConfig& config, std::ostream& out, StageTimer& timer) {
    const oracle::AnalyticSurface surface = oracle::surface_by_name(config.surface);
    const oracle::Raster raster = timer("rasterize", [&] { return oracle::rasterize(surface, config.grid); });
    const ClassificationMap truth =
        timer("classify", [&] { return oracle::analytic_classification(surface, config.grid); });
    const BinaryMask convex = region_mask(truth, RegionMode::ConvexOnly);
    const BinaryMask concave = region_mask(truth, RegionMode::ConcaveOnly);
    const BinaryMask boundary = exterior_boundary(region_mask(truth, RegionMode::Combined));

    timer("write", [&] {
        save_pgm(raster.image, config.output("surface.pgm"));
        save_mask(convex, config.output("convex.pgm"));
        save_mask(concave, config.output("concave.pgm"));
        save_mask(boundary, config.output("boundary.pgm"));
        save_png(render_overlay(raster.image, truth, boundary, config.overlay),
                 config.output("truth.png"));
    });
    const double n = static_cast<double>(truth.size());
    out << "surface=" << surface.name << '\n'
        << "convex_fraction=" << static_cast<double>(convex.count()) / n << '\n'
        << "concave_fraction=" << static_cast<double>(concave.count()) / n << '\n'
        << "neither_fraction="
        << 1.0 - static_cast<double>(convex.count() + concave.count()) / n << '\n';
    return kExitOk;
}

int run_image_command(const RunConfig& config, std::ostream& out, StageTimer& timer) {
    const Image image = timer("load", [&] { return load_image(config.input); });

    switch (config.command) {
        case Command::Smooth: {
            const Image smoothed = timer("smooth", [&] { return smooth(image, make_kernel(config.sigma)); });
            timer("write", [&] { save_pgm(smoothed, config.output("smooth.pgm")); });
            break;
        }
        case Command::Maps: {
            const Image smoothed = timer("smooth", [&] { return smooth(image, make_kernel(config.sigma)); });
            const DifferentialMaps maps = timer("maps", [&] { return hessian_maps(smoothed, config.stencil); });
            timer("write", [&] {
                const std::pair<const char*, const Field*> fields[] = {
                    {"fx", &maps.fx},   {"fy", &maps.fy},   {"fxx", &maps.fxx}, {"fxy", &maps.fxy},
                    {"fyy", &maps.fyy}, {"D", &maps.det}, {"K", &maps.curvature}};
                for (const auto& [name, field] : fields) {
                    save_pgm(rescale_to_unit(*field), config.output(std::string(name) + ".pgm"));
                }
            });
            break;
        }
        case Command::Classify: {
            const Pipeline p = run_pipeline(image, config, timer);
            timer("write", [&] {
                const ClassificationMap kept = masked_labels(p.labels, p.region);
                save_mask(region_mask(kept, RegionMode::ConvexOnly), config.output("convex.pgm"));
                save_mask(region_mask(kept, RegionMode::ConcaveOnly), config.output("concave.pgm"));
                OverlayOptions fill = config.overlay;
                fill.style = OverlayStyle::RegionFill;
                save_png(render_overlay(image, kept, p.boundary, fill), config.output("classify.png"));
            });
            break;
        }
        case Command::Boundary:
        case Command::Detect: {
            const Pipeline p = run_pipeline(image, config, timer);
            timer("write", [&] {
                save_mask(p.region, config.output("region.pgm"));
                save_mask(p.boundary, config.output("boundary.pgm"));
                if (config.command == Command::Detect) {
                    save_png(render_overlay(image, masked_labels(p.labels, p.region), p.boundary,
                                            config.overlay),
                             config.output("overlay.png"));
                }
            });
            out << "components=" << p.components << '\n';
            break;
        }
        case Command::Multiscale: {
            const ScalePair scales(config.sigma, *config.sigma2);
            const MultiscaleComposite composite = timer("multiscale", [&] {
                return multiscale_composite(image, scales, config.mode, config.stencil);
            });
            BinaryMask fill = composite.fill;
            if (config.min_area > 0) {
                fill = prune_small(label_components(fill, config.connectivity), config.min_area);
            }
            timer("write", [&] {
                save_mask(fill, config.output("fill.pgm"));
                save_mask(composite.outline, config.output("outline.pgm"));
                save_png(render_mask_overlay(image, fill, kConvexTint, composite.outline,
                                             config.overlay.boundary_color),
                         config.output("multiscale.png"));
            });
            break;
        }
        case Command::Watershed: {
            const BasinLabeling basins =
                timer("watershed", [&] { return watershed_basins(image, config.sigma, config.stencil); });
            timer("write", [&] {
                save_png(render_basins(basins.labels, basins.watershed), config.output("basins.png"));
                save_mask(basins.watershed, config.output("watershed.pgm"));
                save_png(render_mask_overlay(image, BinaryMask(image.width(), image.height()),
                                             kConvexTint, basins.watershed,
                                             config.overlay.boundary_color),
                         config.output("watershed_overlay.png"));
            });
            out << "basins=" << basins.labels.count << '\n';
            break;
        }
        case Command::Compare: {
            const Pipeline p = run_pipeline(image, config, timer);
            const BasinLabeling basins =
                timer("watershed", [&] { return watershed_basins(image, config.sigma, config.stencil); });
            CompareSummary summary;
            summary.convexity_components = p.components;
            summary.watershed_basins = static_cast<std::size_t>(basins.labels.count);
            summary.watershed_pixels = basins.watershed.count();
            summary.boundary_pixels = p.boundary.count();

            const RgbImage left = render_mask_overlay(image, BinaryMask(image.width(), image.height()),
                                                      kConvexTint, basins.watershed,
                                                      config.overlay.boundary_color);
            const RgbImage right = render_overlay(image, masked_labels(p.labels, p.region),
                                                  p.boundary, config.overlay);
            timer("write", [&] { save_png(side_by_side(left, right), config.output("compare.png")); });

            std::vector<std::pair<std::string, double>> timings = timer.timings();
            timings.emplace_back("detect", timer.total({"smooth", "maps", "classify", "region",
                                                        "label", "prune", "boundary"}));
            std::ostringstream report;
            write_compare_report(report, config, image.width(), image.height(), summary, timings);
            std::ofstream file(config.output("report.txt"), std::ios::binary);
            if (!file || !(file << report.str())) {
                throw Error(ErrorCode::FileUnwritable, config.output("report.txt").string());
            }
            out << report.str();
            return kExitOk;
        }
        case Command::Oracle:
            break;
    }
    print_timing(out, config, image, timer);
    return kExitOk;
}

}  // namespace

std::string_view to_string(Command command) {
    for (const auto& [name, value] : kCommands) {
        if (value == command) {
            return name;
        }
    }
    return "unknown";
}

void RunConfig::validate() const {
    if (command != Command::Oracle && input.empty()) {
        throw Error(ErrorCode::InvalidArgument, "an input image is required");
    }
    if (!std::isfinite(sigma) || sigma <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "--sigma must be positive");
    }
    if (command == Command::Multiscale) {
        if (!sigma2) {
            throw Error(ErrorCode::InvalidArgument, "multiscale requires --sigma2");
        }
        if (!(*sigma2 > sigma)) {
            throw Error(ErrorCode::InvalidArgument, "--sigma2 must exceed --sigma");
        }
    }
    if (command == Command::Oracle) {
        grid.validate();
    }
}

std::string RunConfig::output_stem() const {
    if (!prefix.empty()) {
        return prefix;
    }
    if (command == Command::Oracle) {
        return surface;
    }
    return input.stem().string();
}

std::filesystem::path RunConfig::output(const std::string& suffix) const {
    return out_dir / (output_stem() + "_" + suffix);
}

void write_compare_report(std::ostream& out, const RunConfig& config, int width, int height,
                          const CompareSummary& summary,
                          const std::vector<std::pair<std::string, double>>& timings) {
    out << "input=" << config.input.filename().string() << '\n'
        << "width=" << width << '\n'
        << "height=" << height << '\n'
        << "sigma=" << config.sigma << '\n'
        << "stencil=" << to_string(config.stencil) << '\n'
        << "mode=" << to_string(config.mode) << '\n'
        << "min_area=" << config.min_area << '\n'
        << "connectivity=" << static_cast<int>(config.connectivity) << '\n'
        << "convexity_components=" << summary.convexity_components << '\n'
        << "convexity_boundary_pixels=" << summary.boundary_pixels << '\n'
        << "watershed_basins=" << summary.watershed_basins << '\n'
        << "watershed_pixels=" << summary.watershed_pixels << '\n';
    if (config.timing) {
        // Stages that ran more than once (label) are summed.
        std::vector<std::pair<std::string, double>> merged;
        for (const auto& [name, seconds] : timings) {
            auto it = std::find_if(merged.begin(), merged.end(),
                                   [&](const auto& m) { return m.first == name; });
            if (it == merged.end()) {
                merged.emplace_back(name, seconds);
            } else {
                it->second += seconds;
            }
        }
        for (const auto& [name, seconds] : merged) {
            out << "time_" << name << "_s=" << std::fixed << std::setprecision(6) << seconds
                << std::defaultfloat << '\n';
        }
    }
}

ParseResult parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> argv = args;
    // A bare input path (no command word) means detect.
    if (argv.size() > 1) {
        const std::string& first = argv[1];
        const bool is_command = std::any_of(kCommands.begin(), kCommands.end(),
                                            [&](const auto& c) { return c.first == first; });
        if (!is_command && !first.empty() && first[0] != '-') {
            argv.insert(argv.begin() + 1, "detect");
        }
    }

    CLI::App app{"Contour detection from convex and concave regions of a smoothed image"};
    app.require_subcommand(1);
    RawFlags flags;
    std::vector<std::pair<CLI::App*, Command>> subcommands;
    std::size_t i = 0;
    for (const auto& [name, command] : kCommands) {
        CLI::App* sub = app.add_subcommand(std::string(name), std::string(kDescriptions[i++]));
        add_common_flags(*sub, flags, command);
        subcommands.emplace_back(sub, command);
    }

    std::vector<const char*> cargs;
    for (const auto& a : argv) {
        cargs.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return {std::nullopt, kExitOk};
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return {std::nullopt, kExitUsage};
    }

    for (const auto& [sub, command] : subcommands) {
        if (sub->parsed()) {
            try {
                const bool sigma2_given = sub->get_option_no_throw("--sigma2") != nullptr &&
                                          sub->get_option("--sigma2")->count() > 0;
                return {to_config(command, flags, sigma2_given), kExitOk};
            } catch (const Error& e) {
                err << "error: " << e.what() << "\n\n" << sub->help();
                return {std::nullopt, kExitUsage};
            }
        }
    }
    err << app.help();
    return {std::nullopt, kExitUsage};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    StageTimer timer;
    try {
        config.validate();
        std::filesystem::create_directories(config.out_dir);
        if (config.command == Command::Oracle) {
            return run_oracle(config, out, timer);
        }
        return run_image_command(config, out, timer);
    } catch (const Error& e) {
        err << "error in stage '" << timer.current() << "': " << e.what() << '\n';
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error in stage '" << timer.current() << "': " << e.what() << '\n';
    }
    return kExitFailure;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const ParseResult parsed = parse(args, out, err);
    if (!parsed.config) {
        return parsed.exit_code;
    }
    return run(*parsed.config, out, err);
}

}  // namespace convexseg::cli
