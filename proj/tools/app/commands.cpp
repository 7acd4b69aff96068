#include "commands.hpp"

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bench.hpp"
#include "config.hpp"
#include "edgekeep/edgekeep.hpp"

namespace edgekeep::app {

namespace {

namespace fs = std::filesystem;

/// Raw flag storage shared by every subcommand; only flags the user passed are applied.
struct Flags {
    std::string config;
    std::vector<std::string> positional;
    std::string output_dir;
    std::string clean;
    std::string mode;
    std::string boundary;
    std::string noise;
    std::string report;
    std::string texture_distance;
    int radius = 0;
    int passes = 0;
    int kernel_radius = 0;
    int energy_window = 0;
    double sigma_d = 0.0;
    double sigma_r = 0.0;
    double sigma_t = 0.0;
    double sigma_g = 0.0;
    double smooth_threshold = 0.0;
    double complex_ratio = 0.0;
    double density = 0.0;
    double stddev = 0.0;
    std::uint64_t seed = 0;
};

struct Bindings {
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> setters;
    CLI::Option* config = nullptr;
    CLI::Option* positional = nullptr;
    CLI::Option* output_dir = nullptr;
};

template <typename T>
void bind_flag(CLI::App& cmd, Bindings& b, const std::string& name, T& slot, const std::string& help,
          std::function<void(RunConfig&, const T&)> apply) {
    CLI::Option* opt = cmd.add_option(name, slot, help);
    b.setters.emplace_back(opt, [&slot, apply](RunConfig& cfg) { apply(cfg, slot); });
}

Bindings add_common_flags(CLI::App& cmd, Flags& f, bool filter_flags, bool noise_flags) {
    Bindings b;
    b.config = cmd.add_option("--config", f.config, "flat JSON config; flags given on the command line win");
    bind_flag<std::string>(cmd, b, "--boundary", f.boundary, "replicate | mirror",
                      [](RunConfig& c, const std::string& v) { c.boundary = parse_boundary(v); });
    bind_flag<std::string>(cmd, b, "--report", f.report, "text | csv | markdown",
                      [](RunConfig& c, const std::string& v) { c.report = parse_report_format(v); });
    if (filter_flags) {
        bind_flag<std::string>(cmd, b, "--mode", f.mode, "bilateral | multilateral | average",
                          [](RunConfig& c, const std::string& v) { c.mode = parse_filter_mode(v); });
        bind_flag<int>(cmd, b, "--radius", f.radius, "window radius m",
                  [](RunConfig& c, const int& v) { c.filter.window_radius = v; });
        bind_flag<double>(cmd, b, "--sigma-d", f.sigma_d, "spatial scale (pixels)",
                     [](RunConfig& c, const double& v) { c.filter.sigma_d = v; });
        bind_flag<double>(cmd, b, "--sigma-r", f.sigma_r, "range scale (intensity in [0,1])",
                     [](RunConfig& c, const double& v) { c.filter.sigma_r = v; });
        bind_flag<double>(cmd, b, "--sigma-t", f.sigma_t, "texture scale",
                     [](RunConfig& c, const double& v) { c.filter.sigma_t = v; });
        bind_flag<int>(cmd, b, "--passes", f.passes, "number of filter passes",
                  [](RunConfig& c, const int& v) { c.filter.passes = v; });
    }
    // Texture flags apply wherever a texture map may be derived.
    bind_flag<double>(cmd, b, "--sigma-g", f.sigma_g, "Gaussian scale of the steerable base filters",
                 [](RunConfig& c, const double& v) { c.texture.sigma_g = v; });
    bind_flag<int>(cmd, b, "--kernel-radius", f.kernel_radius, "derivative kernel radius (0: 3*ceil(sigma-g))",
              [](RunConfig& c, const int& v) { c.texture.kernel_radius = v; });
    bind_flag<int>(cmd, b, "--energy-window", f.energy_window, "local energy window radius",
              [](RunConfig& c, const int& v) { c.texture.params.energy_window_radius = v; });
    bind_flag<double>(cmd, b, "--smooth-threshold", f.smooth_threshold, "absolute smooth threshold T1",
                 [](RunConfig& c, const double& v) { c.texture.params.smooth_threshold = v; });
    bind_flag<double>(cmd, b, "--complex-ratio", f.complex_ratio, "second/largest energy ratio marking Complex",
                 [](RunConfig& c, const double& v) { c.texture.params.complex_ratio = v; });
    bind_flag<std::string>(cmd, b, "--texture-distance", f.texture_distance, "indicator | energy",
                      [](RunConfig& c, const std::string& v) { c.texture.distance = parse_texture_distance(v); });
    if (noise_flags) {
        bind_flag<std::string>(cmd, b, "--noise", f.noise, "salt-pepper | gaussian",
                          [](RunConfig& c, const std::string& v) { c.noise.kind = parse_noise_kind(v); });
        bind_flag<double>(cmd, b, "--density", f.density, "salt-pepper density",
                     [](RunConfig& c, const double& v) { c.noise.density = v; });
        bind_flag<double>(cmd, b, "--std", f.stddev, "gaussian standard deviation",
                     [](RunConfig& c, const double& v) { c.noise.stddev = v; });
        bind_flag<std::uint64_t>(cmd, b, "--seed", f.seed, "noise seed",
                            [](RunConfig& c, const std::uint64_t& v) { c.noise.seed = v; });
    }
    return b;
}

RunConfig resolve_config(const std::string& command, const Flags& f, const Bindings& b) {
    RunConfig cfg = default_config(command);
    if (b.config->count() > 0) {
        cfg = load_config_file(f.config, cfg);
    }
    cfg.command = command;
    for (const auto& [opt, apply] : b.setters) {
        if (opt->count() > 0) {
            try {
                apply(cfg);
            } catch (const ConfigError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ConfigError(opt->get_name().substr(2), e.what());
            }
        }
    }
    if (b.positional && b.positional->count() > 0) {
        cfg.inputs = f.positional;
    }
    if (b.output_dir && b.output_dir->count() > 0) {
        cfg.output = f.output_dir;
    }
    if (b.positional && command != "bench" && command != "metrics" && cfg.inputs.size() == 2) {
        cfg.output = cfg.inputs[1];
        cfg.inputs.pop_back();
    }
    cfg.validate();
    return cfg;
}

void require_inputs(const RunConfig& cfg, std::size_t n, const char* usage) {
    if (cfg.inputs.size() != n || (cfg.command != "metrics" && cfg.output.empty())) {
        throw ConfigError("inputs", std::string("expected ") + usage);
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

int cmd_filter(const RunConfig& cfg, std::ostream& err) {
    require_inputs(cfg, 1, "<input> <output>");
    const ImageBuffer input = read_pnm_file(cfg.inputs[0]);
    err << "edgekeep filter: " << input.width() << "x" << input.height() << "x" << input.channels() << " "
        << filter_mode_name(cfg.mode) << '\n';

    FilterParams single = cfg.filter;
    single.passes = 1;
    FilterContext ctx;
    ctx.boundary = cfg.boundary;
    ctx.texture = cfg.texture;
    ImageBuffer current = input;
    for (int pass = 1; pass <= cfg.filter.passes; ++pass) {
        const auto start = std::chrono::steady_clock::now();
        current = filter(current, single, cfg.mode, ctx);
        err << "pass " << pass << ": " << elapsed_ms(start) << " ms\n";
    }
    write_pnm_file(cfg.output, current);
    return kExitOk;
}

int cmd_texture(const RunConfig& cfg, std::ostream& err) {
    require_inputs(cfg, 1, "<input> <output>");
    const ImageBuffer input = read_pnm_file(cfg.inputs[0]);
    const TextureMap map = compute_texture_map(input, cfg.texture, cfg.boundary);
    std::array<std::size_t, kTextureClassCount> counts{};
    for (const TextureClass c : map.labels()) {
        ++counts[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < kTextureClassCount; ++c) {
        const auto cls = static_cast<TextureClass>(c);
        err << texture_class_name(cls) << " (level " << int(texture_gray_level(cls)) << "): " << counts[c] << '\n';
    }
    write_pnm_file(cfg.output, texture_map_image(map));
    return kExitOk;
}

int cmd_add_noise(const RunConfig& cfg, std::ostream& err) {
    require_inputs(cfg, 1, "<input> <output>");
    const ImageBuffer input = read_pnm_file(cfg.inputs[0]);
    write_pnm_file(cfg.output, add_noise(input, cfg.noise));
    err << "edgekeep add-noise: " << noise_kind_name(cfg.noise.kind) << " seed " << cfg.noise.seed << '\n';
    return kExitOk;
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out) {
    require_inputs(cfg, 2, "<input> <filtered>");
    const ImageBuffer input = read_pnm_file(cfg.inputs[0]);
    const ImageBuffer filtered = read_pnm_file(cfg.inputs[1]);
    std::optional<ImageBuffer> clean;
    if (cfg.clean) {
        clean = read_pnm_file(*cfg.clean);
    }
    const MetricsReport report = evaluate(input, filtered, clean ? &*clean : nullptr);
    switch (cfg.report) {
        case ReportFormat::Text:
            out << to_key_value(report);
            break;
        case ReportFormat::Csv:
            out << metrics_csv_header(clean.has_value()) << '\n' << to_csv_row(report) << '\n';
            break;
        case ReportFormat::Markdown:
            out << "| snr_db | ep_h | ep_v |" << (clean ? " snr_clean_db |" : "") << "\n|---|---|---|"
                << (clean ? "---|" : "") << "\n| " << report.snr_db.to_string() << " | "
                << report.ep_horizontal.to_string() << " | " << report.ep_vertical.to_string() << " |"
                << (clean ? " " + report.snr_clean_db->to_string() + " |" : "") << '\n';
            break;
    }
    return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<BenchImage> images;
    if (cfg.inputs.empty()) {
        images = synthetic_bench_images();
    } else {
        std::vector<std::string> missing;
        for (const auto& path : cfg.inputs) {
            if (!fs::is_regular_file(path)) {
                missing.push_back(path);
            }
        }
        if (!missing.empty()) {
            err << "edgekeep bench: missing test images:\n";
            for (const auto& m : missing) {
                err << "  " << m << '\n';
            }
            return kExitIo;
        }
        for (const auto& path : cfg.inputs) {
            images.push_back({fs::path(path).stem().string(), read_pnm_file(path)});
        }
    }

    BenchSettings settings;
    settings.filter = cfg.filter;
    settings.texture = cfg.texture;
    settings.boundary = cfg.boundary;
    settings.seed = cfg.noise.seed;
    settings.salt_pepper_density = cfg.noise.density;
    settings.gaussian_std = cfg.noise.stddev;

    const auto start = std::chrono::steady_clock::now();
    const BenchReport report = run_bench(images, settings);
    err << "edgekeep bench: " << images.size() << " images in " << elapsed_ms(start) << " ms\n";

    const std::string csv = to_csv(report);
    const std::string md = to_markdown(report);
    if (!cfg.output.empty()) {
        std::error_code ec;
        fs::create_directories(cfg.output, ec);
        for (const auto& [name, text] : {std::pair{"bench.csv", &csv}, std::pair{"bench.md", &md}}) {
            const fs::path path = fs::path(cfg.output) / name;
            std::ofstream file(path, std::ios::binary | std::ios::trunc);
            file << *text;
            if (!file) {
                throw IoError("cannot write " + path.string());
            }
        }
    }
    if (cfg.report == ReportFormat::Csv) {
        out << csv;
    } else if (cfg.report == ReportFormat::Markdown) {
        out << md;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge-preserving bilateral / multilateral filtering toolkit", "edgekeep"};
    app.require_subcommand(1);
    Flags flags;

    struct Command {
        CLI::App* app;
        Bindings bindings;
    };
    std::vector<std::pair<std::string, Command>> commands;

    auto add = [&](const std::string& name, const std::string& help, bool filter_flags, bool noise_flags,
                   const std::string& positional_help) {
        CLI::App* sub = app.add_subcommand(name, help);
        Bindings b = add_common_flags(*sub, flags, filter_flags, noise_flags);
        b.positional = sub->add_option("paths", flags.positional, positional_help);
        if (name == "bench") {
            b.output_dir = sub->add_option("--output-dir,-o", flags.output_dir, "directory for bench.csv / bench.md");
        }
        if (name == "metrics") {
            sub->add_option("--clean", flags.clean, "clean reference image, reported as snr_clean_db");
        }
        commands.emplace_back(name, Command{sub, std::move(b)});
    };
    add("filter", "filter an image", true, false, "<input> <output>");
    add("texture", "write the texture class map as a 6-level PGM", false, false, "<input> <output>");
    add("add-noise", "corrupt an image with seeded noise", false, true, "<input> <output>");
    add("metrics", "SNR and edge-preserving exponents of a filtered image", false, false, "<input> <filtered>");
    add("bench", "bilateral vs multilateral sweeps on synthetic or supplied images", true, true, "[images...]");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "edgekeep: " << e.what() << '\n';
        return kExitInvalid;
    }

    for (auto& [name, cmd] : commands) {
        if (!cmd.app->parsed()) {
            continue;
        }
        try {
            RunConfig cfg = resolve_config(name, flags, cmd.bindings);
            if (name == "metrics" && !flags.clean.empty()) {
                cfg.clean = flags.clean;
            }
            err << "config: " << to_json(cfg).dump() << '\n';
            if (name == "filter") return cmd_filter(cfg, err);
            if (name == "texture") return cmd_texture(cfg, err);
            if (name == "add-noise") return cmd_add_noise(cfg, err);
            if (name == "metrics") return cmd_metrics(cfg, out);
            return cmd_bench(cfg, out, err);
        } catch (const ConfigError& e) {
            err << "edgekeep " << name << ": invalid parameter " << e.what() << '\n';
            return kExitInvalid;
        } catch (const IoError& e) {
            err << "edgekeep " << name << ": " << e.what() << '\n';
            return kExitIo;
        } catch (const PnmError& e) {
            err << "edgekeep " << name << ": " << e.what() << '\n';
            return kExitIo;
        } catch (const std::invalid_argument& e) {
            err << "edgekeep " << name << ": invalid parameter " << e.what() << '\n';
            return kExitInvalid;
        } catch (const std::exception& e) {
            err << "edgekeep " << name << ": " << e.what() << '\n';
            return kExitIo;
        }
    }
    return kExitInvalid;
}

}  // namespace edgekeep::app
