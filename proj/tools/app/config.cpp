#include "config.hpp"

#include <fstream>
#include <set>

#include "edgekeep/pnm.hpp"

#include "bench.hpp"

namespace edgekeep::app {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "command", "inputs",  "output",         "clean",           "mode",          "radius",
        "sigma-d", "sigma-r", "sigma-t",        "passes",          "boundary",      "sigma-g",
        "kernel-radius",      "energy-window",  "smooth-threshold", "complex-ratio", "texture-distance",
        "noise",   "density", "std",            "seed",            "report",
    };
    return keys;
}

template <typename T>
T get_as(const json& j, const std::string& key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(key, "wrong type: " + std::string(e.what()));
    }
}

template <typename Parse>
auto parse_enum(const json& j, const std::string& key, Parse parse) {
    const auto text = get_as<std::string>(j, key);
    try {
        return parse(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
    }
}

std::string key_of(const std::invalid_argument& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    return colon == std::string::npos ? std::string("config") : msg.substr(0, colon);
}

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}

void RunConfig::validate() const {
    try {
        filter.validate();
        texture.validate();
        noise.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        const std::string key = key_of(e);
        const std::string msg = e.what();
        throw ConfigError(key, msg.substr(std::min(msg.size(), key.size() + 2)));
    }
}

std::string report_format_name(ReportFormat f) {
    switch (f) {
        case ReportFormat::Text:
            return "text";
        case ReportFormat::Csv:
            return "csv";
        case ReportFormat::Markdown:
            return "markdown";
    }
    return "text";
}

ReportFormat parse_report_format(const std::string& s) {
    if (s == "text") return ReportFormat::Text;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "markdown" || s == "md") return ReportFormat::Markdown;
    throw std::invalid_argument("unknown report format '" + s + "' (text, csv, markdown)");
}

FilterMode parse_filter_mode(const std::string& s) {
    if (s == "bilateral") return FilterMode::Bilateral;
    if (s == "multilateral") return FilterMode::Multilateral;
    if (s == "average") return FilterMode::Average;
    throw std::invalid_argument("unknown mode '" + s + "' (bilateral, multilateral, average)");
}

NoiseKind parse_noise_kind(const std::string& s) {
    if (s == "salt-pepper") return NoiseKind::SaltPepper;
    if (s == "gaussian") return NoiseKind::Gaussian;
    throw std::invalid_argument("unknown noise kind '" + s + "' (salt-pepper, gaussian)");
}

BoundaryPolicy parse_boundary(const std::string& s) {
    if (s == "replicate") return BoundaryPolicy::Replicate;
    if (s == "mirror") return BoundaryPolicy::Mirror;
    throw std::invalid_argument("unknown boundary '" + s + "' (replicate, mirror)");
}

std::string boundary_name(BoundaryPolicy p) { return p == BoundaryPolicy::Mirror ? "mirror" : "replicate"; }

TextureDistance parse_texture_distance(const std::string& s) {
    if (s == "indicator") return TextureDistance::Indicator;
    if (s == "energy") return TextureDistance::EnergyEuclidean;
    throw std::invalid_argument("unknown texture distance '" + s + "' (indicator, energy)");
}

std::string texture_distance_name(TextureDistance d) {
    return d == TextureDistance::EnergyEuclidean ? "energy" : "indicator";
}

json to_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["inputs"] = cfg.inputs;
    j["output"] = cfg.output;
    j["clean"] = cfg.clean ? json(*cfg.clean) : json(nullptr);
    j["mode"] = std::string(filter_mode_name(cfg.mode));
    j["radius"] = cfg.filter.window_radius;
    j["sigma-d"] = cfg.filter.sigma_d;
    j["sigma-r"] = cfg.filter.sigma_r;
    j["sigma-t"] = cfg.filter.sigma_t;
    j["passes"] = cfg.filter.passes;
    j["boundary"] = boundary_name(cfg.boundary);
    j["sigma-g"] = cfg.texture.sigma_g;
    j["kernel-radius"] = cfg.texture.kernel_radius;
    j["energy-window"] = cfg.texture.params.energy_window_radius;
    j["smooth-threshold"] =
        cfg.texture.params.smooth_threshold ? json(*cfg.texture.params.smooth_threshold) : json(nullptr);
    j["complex-ratio"] = cfg.texture.params.complex_ratio;
    j["texture-distance"] = texture_distance_name(cfg.texture.distance);
    j["noise"] = std::string(noise_kind_name(cfg.noise.kind));
    j["density"] = cfg.noise.density;
    j["std"] = cfg.noise.stddev;
    j["seed"] = cfg.noise.seed;
    j["report"] = report_format_name(cfg.report);
    return j;
}

RunConfig merge_json(RunConfig cfg, const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config", "top level must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!known_keys().contains(key)) {
            throw ConfigError(key, "unknown key");
        }
    }
    if (j.contains("command")) cfg.command = get_as<std::string>(j, "command");
    if (j.contains("inputs")) cfg.inputs = get_as<std::vector<std::string>>(j, "inputs");
    if (j.contains("output")) cfg.output = get_as<std::string>(j, "output");
    if (j.contains("clean")) {
        cfg.clean = j.at("clean").is_null() ? std::nullopt : std::optional(get_as<std::string>(j, "clean"));
    }
    if (j.contains("mode")) cfg.mode = parse_enum(j, "mode", parse_filter_mode);
    if (j.contains("radius")) cfg.filter.window_radius = get_as<int>(j, "radius");
    if (j.contains("sigma-d")) cfg.filter.sigma_d = get_as<double>(j, "sigma-d");
    if (j.contains("sigma-r")) cfg.filter.sigma_r = get_as<double>(j, "sigma-r");
    if (j.contains("sigma-t")) cfg.filter.sigma_t = get_as<double>(j, "sigma-t");
    if (j.contains("passes")) cfg.filter.passes = get_as<int>(j, "passes");
    if (j.contains("boundary")) cfg.boundary = parse_enum(j, "boundary", parse_boundary);
    if (j.contains("sigma-g")) cfg.texture.sigma_g = get_as<double>(j, "sigma-g");
    if (j.contains("kernel-radius")) cfg.texture.kernel_radius = get_as<int>(j, "kernel-radius");
    if (j.contains("energy-window")) cfg.texture.params.energy_window_radius = get_as<int>(j, "energy-window");
    if (j.contains("smooth-threshold")) {
        cfg.texture.params.smooth_threshold = j.at("smooth-threshold").is_null()
                                                  ? std::nullopt
                                                  : std::optional(get_as<double>(j, "smooth-threshold"));
    }
    if (j.contains("complex-ratio")) cfg.texture.params.complex_ratio = get_as<double>(j, "complex-ratio");
    if (j.contains("texture-distance")) {
        cfg.texture.distance = parse_enum(j, "texture-distance", parse_texture_distance);
    }
    if (j.contains("noise")) cfg.noise.kind = parse_enum(j, "noise", parse_noise_kind);
    if (j.contains("density")) cfg.noise.density = get_as<double>(j, "density");
    if (j.contains("std")) cfg.noise.stddev = get_as<double>(j, "std");
    if (j.contains("seed")) cfg.noise.seed = get_as<std::uint64_t>(j, "seed");
    if (j.contains("report")) cfg.report = parse_enum(j, "report", parse_report_format);
    return cfg;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    return merge_json(std::move(base), j);
}

RunConfig default_config(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    if (command == "bench") {
        const BenchSettings bench;
        cfg.filter = bench.filter;
        cfg.texture = bench.texture;
        cfg.boundary = bench.boundary;
        cfg.noise.seed = bench.seed;
        cfg.noise.density = bench.salt_pepper_density;
        cfg.noise.stddev = bench.gaussian_std;
        cfg.report = ReportFormat::Markdown;
    }
    return cfg;
}

}  // namespace edgekeep::app
