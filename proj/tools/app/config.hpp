#ifndef EDGEKEEP_APP_CONFIG_HPP
#define EDGEKEEP_APP_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgekeep/filters.hpp"
#include "edgekeep/noise.hpp"
#include "edgekeep/texture.hpp"

namespace edgekeep::app {

enum class ReportFormat { Text, Csv, Markdown };

/// Invalid configuration; key() names the offending flag / JSON key.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string key, const std::string& message);
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string output;
    std::optional<std::string> clean;  ///< metrics: optional clean reference image
    FilterMode mode = FilterMode::Bilateral;
    FilterParams filter{};
    TextureSettings texture{};
    BoundaryPolicy boundary = BoundaryPolicy::Replicate;
    NoiseSpec noise{};
    ReportFormat report = ReportFormat::Text;

    /// Checks every nested parameter set; throws ConfigError naming the key.
    void validate() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Flat JSON using the flag names as keys ("sigma-r", "passes", ...).
nlohmann::json to_json(const RunConfig& cfg);

/// Applies the keys present in j on top of base. Unknown keys and ill-typed values throw ConfigError.
RunConfig merge_json(RunConfig base, const nlohmann::json& j);

RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Defaults for a subcommand; bench starts from the sweep parameters instead of the filter defaults.
RunConfig default_config(const std::string& command);

std::string report_format_name(ReportFormat f);
ReportFormat parse_report_format(const std::string& s);
FilterMode parse_filter_mode(const std::string& s);
NoiseKind parse_noise_kind(const std::string& s);
BoundaryPolicy parse_boundary(const std::string& s);
std::string boundary_name(BoundaryPolicy p);
TextureDistance parse_texture_distance(const std::string& s);
std::string texture_distance_name(TextureDistance d);

}  // namespace edgekeep::app

#endif  // EDGEKEEP_APP_CONFIG_HPP
