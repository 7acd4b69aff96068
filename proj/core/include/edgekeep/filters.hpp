#ifndef EDGEKEEP_FILTERS_HPP
#define EDGEKEEP_FILTERS_HPP

#include <string_view>

#include "edgekeep/image.hpp"
#include "edgekeep/texture.hpp"

namespace edgekeep {

enum class FilterMode { Bilateral, Multilateral, Average };

std::string_view filter_mode_name(FilterMode mode) noexcept;

struct FilterParams {
    int window_radius = 2;  ///< m; the window is (2m+1)^2
    double sigma_d = 2.0;   ///< spatial scale, pixels
    double sigma_r = 0.1;   ///< range scale, intensity units
    double sigma_t = 1.0;   ///< texture scale, multilateral only
    int passes = 1;

    /// Throws std::invalid_argument whose message starts with the flag name (radius, sigma-d, ...).
    void validate() const;

    friend bool operator==(const FilterParams&, const FilterParams&) = default;
};

/// Options shared by every filter call.
struct FilterContext {
    BoundaryPolicy boundary = BoundaryPolicy::Replicate;
    /// Used to derive the texture map when none is supplied.
    TextureSettings texture{};
    /// Caller-supplied map, applied on every pass. Null: recomputed from each pass's input.
    const TextureMap* texture_map = nullptr;
};

/// Spatial closeness times range similarity for neighbour xi of centre x.
double weight_bilateral(const ImageBuffer& img, Pixel x, Pixel xi, const FilterParams& p,
                        BoundaryPolicy policy = BoundaryPolicy::Replicate) noexcept;

/// Texture similarity factor exp(-d^2 / (2 sigma_t^2)) between the labels (or energies) of x and xi.
double texture_similarity(const TextureMap& tex, Pixel x, Pixel xi, double sigma_t,
                          TextureDistance distance = TextureDistance::Indicator,
                          BoundaryPolicy policy = BoundaryPolicy::Replicate) noexcept;

/// weight_bilateral times texture_similarity.
double weight_multilateral(const ImageBuffer& img, const TextureMap& tex, Pixel x, Pixel xi, const FilterParams& p,
                           TextureDistance distance = TextureDistance::Indicator,
                           BoundaryPolicy policy = BoundaryPolicy::Replicate) noexcept;

/**
 * Normalized weighted window mean, one shared weight per neighbour across all
 * channels, repeated p.passes times with clamping to [0,1] after each pass.
 * Average mode ignores every sigma. Throws std::invalid_argument on invalid
 * parameters or a texture map whose dimensions differ from the image.
 */
ImageBuffer filter(const ImageBuffer& img, const FilterParams& p, FilterMode mode, const FilterContext& ctx = {});

}  // namespace edgekeep

#endif  // EDGEKEEP_FILTERS_HPP
