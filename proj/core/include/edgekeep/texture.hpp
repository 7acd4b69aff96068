#ifndef EDGEKEEP_TEXTURE_HPP
#define EDGEKEEP_TEXTURE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "edgekeep/image.hpp"
#include "edgekeep/kernels.hpp"

namespace edgekeep {

/// Steering orientations in their fixed band order.
enum class Orientation : std::uint8_t { Deg0 = 0, Deg90 = 1, Deg45 = 2, DegNeg45 = 3 };

inline constexpr std::array<Orientation, 4> kOrientations = {Orientation::Deg0, Orientation::Deg90,
                                                             Orientation::Deg45, Orientation::DegNeg45};

double orientation_degrees(Orientation o) noexcept;

struct SteeringCoefficients {
    double cos_theta;
    double sin_theta;
};

/// (cos, sin) of theta; exact for multiples of 45 degrees so that the axis bands
/// reproduce the base responses bit for bit.
SteeringCoefficients steering_coefficients(double degrees) noexcept;

/// Oriented first-derivative responses of one image, one band per orientation.
class SubBandSet {
public:
    explicit SubBandSet(std::array<ScalarField, 4> bands);

    const ScalarField& band(Orientation o) const noexcept { return bands_[static_cast<std::size_t>(o)]; }
    int width() const noexcept { return bands_[0].width(); }
    int height() const noexcept { return bands_[0].height(); }

private:
    std::array<ScalarField, 4> bands_;
};

/**
 * Steerable decomposition: the x/y Gaussian-derivative responses are computed
 * once, then band(theta) = cos(theta) * Ix + sin(theta) * Iy.
 * kernel_radius <= 0 selects default_kernel_radius(sigma_g).
 */
SubBandSet decompose(const ImageBuffer& gray, double sigma_g = 1.0,
                     BoundaryPolicy policy = BoundaryPolicy::Replicate, int kernel_radius = 0);

using EnergyVector = std::array<double, 4>;

/// Per-pixel local energy, components in kOrientations order.
class EnergyField {
public:
    EnergyField(int width, int height, std::vector<EnergyVector> energies);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    const EnergyVector& at(int x, int y) const noexcept {
        return energies_[static_cast<std::size_t>(y) * width_ + x];
    }
    const std::vector<EnergyVector>& energies() const noexcept { return energies_; }

    /// Mean over every pixel and orientation.
    double mean() const noexcept;

private:
    int width_;
    int height_;
    std::vector<EnergyVector> energies_;
};

/// Mean of squared band coefficients over the (2r+1)^2 window at each pixel.
EnergyField local_energy(const SubBandSet& bands, int window_radius = 2,
                         BoundaryPolicy policy = BoundaryPolicy::Replicate);

enum class TextureClass : std::uint8_t { Smooth = 0, Complex, Orient0, Orient90, Orient45, OrientNeg45 };

inline constexpr int kTextureClassCount = 6;

std::string_view texture_class_name(TextureClass c) noexcept;

struct TextureParams {
    int energy_window_radius = 2;
    /// Absolute smooth threshold T1. Unset means 0.1 * mean energy of the image.
    std::optional<double> smooth_threshold;
    /// Second-largest energy >= complex_ratio * largest marks a pixel Complex.
    double complex_ratio = 0.8;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    friend bool operator==(const TextureParams&, const TextureParams&) = default;
};

/// Adaptive threshold factor and the floor applied when the image carries no energy.
inline constexpr double kAdaptiveThresholdFactor = 0.1;
inline constexpr double kAdaptiveThresholdFloor = 1e-12;

double resolve_smooth_threshold(const EnergyField& energy, const TextureParams& params);

/**
 * Rule order: all components below T1 -> Smooth; else second-largest >= rho *
 * largest -> Complex; else the argmax orientation, ties resolved by band order.
 */
TextureClass classify_energy(const EnergyVector& e, double smooth_threshold, double complex_ratio) noexcept;

class TextureMap {
public:
    TextureMap(EnergyField energy, std::vector<TextureClass> labels);

    int width() const noexcept { return energy_.width(); }
    int height() const noexcept { return energy_.height(); }
    TextureClass at(int x, int y) const noexcept { return labels_[static_cast<std::size_t>(y) * width() + x]; }
    const std::vector<TextureClass>& labels() const noexcept { return labels_; }
    const EnergyField& energy() const noexcept { return energy_; }

private:
    EnergyField energy_;
    std::vector<TextureClass> labels_;
};

TextureMap classify(EnergyField energy, const TextureParams& params);

/// How the texture term measures dissimilarity between two pixels.
enum class TextureDistance {
    Indicator,        ///< 0 for the same class, 1 otherwise
    EnergyEuclidean,  ///< Euclidean distance between the two energy vectors
};

double texture_distance(TextureClass a, TextureClass b) noexcept;
double energy_distance(const EnergyVector& a, const EnergyVector& b) noexcept;

/// Everything needed to derive a texture map from an image.
struct TextureSettings {
    double sigma_g = 1.0;
    int kernel_radius = 0;  ///< <= 0: default_kernel_radius(sigma_g)
    TextureParams params{};
    TextureDistance distance = TextureDistance::Indicator;

    void validate() const;

    friend bool operator==(const TextureSettings&, const TextureSettings&) = default;
};

/// Grayscale conversion, decomposition, local energy and classification in one call.
TextureMap compute_texture_map(const ImageBuffer& img, const TextureSettings& settings = {},
                               BoundaryPolicy policy = BoundaryPolicy::Replicate);

/// Export level for a class: 0, 51, 102, 153, 204, 255 in enumeration order.
std::uint8_t texture_gray_level(TextureClass c) noexcept;

/// Gray image of the map at the fixed export levels (samples = level / 255).
ImageBuffer texture_map_image(const TextureMap& map);

}  // namespace edgekeep

#endif  // EDGEKEEP_TEXTURE_HPP
