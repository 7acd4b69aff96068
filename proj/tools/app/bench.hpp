#ifndef EDGEKEEP_APP_BENCH_HPP
#define EDGEKEEP_APP_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "edgekeep/filters.hpp"
#include "edgekeep/metrics.hpp"
#include "edgekeep/noise.hpp"

namespace edgekeep::app {

struct BenchImage {
    std::string name;
    ImageBuffer image;
};

// Synthetic test scenes. Every textured scene uses sinusoidal gratings around
// mean 0.5 so that neighbouring regions share the same mean intensity.
inline constexpr int kBenchImageSize = 128;
inline constexpr double kGratingAmplitude = 0.1;
inline constexpr double kGratingPeriod = 6.0;

/// vertical=true: stripes vary along x (energy in the 0 degree band).
ImageBuffer grating_image(int size, bool vertical, double amplitude = kGratingAmplitude,
                          double period = kGratingPeriod);
/// Left half vertical stripes, right half horizontal stripes.
ImageBuffer two_texture_image(int size, double amplitude = kGratingAmplitude, double period = kGratingPeriod);
/// Blocks alternating between the two grating orientations.
ImageBuffer texture_checker_image(int size, int block = 32, double amplitude = kGratingAmplitude,
                                  double period = kGratingPeriod);
/// Low-contrast vertical step edge (0.45 | 0.55).
ImageBuffer step_edge_image(int size);
/// Colour version of the two-texture scene with a per-channel tint.
ImageBuffer two_texture_rgb_image(int size);

/// two-texture (first, so it drives the sweeps), step-edge, texture-checker, grating, two-texture-rgb.
std::vector<BenchImage> synthetic_bench_images(int size = kBenchImageSize);

struct BenchSettings {
    FilterParams filter{2, 2.0, 0.5, 0.5, 2};
    TextureSettings texture{};
    BoundaryPolicy boundary = BoundaryPolicy::Replicate;
    std::uint64_t seed = 2024;
    double salt_pepper_density = 0.05;
    double gaussian_std = 0.05;
    std::vector<double> densities{0.01, 0.03, 0.05, 0.07};
    std::vector<double> sigma_ts{0.1, 1.0, 10.0, 100.0};
};

struct BenchRow {
    std::string image;
    std::string noise;
    std::string param;
    std::string filter;  ///< bilateral, multilateral or ratio (multi / bi exponents)
    Measurement snr_db;
    Measurement ep_h;
    Measurement ep_v;
};

struct BenchReport {
    std::vector<BenchRow> comparison;    ///< every image x noise kind, both filters
    std::vector<BenchRow> noise_sweep;   ///< salt-pepper density sweep on the sweep image
    std::vector<BenchRow> sigma_t_sweep; ///< texture scale sweep on the sweep image
};

/**
 * Runs the three sweeps. The density and sigma_t sweeps use the first image.
 * SNR is always taken against the noisy filter input. Deterministic in
 * (images, settings).
 */
BenchReport run_bench(const std::vector<BenchImage>& images, const BenchSettings& settings);

/// Header image,noise,param,filter,snr_db,ep_h,ep_v followed by all rows.
std::string to_csv(const BenchReport& report);
std::string to_markdown(const BenchReport& report);

}  // namespace edgekeep::app

#endif  // EDGEKEEP_APP_BENCH_HPP
