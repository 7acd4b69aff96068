#ifndef EDGEKEEP_NOISE_HPP
#define EDGEKEEP_NOISE_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "edgekeep/image.hpp"

namespace edgekeep {

/**
 * Counter-based generator: draw k of a stream is SplitMix64's finalizer applied
 * to seed + (k + 1) * 0x9E3779B97F4A7C15. Doubles take the top 53 bits scaled
 * by 2^-53, giving values in [0, 1).
 */
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const noexcept;
    double uniform(std::uint64_t counter) const noexcept;

    /// Standard normal deviate from draws 2k and 2k+1 (Box-Muller, cosine branch).
    double normal(std::uint64_t k) const noexcept;

private:
    std::uint64_t seed_;
};

enum class NoiseKind { SaltPepper, Gaussian };

std::string_view noise_kind_name(NoiseKind kind) noexcept;

struct NoiseSpec {
    NoiseKind kind = NoiseKind::SaltPepper;
    double density = 0.05;  ///< salt-pepper corruption probability per pixel
    double stddev = 0.05;   ///< gaussian deviation per sample
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument naming density or std.
    void validate() const;

    friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

/**
 * Salt-pepper: pixel p is corrupted when uniform(2p) < density and then set to
 * 1 if uniform(2p+1) < 0.5, else 0, across all channels. Gaussian: sample s gets
 * stddev * normal(s) added, then is clamped to [0,1].
 */
ImageBuffer add_noise(const ImageBuffer& img, const NoiseSpec& spec);

/// Per-pixel flags (row-major) of the pixels a salt-pepper spec corrupts.
std::vector<std::uint8_t> salt_pepper_mask(int width, int height, const NoiseSpec& spec);

}  // namespace edgekeep

#endif  // EDGEKEEP_NOISE_HPP
