#include "edgekeep/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace edgekeep {

std::uint64_t CounterRng::bits(std::uint64_t counter) const noexcept {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t k) const noexcept {
    const double u1 = 1.0 - uniform(2 * k);  // (0, 1]
    const double u2 = uniform(2 * k + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::string_view noise_kind_name(NoiseKind kind) noexcept {
    return kind == NoiseKind::SaltPepper ? "salt-pepper" : "gaussian";
}

void NoiseSpec::validate() const {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("density: must lie in [0,1], got " + std::to_string(density));
    }
    if (!(stddev >= 0.0) || !std::isfinite(stddev)) {
        throw std::invalid_argument("std: must be >= 0, got " + std::to_string(stddev));
    }
}

std::vector<std::uint8_t> salt_pepper_mask(int width, int height, const NoiseSpec& spec) {
    spec.validate();
    const CounterRng rng(spec.seed);
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(width) * height);
    for (std::size_t p = 0; p < mask.size(); ++p) {
        mask[p] = rng.uniform(2 * p) < spec.density ? 1 : 0;
    }
    return mask;
}

ImageBuffer add_noise(const ImageBuffer& img, const NoiseSpec& spec) {
    spec.validate();
    const CounterRng rng(spec.seed);
    std::vector<double> out(img.samples().begin(), img.samples().end());
    const auto ch = static_cast<std::size_t>(img.channels());

    if (spec.kind == NoiseKind::SaltPepper) {
        if (spec.density == 0.0) {
            return img;
        }
        for (std::size_t p = 0; p < img.pixel_count(); ++p) {
            if (rng.uniform(2 * p) < spec.density) {
                const double level = rng.uniform(2 * p + 1) < 0.5 ? 1.0 : 0.0;
                std::fill_n(out.begin() + static_cast<std::ptrdiff_t>(p * ch), ch, level);
            }
        }
    } else {
        if (spec.stddev == 0.0) {
            return img;
        }
        for (std::size_t s = 0; s < out.size(); ++s) {
            out[s] = std::clamp(out[s] + spec.stddev * rng.normal(s), 0.0, 1.0);
        }
    }
    return ImageBuffer(img.width(), img.height(), img.channels(), std::move(out));
}

}  // namespace edgekeep
