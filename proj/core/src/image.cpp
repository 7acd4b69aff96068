#include "edgekeep/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace edgekeep {

int remap_coordinate(int coord, int extent, BoundaryPolicy policy) noexcept {
    if (coord >= 0 && coord < extent) {
        return coord;
    }
    if (policy == BoundaryPolicy::Replicate || extent == 1) {
        return std::clamp(coord, 0, extent - 1);
    }
    // Reflection without edge repeat is periodic with period 2(extent-1).
    const int period = 2 * (extent - 1);
    int r = coord % period;
    if (r < 0) {
        r += period;
    }
    return r < extent ? r : period - r;
}

ImageBuffer::ImageBuffer(int width, int height, int channels, std::vector<double> samples)
    : width_(width), height_(height), channels_(channels), samples_(std::move(samples)) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be positive, got " + std::to_string(width) +
                                    "x" + std::to_string(height));
    }
    if (channels != 1 && channels != 3) {
        throw std::invalid_argument("image must have 1 or 3 channels, got " + std::to_string(channels));
    }
    const std::size_t expected = pixel_count() * static_cast<std::size_t>(channels);
    if (samples_.size() != expected) {
        throw std::invalid_argument("sample count " + std::to_string(samples_.size()) +
                                    " does not match " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!(samples_[i] >= 0.0 && samples_[i] <= 1.0)) {
            throw std::invalid_argument("sample " + std::to_string(i) + " outside [0,1]");
        }
    }
}

ImageBuffer ImageBuffer::filled(int width, int height, int channels, double value) {
    const auto n = static_cast<std::size_t>(std::max(width, 0)) * static_cast<std::size_t>(std::max(height, 0)) *
                   static_cast<std::size_t>(std::max(channels, 0));
    return ImageBuffer(width, height, channels, std::vector<double>(n, value));
}

std::span<const double> sample_at(const ImageBuffer& img, Pixel x, BoundaryPolicy policy) noexcept {
    return img.pixel(remap_coordinate(x.x, img.width(), policy), remap_coordinate(x.y, img.height(), policy));
}

ImageBuffer to_grayscale(const ImageBuffer& img) {
    if (img.channels() == 1) {
        return img;
    }
    std::vector<double> gray(img.pixel_count());
    const auto src = img.samples();
    for (std::size_t i = 0; i < gray.size(); ++i) {
        const double y = 0.299 * src[3 * i] + 0.587 * src[3 * i + 1] + 0.114 * src[3 * i + 2];
        gray[i] = std::clamp(y, 0.0, 1.0);
    }
    return ImageBuffer(img.width(), img.height(), 1, std::move(gray));
}

ImageBuffer clamped_image(int width, int height, int channels, std::vector<double> samples) {
    for (double& s : samples) {
        s = std::isnan(s) ? 0.0 : std::clamp(s, 0.0, 1.0);
    }
    return ImageBuffer(width, height, channels, std::move(samples));
}

}  // namespace edgekeep
