#ifndef EDGEKEEP_IMAGE_HPP
#define EDGEKEEP_IMAGE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace edgekeep {

/// How window coordinates outside the image are mapped back onto it.
enum class BoundaryPolicy {
    Replicate,  ///< clamp each coordinate to the nearest edge pixel
    Mirror,     ///< reflect about the edge pixel without repeating it (dcb|abcd|cba)
};

/// Integer pixel coordinate; x is the column, y is the row.
struct Pixel {
    int x = 0;
    int y = 0;
    friend bool operator==(const Pixel&, const Pixel&) = default;
};

/// Maps a possibly out-of-range coordinate onto [0, extent).
int remap_coordinate(int coord, int extent, BoundaryPolicy policy) noexcept;

/**
 * Raster of 1 (gray) or 3 (RGB) channels with samples in [0,1].
 *
 * Samples are stored interleaved in row-major order:
 * index = (y * width + x) * channels + c. The buffer is immutable once
 * constructed; every constructor checks the size and range invariants and
 * throws std::invalid_argument on violation.
 */
class ImageBuffer {
public:
    ImageBuffer(int width, int height, int channels, std::vector<double> samples);

    static ImageBuffer filled(int width, int height, int channels, double value);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int channels() const noexcept { return channels_; }
    std::size_t pixel_count() const noexcept {
        return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    }
    bool same_shape(const ImageBuffer& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
    }

    std::span<const double> samples() const noexcept { return samples_; }

    /// In-bounds access; no checking beyond debug assertions.
    double at(int x, int y, int c = 0) const noexcept {
        return samples_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
    }
    std::span<const double> pixel(int x, int y) const noexcept {
        return std::span<const double>(samples_).subspan(
            (static_cast<std::size_t>(y) * width_ + x) * channels_, channels_);
    }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

private:
    int width_;
    int height_;
    int channels_;
    std::vector<double> samples_;
};

/// Channel values at x, remapped into the image per policy when out of bounds.
std::span<const double> sample_at(const ImageBuffer& img, Pixel x,
                                  BoundaryPolicy policy = BoundaryPolicy::Replicate) noexcept;

/// BT.601 luma for RGB input; a copy for gray input.
ImageBuffer to_grayscale(const ImageBuffer& img);

/// Clamps every value into [0,1] and wraps the result. NaN maps to 0.
ImageBuffer clamped_image(int width, int height, int channels, std::vector<double> samples);

}  // namespace edgekeep

#endif  // EDGEKEEP_IMAGE_HPP
