#ifndef EDGEKEEP_KERNELS_HPP
#define EDGEKEEP_KERNELS_HPP

#include <span>
#include <vector>

#include "edgekeep/image.hpp"

namespace edgekeep {

/// Single-channel field of unbounded doubles (filter responses, sub-bands).
class ScalarField {
public:
    ScalarField(int width, int height, double value = 0.0);
    ScalarField(int width, int height, std::vector<double> values);

    /// Copies the single channel of a gray image.
    static ScalarField from_gray(const ImageBuffer& gray);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    double at(int x, int y) const noexcept { return values_[static_cast<std::size_t>(y) * width_ + x]; }
    double& at(int x, int y) noexcept { return values_[static_cast<std::size_t>(y) * width_ + x]; }

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

private:
    int width_;
    int height_;
    std::vector<double> values_;
};

/**
 * Square kernel of (2r+1)^2 taps, row-major. at(u, v) addresses the tap at
 * column offset u and row offset v, both in [-radius, radius].
 */
class Kernel2D {
public:
    Kernel2D(int radius, std::vector<double> taps);

    /// Single unit tap at (u, v); zero elsewhere.
    static Kernel2D impulse(int radius, int u = 0, int v = 0);

    int radius() const noexcept { return radius_; }
    int size() const noexcept { return 2 * radius_ + 1; }
    std::span<const double> taps() const noexcept { return taps_; }
    double at(int u, int v) const noexcept {
        return taps_[static_cast<std::size_t>(v + radius_) * size() + (u + radius_)];
    }

    Kernel2D transposed() const;
    double sum() const noexcept;

    friend bool operator==(const Kernel2D&, const Kernel2D&) = default;

private:
    int radius_;
    std::vector<double> taps_;
};

/// Support radius used when none is given: 3 * ceil(sigma).
int default_kernel_radius(double sigma);

/// Normalized isotropic Gaussian, taps summing to 1.
Kernel2D gaussian_kernel(double sigma, int radius);

struct DerivativeKernels {
    Kernel2D dx;  ///< -u / sigma^2 * exp(-(u^2+v^2) / (2 sigma^2)); responds to variation along x
    Kernel2D dy;  ///< exact transpose of dx
};

/// Sampled analytic first derivatives of the (unnormalized) Gaussian.
DerivativeKernels gaussian_derivative_kernels(double sigma, int radius);

/**
 * True convolution: out(x, y) = sum_{u,v} k(u, v) * src(x - u, y - v), with
 * out-of-range source coordinates remapped by policy. A unit tap at (1, 0)
 * therefore moves image content one pixel towards +x.
 */
ScalarField convolve(const ScalarField& src, const Kernel2D& k, BoundaryPolicy policy = BoundaryPolicy::Replicate);

/// Convolves a single-channel image; throws std::invalid_argument for RGB.
ScalarField convolve(const ImageBuffer& gray, const Kernel2D& k, BoundaryPolicy policy = BoundaryPolicy::Replicate);

/// Copy of src extended by pad pixels on every side, remapped per policy.
ScalarField pad_field(const ScalarField& src, int pad, BoundaryPolicy policy);

}  // namespace edgekeep

#endif  // EDGEKEEP_KERNELS_HPP
