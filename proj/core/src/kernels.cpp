#include "edgekeep/kernels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "edgekeep/parallel.hpp"

namespace edgekeep {

namespace {

void check_kernel_args(double sigma, int radius) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("nonpositive-sigma: kernel sigma must be > 0, got " + std::to_string(sigma));
    }
    if (radius < 1) {
        throw std::invalid_argument("kernel radius must be >= 1, got " + std::to_string(radius));
    }
}

}  // namespace

ScalarField::ScalarField(int width, int height, double value)
    : ScalarField(width, height,
                  std::vector<double>(static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0), value)) {}

ScalarField::ScalarField(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("field dimensions must be positive");
    }
    if (values_.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("field value count does not match dimensions");
    }
}

ScalarField ScalarField::from_gray(const ImageBuffer& gray) {
    if (gray.channels() != 1) {
        throw std::invalid_argument("expected a single-channel image");
    }
    return ScalarField(gray.width(), gray.height(), std::vector<double>(gray.samples().begin(), gray.samples().end()));
}

Kernel2D::Kernel2D(int radius, std::vector<double> taps) : radius_(radius), taps_(std::move(taps)) {
    if (radius < 1) {
        throw std::invalid_argument("kernel radius must be >= 1");
    }
    if (taps_.size() != static_cast<std::size_t>(size()) * size()) {
        throw std::invalid_argument("kernel needs (2r+1)^2 taps");
    }
}

Kernel2D Kernel2D::impulse(int radius, int u, int v) {
    const int n = 2 * radius + 1;
    std::vector<double> taps(static_cast<std::size_t>(n) * n, 0.0);
    if (std::abs(u) > radius || std::abs(v) > radius) {
        throw std::invalid_argument("impulse offset outside kernel support");
    }
    taps[static_cast<std::size_t>(v + radius) * n + (u + radius)] = 1.0;
    return Kernel2D(radius, std::move(taps));
}

Kernel2D Kernel2D::transposed() const {
    std::vector<double> t(taps_.size());
    const int n = size();
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            t[static_cast<std::size_t>(col) * n + row] = taps_[static_cast<std::size_t>(row) * n + col];
        }
    }
    return Kernel2D(radius_, std::move(t));
}

double Kernel2D::sum() const noexcept { return std::accumulate(taps_.begin(), taps_.end(), 0.0); }

int default_kernel_radius(double sigma) { return 3 * static_cast<int>(std::ceil(sigma)); }

Kernel2D gaussian_kernel(double sigma, int radius) {
    check_kernel_args(sigma, radius);
    const int n = 2 * radius + 1;
    std::vector<double> taps(static_cast<std::size_t>(n) * n);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (int v = -radius; v <= radius; ++v) {
        for (int u = -radius; u <= radius; ++u) {
            taps[static_cast<std::size_t>(v + radius) * n + (u + radius)] = std::exp(-(u * u + v * v) * inv);
        }
    }
    const double total = std::accumulate(taps.begin(), taps.end(), 0.0);
    for (double& t : taps) {
        t /= total;
    }
    return Kernel2D(radius, std::move(taps));
}

DerivativeKernels gaussian_derivative_kernels(double sigma, int radius) {
    check_kernel_args(sigma, radius);
    const int n = 2 * radius + 1;
    std::vector<double> taps(static_cast<std::size_t>(n) * n);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    const double s2 = sigma * sigma;
    for (int v = -radius; v <= radius; ++v) {
        for (int u = -radius; u <= radius; ++u) {
            taps[static_cast<std::size_t>(v + radius) * n + (u + radius)] = -u / s2 * std::exp(-(u * u + v * v) * inv);
        }
    }
    Kernel2D dx(radius, std::move(taps));
    Kernel2D dy = dx.transposed();
    return {std::move(dx), std::move(dy)};
}

ScalarField pad_field(const ScalarField& src, int pad, BoundaryPolicy policy) {
    const int pw = src.width() + 2 * pad;
    const int ph = src.height() + 2 * pad;
    ScalarField out(pw, ph);
    std::vector<int> xs(pw);
    for (int x = 0; x < pw; ++x) {
        xs[x] = remap_coordinate(x - pad, src.width(), policy);
    }
    for (int y = 0; y < ph; ++y) {
        const int sy = remap_coordinate(y - pad, src.height(), policy);
        for (int x = 0; x < pw; ++x) {
            out.at(x, y) = src.at(xs[x], sy);
        }
    }
    return out;
}

ScalarField convolve(const ScalarField& src, const Kernel2D& k, BoundaryPolicy policy) {
    const int r = k.radius();
    const int n = k.size();
    const ScalarField padded = pad_field(src, r, policy);
    // Flip once so the inner loop is a plain correlation over the padded window.
    std::vector<double> flipped(k.taps().rbegin(), k.taps().rend());

    ScalarField out(src.width(), src.height());
    const int pw = padded.width();
    const auto pv = padded.values();
    auto ov = out.values();
    parallel_rows(src.height(), [&](int y) {
        for (int x = 0; x < src.width(); ++x) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                const double* row = pv.data() + static_cast<std::size_t>(y + j) * pw + x;
                const double* kr = flipped.data() + static_cast<std::size_t>(j) * n;
                for (int i = 0; i < n; ++i) {
                    acc += kr[i] * row[i];
                }
            }
            ov[static_cast<std::size_t>(y) * src.width() + x] = acc;
        }
    });
    return out;
}

ScalarField convolve(const ImageBuffer& gray, const Kernel2D& k, BoundaryPolicy policy) {
    return convolve(ScalarField::from_gray(gray), k, policy);
}

}  // namespace edgekeep
