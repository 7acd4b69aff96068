#include "edgekeep/texture.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace edgekeep {

double orientation_degrees(Orientation o) noexcept {
    switch (o) {
        case Orientation::Deg0:
            return 0.0;
        case Orientation::Deg90:
            return 90.0;
        case Orientation::Deg45:
            return 45.0;
        case Orientation::DegNeg45:
            return -45.0;
    }
    return 0.0;
}

SteeringCoefficients steering_coefficients(double degrees) noexcept {
    const double q = degrees / 45.0;
    if (q == std::floor(q) && std::isfinite(q)) {
        constexpr double h = std::numbers::sqrt2 / 2.0;
        static constexpr std::array<SteeringCoefficients, 8> table = {{
            {1.0, 0.0}, {h, h}, {0.0, 1.0}, {-h, h}, {-1.0, 0.0}, {-h, -h}, {0.0, -1.0}, {h, -h},
        }};
        int idx = static_cast<int>(std::fmod(q, 8.0));
        if (idx < 0) {
            idx += 8;
        }
        return table[static_cast<std::size_t>(idx)];
    }
    const double rad = degrees * std::numbers::pi / 180.0;
    return {std::cos(rad), std::sin(rad)};
}

SubBandSet::SubBandSet(std::array<ScalarField, 4> bands) : bands_(std::move(bands)) {
    for (const auto& b : bands_) {
        if (b.width() != bands_[0].width() || b.height() != bands_[0].height()) {
            throw std::invalid_argument("sub-bands must share dimensions");
        }
    }
}

SubBandSet decompose(const ImageBuffer& gray, double sigma_g, BoundaryPolicy policy, int kernel_radius) {
    if (gray.channels() != 1) {
        throw std::invalid_argument("decompose expects a grayscale image");
    }
    const int radius = kernel_radius > 0 ? kernel_radius : default_kernel_radius(sigma_g);
    const auto kernels = gaussian_derivative_kernels(sigma_g, radius);
    const ScalarField src = ScalarField::from_gray(gray);
    const ScalarField ix = convolve(src, kernels.dx, policy);
    const ScalarField iy = convolve(src, kernels.dy, policy);

    auto steer = [&](Orientation o) {
        const auto [c, s] = steering_coefficients(orientation_degrees(o));
        ScalarField band(ix.width(), ix.height());
        auto out = band.values();
        const auto a = ix.values();
        const auto b = iy.values();
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = c * a[i] + s * b[i];
        }
        return band;
    };
    return SubBandSet({steer(Orientation::Deg0), steer(Orientation::Deg90), steer(Orientation::Deg45),
                       steer(Orientation::DegNeg45)});
}

EnergyField::EnergyField(int width, int height, std::vector<EnergyVector> energies)
    : width_(width), height_(height), energies_(std::move(energies)) {
    if (width < 1 || height < 1 || energies_.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("energy field size does not match dimensions");
    }
}

double EnergyField::mean() const noexcept {
    double total = 0.0;
    for (const auto& e : energies_) {
        total += e[0] + e[1] + e[2] + e[3];
    }
    return total / (4.0 * static_cast<double>(energies_.size()));
}

EnergyField local_energy(const SubBandSet& bands, int window_radius, BoundaryPolicy policy) {
    if (window_radius < 1) {
        throw std::invalid_argument("energy_window_radius must be >= 1");
    }
    const int w = bands.width();
    const int h = bands.height();
    const int r = window_radius;
    const double inv_n = 1.0 / static_cast<double>((2 * r + 1) * (2 * r + 1));
    std::vector<EnergyVector> energies(static_cast<std::size_t>(w) * h);

    for (std::size_t o = 0; o < kOrientations.size(); ++o) {
        const ScalarField padded = pad_field(bands.band(kOrientations[o]), r, policy);
        const int ph = padded.height();
        // Separable box sum of squares: rows first, then columns.
        std::vector<double> row_sums(static_cast<std::size_t>(ph) * w);
        for (int y = 0; y < ph; ++y) {
            for (int x = 0; x < w; ++x) {
                double acc = 0.0;
                for (int i = 0; i <= 2 * r; ++i) {
                    const double v = padded.at(x + i, y);
                    acc += v * v;
                }
                row_sums[static_cast<std::size_t>(y) * w + x] = acc;
            }
        }
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                double acc = 0.0;
                for (int j = 0; j <= 2 * r; ++j) {
                    acc += row_sums[static_cast<std::size_t>(y + j) * w + x];
                }
                energies[static_cast<std::size_t>(y) * w + x][o] = acc * inv_n;
            }
        }
    }
    return EnergyField(w, h, std::move(energies));
}

std::string_view texture_class_name(TextureClass c) noexcept {
    switch (c) {
        case TextureClass::Smooth:
            return "smooth";
        case TextureClass::Complex:
            return "complex";
        case TextureClass::Orient0:
            return "orient0";
        case TextureClass::Orient90:
            return "orient90";
        case TextureClass::Orient45:
            return "orient45";
        case TextureClass::OrientNeg45:
            return "orient-45";
    }
    return "unknown";
}

void TextureParams::validate() const {
    if (energy_window_radius < 1) {
        throw std::invalid_argument("energy-window: must be >= 1, got " + std::to_string(energy_window_radius));
    }
    if (smooth_threshold && !(*smooth_threshold >= 0.0 && std::isfinite(*smooth_threshold))) {
        throw std::invalid_argument("smooth-threshold: must be >= 0, got " + std::to_string(*smooth_threshold));
    }
    if (!(complex_ratio > 0.0 && complex_ratio <= 1.0)) {
        throw std::invalid_argument("complex-ratio: must lie in (0,1], got " + std::to_string(complex_ratio));
    }
}

double resolve_smooth_threshold(const EnergyField& energy, const TextureParams& params) {
    if (params.smooth_threshold) {
        return *params.smooth_threshold;
    }
    return std::max(kAdaptiveThresholdFactor * energy.mean(), kAdaptiveThresholdFloor);
}

TextureClass classify_energy(const EnergyVector& e, double smooth_threshold, double complex_ratio) noexcept {
    std::size_t best = 0;
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i] > e[best]) {
            best = i;
        }
    }
    if (e[best] < smooth_threshold) {
        return TextureClass::Smooth;
    }
    double second = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i != best) {
            second = std::max(second, e[i]);
        }
    }
    if (second >= complex_ratio * e[best]) {
        return TextureClass::Complex;
    }
    static constexpr std::array<TextureClass, 4> by_band = {TextureClass::Orient0, TextureClass::Orient90,
                                                            TextureClass::Orient45, TextureClass::OrientNeg45};
    return by_band[best];
}

TextureMap::TextureMap(EnergyField energy, std::vector<TextureClass> labels)
    : energy_(std::move(energy)), labels_(std::move(labels)) {
    if (labels_.size() != static_cast<std::size_t>(energy_.width()) * energy_.height()) {
        throw std::invalid_argument("texture labels do not match energy field dimensions");
    }
}

TextureMap classify(EnergyField energy, const TextureParams& params) {
    params.validate();
    const double t1 = resolve_smooth_threshold(energy, params);
    std::vector<TextureClass> labels(energy.energies().size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = classify_energy(energy.energies()[i], t1, params.complex_ratio);
    }
    return TextureMap(std::move(energy), std::move(labels));
}

double texture_distance(TextureClass a, TextureClass b) noexcept { return a == b ? 0.0 : 1.0; }

double energy_distance(const EnergyVector& a, const EnergyVector& b) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

void TextureSettings::validate() const {
    if (!(sigma_g > 0.0) || !std::isfinite(sigma_g)) {
        throw std::invalid_argument("sigma-g: must be > 0, got " + std::to_string(sigma_g));
    }
    params.validate();
}

TextureMap compute_texture_map(const ImageBuffer& img, const TextureSettings& settings, BoundaryPolicy policy) {
    settings.validate();
    const ImageBuffer gray = to_grayscale(img);
    const SubBandSet bands = decompose(gray, settings.sigma_g, policy, settings.kernel_radius);
    return classify(local_energy(bands, settings.params.energy_window_radius, policy), settings.params);
}

std::uint8_t texture_gray_level(TextureClass c) noexcept { return static_cast<std::uint8_t>(51 * static_cast<int>(c)); }

ImageBuffer texture_map_image(const TextureMap& map) {
    std::vector<double> samples(map.labels().size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i] = texture_gray_level(map.labels()[i]) / 255.0;
    }
    return ImageBuffer(map.width(), map.height(), 1, std::move(samples));
}

}  // namespace edgekeep
