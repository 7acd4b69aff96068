#include "edgekeep/filters.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgekeep/parallel.hpp"

namespace edgekeep {

namespace {

void require_positive(double v, const char* key) {
    if (!(v > 0.0) || std::isnan(v)) {
        throw std::invalid_argument(std::string(key) + ": must be > 0, got " + std::to_string(v));
    }
}

/// Image and texture data for one pass, padded by the window radius on every side.
struct PaddedPass {
    int width;
    int height;
    int pad;
    int stride;  // padded width
    std::vector<double> samples;
    std::vector<TextureClass> labels;
    std::vector<EnergyVector> energies;
};

PaddedPass pad_pass(const ImageBuffer& img, const TextureMap* tex, bool need_energy, int pad, BoundaryPolicy policy) {
    PaddedPass p{img.width(), img.height(), pad, img.width() + 2 * pad, {}, {}, {}};
    const int pw = p.stride;
    const int ph = img.height() + 2 * pad;
    const int ch = img.channels();
    p.samples.resize(static_cast<std::size_t>(pw) * ph * ch);
    if (tex) {
        p.labels.resize(static_cast<std::size_t>(pw) * ph);
        if (need_energy) {
            p.energies.resize(p.labels.size());
        }
    }
    std::vector<int> xs(pw);
    for (int x = 0; x < pw; ++x) {
        xs[x] = remap_coordinate(x - pad, img.width(), policy);
    }
    for (int y = 0; y < ph; ++y) {
        const int sy = remap_coordinate(y - pad, img.height(), policy);
        for (int x = 0; x < pw; ++x) {
            const auto src = img.pixel(xs[x], sy);
            const std::size_t idx = static_cast<std::size_t>(y) * pw + x;
            std::copy(src.begin(), src.end(), p.samples.begin() + static_cast<std::ptrdiff_t>(idx * ch));
            if (tex) {
                p.labels[idx] = tex->at(xs[x], sy);
                if (need_energy) {
                    p.energies[idx] = tex->energy().at(xs[x], sy);
                }
            }
        }
    }
    return p;
}

template <int Channels>
void run_pass(const PaddedPass& src, const FilterParams& p, FilterMode mode, TextureDistance distance,
              std::vector<double>& out) {
    const int m = p.window_radius;
    const int n = 2 * m + 1;
    const int stride = src.stride;

    std::vector<double> spatial(static_cast<std::size_t>(n) * n, 1.0);
    std::vector<std::ptrdiff_t> offsets(spatial.size());
    const double spatial_coeff = -0.5 / (p.sigma_d * p.sigma_d);
    for (int v = -m; v <= m; ++v) {
        for (int u = -m; u <= m; ++u) {
            const auto k = static_cast<std::size_t>(v + m) * n + (u + m);
            if (mode != FilterMode::Average) {
                spatial[k] = std::exp(static_cast<double>(u * u + v * v) * spatial_coeff);
            }
            offsets[k] = static_cast<std::ptrdiff_t>(v) * stride + u;
        }
    }
    const double range_coeff = -0.5 / (p.sigma_r * p.sigma_r);
    const double texture_coeff = -0.5 / (p.sigma_t * p.sigma_t);
    const double mismatch_weight = std::exp(texture_coeff);
    const bool textured = mode == FilterMode::Multilateral;
    const bool by_energy = textured && distance == TextureDistance::EnergyEuclidean;

    auto weight = [&](std::ptrdiff_t centre, const double* c, std::size_t k) {
        const std::ptrdiff_t nb = centre + offsets[k];
        const double* q = src.samples.data() + nb * Channels;
        double w = spatial[k];
        if (mode != FilterMode::Average) {
            double d2 = 0.0;
            for (int ch = 0; ch < Channels; ++ch) {
                const double d = q[ch] - c[ch];
                d2 += d * d;
            }
            w *= std::exp(d2 * range_coeff);
        }
        if (by_energy) {
            const double dt = energy_distance(src.energies[static_cast<std::size_t>(nb)],
                                              src.energies[static_cast<std::size_t>(centre)]);
            w *= std::exp(dt * dt * texture_coeff);
        } else if (textured &&
                   src.labels[static_cast<std::size_t>(nb)] != src.labels[static_cast<std::size_t>(centre)]) {
            w *= mismatch_weight;
        }
        return std::pair{w, q};
    };

    // Each window row is summed as the centre column plus the (-u, +u) pairs,
    // so a horizontally mirrored input reproduces the result bit for bit.
    parallel_rows(src.height, [&](int y) {
        for (int x = 0; x < src.width; ++x) {
            const std::ptrdiff_t centre = static_cast<std::ptrdiff_t>(y + m) * stride + (x + m);
            const double* c = src.samples.data() + centre * Channels;
            double acc[Channels] = {};
            double norm = 0.0;
            for (int v = 0; v < n; ++v) {
                const std::size_t row = static_cast<std::size_t>(v) * n + m;
                const auto [w0, q0] = weight(centre, c, row);
                double row_acc[Channels];
                for (int ch = 0; ch < Channels; ++ch) {
                    row_acc[ch] = w0 * q0[ch];
                }
                double row_norm = w0;
                for (int u = 1; u <= m; ++u) {
                    const auto [wl, ql] = weight(centre, c, row - u);
                    const auto [wr, qr] = weight(centre, c, row + u);
                    for (int ch = 0; ch < Channels; ++ch) {
                        row_acc[ch] += wl * ql[ch] + wr * qr[ch];
                    }
                    row_norm += wl + wr;
                }
                for (int ch = 0; ch < Channels; ++ch) {
                    acc[ch] += row_acc[ch];
                }
                norm += row_norm;
            }
            double* o = out.data() + (static_cast<std::size_t>(y) * src.width + x) * Channels;
            for (int ch = 0; ch < Channels; ++ch) {
                o[ch] = std::clamp(acc[ch] / norm, 0.0, 1.0);
            }
        }
    });
}

}  // namespace

std::string_view filter_mode_name(FilterMode mode) noexcept {
    switch (mode) {
        case FilterMode::Bilateral:
            return "bilateral";
        case FilterMode::Multilateral:
            return "multilateral";
        case FilterMode::Average:
            return "average";
    }
    return "unknown";
}

void FilterParams::validate() const {
    if (window_radius < 1) {
        throw std::invalid_argument("radius: must be >= 1, got " + std::to_string(window_radius));
    }
    require_positive(sigma_d, "sigma-d");
    require_positive(sigma_r, "sigma-r");
    require_positive(sigma_t, "sigma-t");
    if (passes < 1) {
        throw std::invalid_argument("passes: must be >= 1, got " + std::to_string(passes));
    }
}

double weight_bilateral(const ImageBuffer& img, Pixel x, Pixel xi, const FilterParams& p,
                        BoundaryPolicy policy) noexcept {
    const double du = xi.x - x.x;
    const double dv = xi.y - x.y;
    const auto a = sample_at(img, xi, policy);
    const auto b = sample_at(img, x, policy);
    double range2 = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        range2 += (a[c] - b[c]) * (a[c] - b[c]);
    }
    return std::exp(-0.5 * (du * du + dv * dv) / (p.sigma_d * p.sigma_d)) *
           std::exp(-0.5 * range2 / (p.sigma_r * p.sigma_r));
}

double texture_similarity(const TextureMap& tex, Pixel x, Pixel xi, double sigma_t, TextureDistance distance,
                          BoundaryPolicy policy) noexcept {
    const int ax = remap_coordinate(xi.x, tex.width(), policy);
    const int ay = remap_coordinate(xi.y, tex.height(), policy);
    const int bx = remap_coordinate(x.x, tex.width(), policy);
    const int by = remap_coordinate(x.y, tex.height(), policy);
    const double d = distance == TextureDistance::Indicator
                         ? texture_distance(tex.at(ax, ay), tex.at(bx, by))
                         : energy_distance(tex.energy().at(ax, ay), tex.energy().at(bx, by));
    return std::exp(-0.5 * d * d / (sigma_t * sigma_t));
}

double weight_multilateral(const ImageBuffer& img, const TextureMap& tex, Pixel x, Pixel xi, const FilterParams& p,
                           TextureDistance distance, BoundaryPolicy policy) noexcept {
    return weight_bilateral(img, x, xi, p, policy) * texture_similarity(tex, x, xi, p.sigma_t, distance, policy);
}

ImageBuffer filter(const ImageBuffer& img, const FilterParams& p, FilterMode mode, const FilterContext& ctx) {
    p.validate();
    if (mode == FilterMode::Multilateral) {
        ctx.texture.validate();
        if (ctx.texture_map &&
            (ctx.texture_map->width() != img.width() || ctx.texture_map->height() != img.height())) {
            throw std::invalid_argument("texture-map dimension mismatch: map is " +
                                        std::to_string(ctx.texture_map->width()) + "x" +
                                        std::to_string(ctx.texture_map->height()) + ", image is " +
                                        std::to_string(img.width()) + "x" + std::to_string(img.height()));
        }
    }

    ImageBuffer current = img;
    for (int pass = 0; pass < p.passes; ++pass) {
        std::optional<TextureMap> derived;
        const TextureMap* tex = nullptr;
        if (mode == FilterMode::Multilateral) {
            if (ctx.texture_map) {
                tex = ctx.texture_map;
            } else {
                derived.emplace(compute_texture_map(current, ctx.texture, ctx.boundary));
                tex = &*derived;
            }
        }
        const bool need_energy = ctx.texture.distance == TextureDistance::EnergyEuclidean;
        const PaddedPass padded = pad_pass(current, tex, need_energy, p.window_radius, ctx.boundary);
        std::vector<double> out(current.samples().size());
        if (current.channels() == 1) {
            run_pass<1>(padded, p, mode, ctx.texture.distance, out);
        } else {
            run_pass<3>(padded, p, mode, ctx.texture.distance, out);
        }
        current = ImageBuffer(current.width(), current.height(), current.channels(), std::move(out));
    }
    return current;
}

}  // namespace edgekeep
