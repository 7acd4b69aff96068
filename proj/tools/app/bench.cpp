#include "bench.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

namespace edgekeep::app {

namespace {

ImageBuffer generate(int size, int channels, const std::function<void(int, int, double*)>& fill) {
    std::vector<double> s(static_cast<std::size_t>(size) * size * channels);
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            fill(x, y, s.data() + (static_cast<std::size_t>(y) * size + x) * channels);
        }
    }
    return clamped_image(size, size, channels, std::move(s));
}

double grating_value(int x, int y, bool vertical, double amplitude, double period) {
    const double phase = vertical ? x : y;
    return 0.5 + amplitude * std::sin(2.0 * std::numbers::pi * phase / period);
}

std::string format_param(const char* name, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%g", name, v);
    return buf;
}

std::string fixed4(const Measurement& m) {
    if (!m.has_value()) {
        return m.to_string();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", m.value());
    return buf;
}

std::uint64_t cell_seed(std::uint64_t base, std::uint64_t tag) { return CounterRng(base).bits(tag); }

BenchRow make_row(const std::string& image, NoiseKind kind, std::string param, FilterMode mode,
                  const ImageBuffer& noisy, const ImageBuffer& filtered) {
    const MetricsReport r = evaluate(noisy, filtered);
    return {image, std::string(noise_kind_name(kind)), std::move(param), std::string(filter_mode_name(mode)),
            r.snr_db, r.ep_horizontal, r.ep_vertical};
}

}  // namespace

ImageBuffer grating_image(int size, bool vertical, double amplitude, double period) {
    return generate(size, 1, [&](int x, int y, double* px) { px[0] = grating_value(x, y, vertical, amplitude, period); });
}

ImageBuffer two_texture_image(int size, double amplitude, double period) {
    return generate(size, 1, [&](int x, int y, double* px) {
        px[0] = grating_value(x, y, x < size / 2, amplitude, period);
    });
}

ImageBuffer texture_checker_image(int size, int block, double amplitude, double period) {
    return generate(size, 1, [&](int x, int y, double* px) {
        px[0] = grating_value(x, y, ((x / block) + (y / block)) % 2 == 0, amplitude, period);
    });
}

ImageBuffer step_edge_image(int size) {
    return generate(size, 1, [&](int x, int, double* px) { px[0] = x < size / 2 ? 0.45 : 0.55; });
}

ImageBuffer two_texture_rgb_image(int size) {
    return generate(size, 3, [&](int x, int y, double* px) {
        const double g = grating_value(x, y, x < size / 2, kGratingAmplitude, kGratingPeriod);
        px[0] = g;
        px[1] = 0.9 * g + 0.05;
        px[2] = 0.8 * g + 0.1;
    });
}

std::vector<BenchImage> synthetic_bench_images(int size) {
    std::vector<BenchImage> images;
    images.push_back({"two-texture", two_texture_image(size)});
    images.push_back({"step-edge", step_edge_image(size)});
    images.push_back({"texture-checker", texture_checker_image(size)});
    images.push_back({"grating", grating_image(size, true)});
    images.push_back({"two-texture-rgb", two_texture_rgb_image(size)});
    return images;
}

BenchReport run_bench(const std::vector<BenchImage>& images, const BenchSettings& settings) {
    if (images.empty()) {
        throw std::invalid_argument("bench needs at least one image");
    }
    settings.filter.validate();
    FilterContext ctx;
    ctx.boundary = settings.boundary;
    ctx.texture = settings.texture;
    BenchReport report;

    auto both = [&](const ImageBuffer& noisy, const FilterParams& p) {
        return std::pair{filter(noisy, p, FilterMode::Bilateral, ctx), filter(noisy, p, FilterMode::Multilateral, ctx)};
    };

    for (std::size_t i = 0; i < images.size(); ++i) {
        for (const NoiseKind kind : {NoiseKind::SaltPepper, NoiseKind::Gaussian}) {
            NoiseSpec spec;
            spec.kind = kind;
            spec.density = settings.salt_pepper_density;
            spec.stddev = settings.gaussian_std;
            spec.seed = cell_seed(settings.seed, 2 * i + (kind == NoiseKind::Gaussian ? 1 : 0));
            const ImageBuffer noisy = add_noise(images[i].image, spec);
            const auto [bi, multi] = both(noisy, settings.filter);
            const std::string param = kind == NoiseKind::SaltPepper ? format_param("d", spec.density)
                                                                     : format_param("std", spec.stddev);
            report.comparison.push_back(make_row(images[i].name, kind, param, FilterMode::Bilateral, noisy, bi));
            report.comparison.push_back(make_row(images[i].name, kind, param, FilterMode::Multilateral, noisy, multi));
        }
    }

    const BenchImage& sweep = images.front();
    for (std::size_t k = 0; k < settings.densities.size(); ++k) {
        NoiseSpec spec;
        spec.density = settings.densities[k];
        spec.seed = cell_seed(settings.seed, 1000 + k);
        const ImageBuffer noisy = add_noise(sweep.image, spec);
        const auto [bi, multi] = both(noisy, settings.filter);
        const std::string param = format_param("sweep/d", spec.density);
        report.noise_sweep.push_back(make_row(sweep.name, spec.kind, param, FilterMode::Bilateral, noisy, bi));
        report.noise_sweep.push_back(make_row(sweep.name, spec.kind, param, FilterMode::Multilateral, noisy, multi));
        report.noise_sweep.push_back({sweep.name, std::string(noise_kind_name(spec.kind)), param, "ratio",
                                      Measurement::undefined(), ep_ratio(noisy, multi, bi, Direction::Horizontal),
                                      ep_ratio(noisy, multi, bi, Direction::Vertical)});
    }

    NoiseSpec spec;
    spec.density = settings.salt_pepper_density;
    spec.seed = cell_seed(settings.seed, 2000);
    const ImageBuffer noisy = add_noise(sweep.image, spec);
    for (const double sigma_t : settings.sigma_ts) {
        FilterParams p = settings.filter;
        p.sigma_t = sigma_t;
        const ImageBuffer multi = filter(noisy, p, FilterMode::Multilateral, ctx);
        report.sigma_t_sweep.push_back(
            make_row(sweep.name, spec.kind, format_param("sigma_t", sigma_t), FilterMode::Multilateral, noisy, multi));
    }
    report.sigma_t_sweep.push_back(make_row(sweep.name, spec.kind, "sigma_t=inf", FilterMode::Bilateral, noisy,
                                            filter(noisy, settings.filter, FilterMode::Bilateral, ctx)));
    return report;
}

std::string to_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "image,noise,param,filter,snr_db,ep_h,ep_v\n";
    for (const auto* rows : {&report.comparison, &report.noise_sweep, &report.sigma_t_sweep}) {
        for (const auto& r : *rows) {
            out << r.image << ',' << r.noise << ',' << r.param << ',' << r.filter << ',' << r.snr_db.to_string()
                << ',' << r.ep_h.to_string() << ',' << r.ep_v.to_string() << '\n';
        }
    }
    return out.str();
}

std::string to_markdown(const BenchReport& report) {
    std::ostringstream out;
    out << "## Bilateral vs multilateral\n\n"
        << "| image | noise | SNR bi | SNR multi | E_P h bi | E_P h multi | E_P v bi | E_P v multi |\n"
        << "|---|---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i + 1 < report.comparison.size(); i += 2) {
        const auto& bi = report.comparison[i];
        const auto& mu = report.comparison[i + 1];
        out << "| " << bi.image << " | " << bi.noise << " " << bi.param << " | " << fixed4(bi.snr_db) << " | "
            << fixed4(mu.snr_db) << " | " << fixed4(bi.ep_h) << " | " << fixed4(mu.ep_h) << " | " << fixed4(bi.ep_v)
            << " | " << fixed4(mu.ep_v) << " |\n";
    }

    out << "\n## E_P multi / E_P bi under salt-pepper noise\n\n"
        << "| density | horizontal | vertical |\n|---|---|---|\n";
    for (const auto& r : report.noise_sweep) {
        if (r.filter == "ratio") {
            out << "| " << r.param.substr(8) << " | " << fixed4(r.ep_h) << " | " << fixed4(r.ep_v) << " |\n";
        }
    }

    out << "\n## Multilateral response to sigma_t\n\n"
        << "| sigma_t | E_P h | E_P v | SNR |\n|---|---|---|---|\n";
    for (const auto& r : report.sigma_t_sweep) {
        const std::string label = r.filter == "bilateral" ? "bilateral" : r.param.substr(8);
        out << "| " << label << " | " << fixed4(r.ep_h) << " | " << fixed4(r.ep_v) << " | " << fixed4(r.snr_db)
            << " |\n";
    }
    return out.str();
}

}  // namespace edgekeep::app
