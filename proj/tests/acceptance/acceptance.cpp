// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "commands.hpp"
#include "edgekeep/edgekeep.hpp"
#include "oracles.hpp"

namespace {

using namespace edgekeep;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

const app::BenchReport& bench_report() {
    static const app::BenchReport report = app::run_bench(app::synthetic_bench_images(), app::BenchSettings{});
    return report;
}

Outcome oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> side(1, 16);
    double worst = 0.0;
    int images = 0;
    for (int i = 0; i < 60; ++i) {
        const int w = side(rng);
        const int h = side(rng);
        const int ch = i % 3 == 0 ? 3 : 1;
        const ImageBuffer img = testing::random_image(w, h, ch, rng());
        const FilterParams p{1 + i % 3, 0.5 + 0.25 * (i % 7), 0.05 + 0.05 * (i % 5), 0.2 + 0.4 * (i % 4), 1 + i % 2};
        const BoundaryPolicy policy = i % 2 == 0 ? BoundaryPolicy::Replicate : BoundaryPolicy::Mirror;
        FilterContext ctx;
        ctx.boundary = policy;
        for (const auto mode : {FilterMode::Bilateral, FilterMode::Multilateral, FilterMode::Average}) {
            worst = std::max(worst, testing::max_abs_diff(filter(img, p, mode, ctx),
                                                          testing::filter_oracle(img, p, mode, policy)));
        }
        ++images;
    }
    const double elapsed = seconds_since(start);
    return {images >= 50 && worst <= 1e-12 && elapsed < 10.0,
            std::to_string(images) + " images x 3 modes, max diff " + fmt("%.3g", worst) + ", " +
                fmt("%.2f s", elapsed)};
}

Outcome degeneracy_limits() {
    double sigma_t_gap = 0.0;
    double box_gap = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ImageBuffer img = testing::random_image(16, 12, seed % 2 ? 3 : 1, 500 + seed);
        const FilterParams wide_t{2, 2.0, 0.1, 1e6, 2};
        sigma_t_gap = std::max(sigma_t_gap, testing::max_abs_diff(filter(img, wide_t, FilterMode::Multilateral),
                                                                  filter(img, wide_t, FilterMode::Bilateral)));
        const FilterParams wide{2, 1e9, 1e9, 1.0, 1};
        const ImageBuffer bi = filter(img, wide, FilterMode::Bilateral);
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                for (int c = 0; c < img.channels(); ++c) {
                    double box = 0.0;
                    for (int j = -2; j <= 2; ++j) {
                        for (int i = -2; i <= 2; ++i) {
                            box += sample_at(img, {x + i, y + j})[c];
                        }
                    }
                    box_gap = std::max(box_gap, std::fabs(bi.at(x, y, c) - box / 25.0));
                }
            }
        }
    }
    return {sigma_t_gap <= 1e-6 && box_gap <= 1e-9,
            "sigma_t limit gap " + fmt("%.3g", sigma_t_gap) + ", box-mean gap " + fmt("%.3g", box_gap)};
}

Outcome noise_sweep_trend() {
    const auto start = Clock::now();
    const auto images = app::synthetic_bench_images();
    const app::BenchReport report = app::run_bench({images.front()}, app::BenchSettings{});
    const double elapsed = seconds_since(start);
    std::vector<double> ratios;
    for (const auto& row : report.noise_sweep) {
        if (row.filter == "ratio" && row.ep_h.has_value()) {
            ratios.push_back(row.ep_h.value());
        }
    }
    bool pass = ratios.size() == 4 && elapsed < 60.0;
    std::string detail = "ratios";
    for (const double r : ratios) {
        pass = pass && r > 1.0;
        detail += fmt(" %.4f", r);
    }
    pass = pass && ratios.back() > ratios.front();
    return {pass, detail + ", " + fmt("%.2f s", elapsed)};
}

Outcome sigma_t_trend() {
    const auto& rows = bench_report().sigma_t_sweep;
    std::vector<const app::BenchRow*> multi;
    for (const auto& r : rows) {
        if (r.filter == "multilateral") {
            multi.push_back(&r);
        }
    }
    if (multi.size() != 4) {
        return {false, "sweep incomplete"};
    }
    bool pass = true;
    for (std::size_t i = 1; i < multi.size(); ++i) {
        pass = pass && multi[i]->ep_h.value() <= multi[i - 1]->ep_h.value() &&
               multi[i]->ep_v.value() <= multi[i - 1]->ep_v.value();
    }
    const double plateau_h = std::fabs(multi[2]->ep_h.value() - multi[3]->ep_h.value());
    const double plateau_v = std::fabs(multi[2]->ep_v.value() - multi[3]->ep_v.value());
    pass = pass && plateau_h <= 0.01 && plateau_v <= 0.01;
    pass = pass && multi[0]->snr_db.value() >= multi[3]->snr_db.value();
    std::string detail = "E_P h";
    for (const auto* r : multi) {
        detail += fmt(" %.4f", r->ep_h.value());
    }
    detail += ", E_P v";
    for (const auto* r : multi) {
        detail += fmt(" %.4f", r->ep_v.value());
    }
    detail += ", SNR(0.1) " + fmt("%.4f", multi[0]->snr_db.value()) + " vs SNR(100) " +
              fmt("%.4f", multi[3]->snr_db.value());
    return {pass, detail};
}

Outcome comparison_direction() {
    const auto& rows = bench_report().comparison;
    bool pass = !rows.empty();
    int cells = 0;
    double worst_snr_margin = 1e9;
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
        const auto& bi = rows[i];
        const auto& mu = rows[i + 1];
        pass = pass && bi.filter == "bilateral" && mu.filter == "multilateral";
        const double margin = mu.snr_db.value() - bi.snr_db.value();
        worst_snr_margin = std::min(worst_snr_margin, margin);
        pass = pass && margin >= -0.05;
        pass = pass && mu.ep_h.value() >= bi.ep_h.value() && mu.ep_v.value() >= bi.ep_v.value();
        ++cells;
    }
    return {pass, std::to_string(cells) + " cells, smallest SNR margin " + fmt("%.4f dB", worst_snr_margin)};
}

Outcome metric_identities() {
    const ImageBuffer img = testing::random_image(20, 20, 1, 1);
    const Measurement id_h = edge_preserving_exponent(img, img, Direction::Horizontal);
    const Measurement id_v = edge_preserving_exponent(img, img, Direction::Vertical);
    const ImageBuffer flat = ImageBuffer::filled(20, 20, 1, 0.5);
    const Measurement flat_h = edge_preserving_exponent(img, flat, Direction::Horizontal);
    const Measurement flat_v = edge_preserving_exponent(img, flat, Direction::Vertical);
    std::vector<double> s(400, 0.5);
    const double delta = 0.2;
    s[123] += delta;
    const double expected = 10.0 * std::log10(400 * 0.25 / (delta * delta));
    const double snr = snr_db(flat, ImageBuffer(20, 20, 1, s)).value();
    const bool pass = id_h.value() == 1.0 && id_v.value() == 1.0 && flat_h.value() == 0.0 && flat_v.value() == 0.0 &&
                      std::fabs(snr - expected) <= 1e-9;
    return {pass, "E_P identity " + id_h.to_string() + "/" + id_v.to_string() + ", constant " + flat_h.to_string() +
                      "/" + flat_v.to_string() + ", SNR error " + fmt("%.3g dB", std::fabs(snr - expected))};
}

ImageBuffer grating(int w, int h, bool vary_along_x) {
    std::vector<double> s(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            s[static_cast<std::size_t>(y) * w + x] =
                0.5 + 0.2 * std::sin(2 * std::numbers::pi * (vary_along_x ? x : y) / 6.0);
        }
    }
    return ImageBuffer(w, h, 1, std::move(s));
}

Outcome texture_classification() {
    constexpr int kBorder = 5;
    const TextureMap flat = compute_texture_map(ImageBuffer::filled(32, 32, 1, 0.7));
    int smooth = 0;
    for (const auto l : flat.labels()) {
        smooth += l == TextureClass::Smooth ? 1 : 0;
    }
    const double smooth_frac = smooth / 1024.0;

    const int w = 64;
    const int h = 48;
    const TextureMap vmap = compute_texture_map(grating(w, h, true));
    const TextureMap hmap = compute_texture_map(grating(w, h, false));
    // Quarter turn of the vertical grating: rotated(x, y) = original(y, h - 1 - x).
    const ImageBuffer vertical = grating(w, h, true);
    std::vector<double> rot(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < w; ++y) {
        for (int x = 0; x < h; ++x) {
            rot[static_cast<std::size_t>(y) * h + x] = vertical.at(y, h - 1 - x);
        }
    }
    const TextureMap rmap = compute_texture_map(ImageBuffer(h, w, 1, rot));

    auto fraction = [&](const TextureMap& m, TextureClass want) {
        int hits = 0;
        int total = 0;
        for (int y = kBorder; y < m.height() - kBorder; ++y) {
            for (int x = kBorder; x < m.width() - kBorder; ++x) {
                ++total;
                hits += m.at(x, y) == want ? 1 : 0;
            }
        }
        return static_cast<double>(hits) / total;
    };
    int swapped = 0;
    int total = 0;
    for (int y = kBorder; y < rmap.height() - kBorder; ++y) {
        for (int x = kBorder; x < rmap.width() - kBorder; ++x) {
            const TextureClass before = vmap.at(y, h - 1 - x);
            const TextureClass after = rmap.at(x, y);
            ++total;
            swapped += (before == TextureClass::Orient0 && after == TextureClass::Orient90) ||
                               (before == TextureClass::Orient90 && after == TextureClass::Orient0)
                           ? 1
                           : 0;
        }
    }
    const double v0 = fraction(vmap, TextureClass::Orient0);
    const double h90 = fraction(hmap, TextureClass::Orient90);
    const double swap = static_cast<double>(swapped) / total;
    return {smooth_frac == 1.0 && v0 >= 0.95 && h90 >= 0.95 && swap >= 0.95,
            "smooth " + fmt("%.3f", smooth_frac) + ", orient0 " + fmt("%.3f", v0) + ", orient90 " +
                fmt("%.3f", h90) + ", swapped " + fmt("%.3f", swap)};
}

Outcome steering_identity() {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SubBandSet b = decompose(testing::random_image(24, 18, 1, 900 + seed));
        for (int y = 0; y < b.height(); ++y) {
            for (int x = 0; x < b.width(); ++x) {
                const double expected =
                    (b.band(Orientation::Deg0).at(x, y) + b.band(Orientation::Deg90).at(x, y)) / std::numbers::sqrt2;
                worst = std::max(worst, std::fabs(b.band(Orientation::Deg45).at(x, y) - expected));
            }
        }
    }
    return {worst <= 1e-12, "max diff " + fmt("%.3g", worst)};
}

Outcome bench_determinism() {
    auto csv = [] {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app::run_cli({"bench", "--report", "csv", "--seed", "2024"}, out, err);
        return std::pair{code, out.str()};
    };
    const auto [code_a, a] = csv();
    const auto [code_b, b] = csv();
    return {code_a == 0 && code_b == 0 && !a.empty() && a == b,
            std::to_string(a.size()) + " CSV bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 oracle equivalence", oracle_equivalence},
        {"2 degeneracy limits", degeneracy_limits},
        {"3 noise sweep E_P ratio trend", noise_sweep_trend},
        {"4 sigma_t sweep trend", sigma_t_trend},
        {"5 multilateral vs bilateral direction", comparison_direction},
        {"6 metric identities", metric_identities},
        {"7 texture classification", texture_classification},
        {"8 steering identity", steering_identity},
        {"9 bench determinism", bench_determinism},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
