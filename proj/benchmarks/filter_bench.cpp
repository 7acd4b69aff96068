#include <benchmark/benchmark.h>

#include <random>

#include "edgekeep/edgekeep.hpp"

namespace {

using namespace edgekeep;

ImageBuffer noise_image(int side, int channels) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> s(static_cast<std::size_t>(side) * side * channels);
    for (double& v : s) {
        v = dist(rng);
    }
    return ImageBuffer(side, side, channels, std::move(s));
}

void BM_Filter(benchmark::State& state, FilterMode mode, int channels) {
    const ImageBuffer img = noise_image(static_cast<int>(state.range(0)), channels);
    FilterParams p;
    p.window_radius = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(filter(img, p, mode));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.pixel_count()));
}

void BM_TextureMap(benchmark::State& state) {
    const ImageBuffer img = noise_image(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_texture_map(img));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.pixel_count()));
}

void BM_Convolve(benchmark::State& state) {
    const ImageBuffer img = noise_image(static_cast<int>(state.range(0)), 1);
    const auto kernels = gaussian_derivative_kernels(1.0, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve(img, kernels.dx));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.pixel_count()));
}

BENCHMARK_CAPTURE(BM_Filter, bilateral_gray, FilterMode::Bilateral, 1)->Args({256, 2})->Args({256, 4});
BENCHMARK_CAPTURE(BM_Filter, multilateral_gray, FilterMode::Multilateral, 1)->Args({256, 2})->Args({256, 4});
BENCHMARK_CAPTURE(BM_Filter, bilateral_rgb, FilterMode::Bilateral, 3)->Args({256, 2});
BENCHMARK_CAPTURE(BM_Filter, average_gray, FilterMode::Average, 1)->Args({256, 2});
BENCHMARK(BM_TextureMap)->Arg(256);
BENCHMARK(BM_Convolve)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
