#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "edgekeep/kernels.hpp"
#include "oracles.hpp"

namespace edgekeep {
namespace {

TEST(GaussianKernel, NormalizedSymmetricUnimodal) {
    for (const double sigma : {0.5, 1.0, 1.7, 3.0}) {
        for (const int r : {1, 2, 3, 6}) {
            const Kernel2D k = gaussian_kernel(sigma, r);
            EXPECT_NEAR(k.sum(), 1.0, 1e-12);
            double max_tap = 0.0;
            for (int v = -r; v <= r; ++v) {
                for (int u = -r; u <= r; ++u) {
                    EXPECT_EQ(k.at(u, v), k.at(-u, v));
                    EXPECT_EQ(k.at(u, v), k.at(u, -v));
                    max_tap = std::max(max_tap, k.at(u, v));
                }
            }
            EXPECT_EQ(k.at(0, 0), max_tap);
        }
    }
}

TEST(GaussianKernel, TapsFollowClosedForm) {
    const Kernel2D k = gaussian_kernel(1.0, 3);
    EXPECT_NEAR(k.at(1, 0) / k.at(0, 0), std::exp(-0.5), 1e-15);
    EXPECT_NEAR(k.at(2, 1) / k.at(0, 0), std::exp(-2.5), 1e-15);
}

TEST(DerivativeKernels, ZeroSumTransposedClosedForm) {
    for (const double sigma : {0.8, 1.0, 2.0}) {
        const int r = default_kernel_radius(sigma);
        const auto [dx, dy] = gaussian_derivative_kernels(sigma, r);
        EXPECT_NEAR(dx.sum(), 0.0, 1e-12);
        EXPECT_NEAR(dy.sum(), 0.0, 1e-12);
        EXPECT_TRUE(std::ranges::equal(dy.taps(), dx.transposed().taps()));
        for (int v = -r; v <= r; ++v) {
            for (int u = -r; u <= r; ++u) {
                const double expected = -u / (sigma * sigma) * std::exp(-(u * u + v * v) / (2 * sigma * sigma));
                EXPECT_NEAR(dx.at(u, v), expected, 1e-15);
            }
        }
    }
}

TEST(Kernels, RejectNonpositiveSigma) {
    EXPECT_THROW(gaussian_kernel(0.0, 3), std::invalid_argument);
    EXPECT_THROW(gaussian_derivative_kernels(-1.0, 3), std::invalid_argument);
    EXPECT_THROW(gaussian_kernel(1.0, 0), std::invalid_argument);
}

TEST(Kernels, DefaultRadius) {
    EXPECT_EQ(default_kernel_radius(1.0), 3);
    EXPECT_EQ(default_kernel_radius(1.2), 6);
    EXPECT_EQ(default_kernel_radius(0.5), 3);
}

TEST(Convolve, IdentityKernelIsExact) {
    const ScalarField f = testing::random_field(9, 6, 1);
    for (const auto policy : {BoundaryPolicy::Replicate, BoundaryPolicy::Mirror}) {
        EXPECT_TRUE(std::ranges::equal(convolve(f, Kernel2D::impulse(2), policy).values(), f.values()));
    }
}

TEST(Convolve, UnitTapShiftsTowardPositiveX) {
    ScalarField f(5, 1);
    f.at(2, 0) = 1.0;
    const ScalarField out = convolve(f, Kernel2D::impulse(1, 1, 0));
    EXPECT_EQ(out.at(3, 0), 1.0);
    EXPECT_EQ(out.at(2, 0), 0.0);
    ScalarField g(1, 5);
    g.at(0, 2) = 1.0;
    EXPECT_EQ(convolve(g, Kernel2D::impulse(1, 0, 1)).at(0, 3), 1.0);
}

TEST(Convolve, ConstantThroughGaussianAndDerivative) {
    const ScalarField c(12, 9, 0.37);
    const ScalarField smoothed = convolve(c, gaussian_kernel(1.0, 3));
    const auto [dx, dy] = gaussian_derivative_kernels(1.0, 3);
    const ScalarField rx = convolve(c, dx);
    const ScalarField ry = convolve(c, dy, BoundaryPolicy::Mirror);
    for (std::size_t i = 0; i < c.values().size(); ++i) {
        EXPECT_NEAR(smoothed.values()[i], 0.37, 1e-10);
        EXPECT_NEAR(rx.values()[i], 0.0, 1e-10);
        EXPECT_NEAR(ry.values()[i], 0.0, 1e-10);
    }
}

TEST(Convolve, MatchesQuadraticLoopOracle) {
    const auto [dx, dy] = gaussian_derivative_kernels(1.0, 3);
    const std::vector<Kernel2D> kernels = {gaussian_kernel(1.0, 2), dx, dy, gaussian_kernel(0.7, 1)};
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const ScalarField f = testing::random_field(5, 5, seed);
        for (const auto& k : kernels) {
            for (const auto policy : {BoundaryPolicy::Replicate, BoundaryPolicy::Mirror}) {
                EXPECT_LE(testing::max_abs_diff(convolve(f, k, policy), testing::convolve_oracle(f, k, policy)), 1e-12);
            }
        }
    }
    const ScalarField wide = testing::random_field(13, 4, 99);
    EXPECT_LE(testing::max_abs_diff(convolve(wide, dx), testing::convolve_oracle(wide, dx, BoundaryPolicy::Replicate)),
              1e-12);
}

TEST(Convolve, GrayImageOverload) {
    const ImageBuffer img = testing::random_image(6, 7, 1, 5);
    const Kernel2D k = gaussian_kernel(1.0, 2);
    EXPECT_TRUE(std::ranges::equal(convolve(img, k).values(), convolve(ScalarField::from_gray(img), k).values()));
    EXPECT_THROW(convolve(testing::random_image(2, 2, 3, 1), k), std::invalid_argument);
}

TEST(Convolve, IsLinear) {
    const auto [dx, dy] = gaussian_derivative_kernels(1.0, 3);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ScalarField i = testing::random_field(11, 8, seed);
        const ScalarField j = testing::random_field(11, 8, seed + 100);
        const double a = 0.7;
        const double b = -1.3;
        std::vector<double> mix(i.values().size());
        for (std::size_t n = 0; n < mix.size(); ++n) {
            mix[n] = a * i.values()[n] + b * j.values()[n];
        }
        const ScalarField lhs = convolve(ScalarField(11, 8, mix), dx);
        const ScalarField ci = convolve(i, dx);
        const ScalarField cj = convolve(j, dx);
        for (std::size_t n = 0; n < mix.size(); ++n) {
            EXPECT_NEAR(lhs.values()[n], a * ci.values()[n] + b * cj.values()[n], 1e-10);
        }
    }
}

}  // namespace
}  // namespace edgekeep
