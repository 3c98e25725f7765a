/**
 * @file test_derivatives.cpp
 * @brief Gradient stencils, Hessian maps, determinant and curvature identities
 */

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "convexseg/derivatives.hpp"
#include "convexseg/oracle.hpp"
#include "convexseg/synthetic.hpp"
#include "oracles/brute_force.hpp"
#include "test_support.hpp"

namespace convexseg {
namespace {

using testing::centered;
using testing::for_interior;

constexpr double kSobelX[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
constexpr double kSobelY[3][3] = {{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}};
constexpr double kCentralX[3][3] = {{0, 0, 0}, {-0.5, 0, 0.5}, {0, 0, 0}};
constexpr double kCentralY[3][3] = {{0, -0.5, 0}, {0, 0, 0}, {0, 0.5, 0}};

const Image kBowl = centered(17, [](double x, double y) { return x * x + y * y; });
const Image kSaddle = centered(17, [](double x, double y) { return x * x - y * y; });

// Integer-valued random image; stencil arithmetic on it is exact in double.
Image integer_image(int w, int h, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> level(0, 255);
    return Image::generate(w, h, [&](int, int) { return static_cast<double>(level(rng)); });
}

// =============================================================================
// gradient
// =============================================================================

TEST(Gradient, RampWithCentralStencil) {
    const Image ramp = Image::generate(9, 7, [](int x, int) { return static_cast<double>(x); });
    const Gradient g = gradient(ramp, Stencil::Central);
    for_interior(9, 7, 1, [&](int x, int y) {
        EXPECT_EQ(g.fx(x, y), 1.0);
        EXPECT_EQ(g.fy(x, y), 0.0);
    });
}

TEST(Gradient, RampWithSobelStencil) {
    // Hand-applied kernel on f = x: rows contribute 1*2 + 2*2 + 1*2 = 8.
    const Image ramp = Image::generate(9, 7, [](int x, int) { return static_cast<double>(x); });
    const Gradient g = gradient(ramp, Stencil::Sobel);
    for_interior(9, 7, 1, [&](int x, int y) {
        EXPECT_EQ(g.fx(x, y), 8.0);
        EXPECT_EQ(g.fy(x, y), 0.0);
    });
}

TEST(Gradient, ConstantIsZeroEverywhere) {
    const Image c(6, 5, std::vector<double>(30, 0.7));
    for (const Stencil s : {Stencil::Sobel, Stencil::Central}) {
        const Gradient g = gradient(c, s);
        for (std::size_t i = 0; i < c.size(); ++i) {
            EXPECT_EQ(g.fx[i], 0.0);
            EXPECT_EQ(g.fy[i], 0.0);
        }
    }
}

TEST(Gradient, MatchesExplicitKernelsWithReplicateBorders) {
    for (unsigned seed = 1; seed <= 3; ++seed) {
        const Image f = synthetic::random_image(11, 8, seed);
        const Gradient sobel = gradient(f, Stencil::Sobel);
        const Gradient central = gradient(f, Stencil::Central);
        const Field sx = testing::correlate3x3(f.field(), kSobelX);
        const Field sy = testing::correlate3x3(f.field(), kSobelY);
        const Field cx = testing::correlate3x3(f.field(), kCentralX);
        const Field cy = testing::correlate3x3(f.field(), kCentralY);
        for (std::size_t i = 0; i < f.size(); ++i) {
            EXPECT_NEAR(sobel.fx[i], sx[i], 1e-14);
            EXPECT_NEAR(sobel.fy[i], sy[i], 1e-14);
            EXPECT_NEAR(central.fx[i], cx[i], 1e-15);
            EXPECT_NEAR(central.fy[i], cy[i], 1e-15);
        }
    }
}

TEST(Gradient, RejectsUndersizedImage) {
    EXPECT_THROW(gradient(Image(2, 5, std::vector<double>(10, 0.0)), Stencil::Sobel), Error);
    EXPECT_NO_THROW(gradient(Image(3, 3, std::vector<double>(9, 0.0)), Stencil::Sobel));
}

// =============================================================================
// hessian_maps
// =============================================================================

TEST(HessianMaps, BowlIsExactWithCentralStencil) {
    const DifferentialMaps m = hessian_maps(kBowl, Stencil::Central);
    for_interior(17, 17, 2, [&](int x, int y) {
        EXPECT_EQ(m.fxx(x, y), 2.0);
        EXPECT_EQ(m.fyy(x, y), 2.0);
        EXPECT_EQ(m.fxy(x, y), 0.0);
        EXPECT_EQ(m.det(x, y), 4.0);
    });
}

TEST(HessianMaps, SaddleIsExactWithCentralStencil) {
    const DifferentialMaps m = hessian_maps(kSaddle, Stencil::Central);
    for_interior(17, 17, 2, [&](int x, int y) { EXPECT_EQ(m.det(x, y), -4.0); });
}

TEST(HessianMaps, SobelScalesQuadraticsPositively) {
    // Sobel derivative of x^2 is 8 * 2x; applied twice the curvature gains 64.
    const DifferentialMaps m = hessian_maps(kBowl, Stencil::Sobel);
    for_interior(17, 17, 2, [&](int x, int y) {
        EXPECT_EQ(m.fxx(x, y), 128.0);
        EXPECT_EQ(m.fyy(x, y), 128.0);
        EXPECT_EQ(m.fxy(x, y), 0.0);
    });
}

TEST(HessianMaps, StoredFieldsAreConsistent) {
    const Image f = synthetic::random_image(20, 15, 4);
    const DifferentialMaps m = hessian_maps(f);
    const Gradient first = gradient(f, Stencil::Sobel);
    EXPECT_EQ(m.fx, first.fx);
    EXPECT_EQ(m.fy, first.fy);
    EXPECT_EQ(m.fxx, gradient(first.fx, Stencil::Sobel).fx);
    EXPECT_EQ(m.fxy, gradient(first.fx, Stencil::Sobel).fy);
    EXPECT_EQ(m.fyy, gradient(first.fy, Stencil::Sobel).fy);
    for (std::size_t i = 0; i < m.det.size(); ++i) {
        EXPECT_EQ(m.det[i], m.fxx[i] * m.fyy[i] - m.fxy[i] * m.fxy[i]);
        const double s = 1.0 + m.fx[i] * m.fx[i] + m.fy[i] * m.fy[i];
        EXPECT_EQ(m.curvature[i], m.det[i] / (s * s));
        if (m.det[i] != 0.0) {
            EXPECT_EQ(std::signbit(m.curvature[i]), std::signbit(m.det[i]));
        }
    }
}

TEST(HessianMaps, MixedDerivativeOrderDifferenceIsSmallInInterior) {
    const Image f = synthetic::blob_image(40, 36, {{18.5, 17.0, 6.0, 1.0}, {30.0, 9.0, 3.0, -0.5}});
    const DifferentialMaps m = hessian_maps(f, Stencil::Central);
    const Field yx = gradient(m.fy, Stencil::Central).fx;
    for_interior(f.width(), f.height(), 2,
                 [&](int x, int y) { EXPECT_NEAR(m.fxy(x, y), yx(x, y), 1e-12); });
}

TEST(HessianMaps, RejectsUndersizedImage) {
    EXPECT_THROW(hessian_maps(Image(4, 9, std::vector<double>(36, 0.0))), Error);
}

TEST(HessianMaps, DemoSignAgreesWithAnalyticOracle) {
    const oracle::GridSpec grid;  // 512 x 512 on [-3, 3]^2
    const auto surface = oracle::demo_surface();
    const oracle::Raster raster = oracle::rasterize(surface, grid);
    const Field exact = oracle::analytic_det(surface, grid);
    const DifferentialMaps m = hessian_maps(raster.image, Stencil::Central);

    double dmax = 0.0;
    for (const double d : exact.data()) dmax = std::max(dmax, std::abs(d));
    std::size_t considered = 0, agree = 0;
    for_interior(grid.nx, grid.ny, 2, [&](int x, int y) {
        if (std::abs(exact(x, y)) <= 0.01 * dmax) return;
        ++considered;
        agree += (exact(x, y) > 0) == (m.det(x, y) > 0) ? 1 : 0;
    });
    ASSERT_GT(considered, 100000u);
    EXPECT_GE(static_cast<double>(agree) / static_cast<double>(considered), 0.99);
}

// =============================================================================
// curvature_sign_field and invariances
// =============================================================================

TEST(CurvatureSign, QuadraticsAndConstant) {
    const auto bowl = curvature_sign_field(hessian_maps(kBowl, Stencil::Central));
    const auto saddle = curvature_sign_field(hessian_maps(kSaddle, Stencil::Central));
    for_interior(17, 17, 2, [&](int x, int y) {
        EXPECT_EQ(bowl(x, y), 1);
        EXPECT_EQ(saddle(x, y), -1);
    });
    const auto flat = curvature_sign_field(hessian_maps(Image(8, 8, std::vector<double>(64, 0.3))));
    for (const auto s : flat.data()) EXPECT_EQ(s, 0);
}

TEST(CurvatureSign, InvariantUnderPositiveIntensityScaling) {
    for (unsigned seed = 1; seed <= 3; ++seed) {
        const Image f = synthetic::random_image(32, 24, seed);
        for (const Stencil s : {Stencil::Sobel, Stencil::Central}) {
            const auto base = curvature_sign_field(hessian_maps(f, s));
            for (const double c : {0.5, 3.0, 100.0}) {
                EXPECT_EQ(curvature_sign_field(hessian_maps(testing::scaled(f, c), s)), base)
                    << "c=" << c;
            }
        }
    }
}

TEST(CurvatureSign, StencilChoiceAgreesOnQuadratics) {
    for (const Image* q : {&kBowl, &kSaddle}) {
        const auto a = curvature_sign_field(hessian_maps(*q, Stencil::Sobel));
        const auto b = curvature_sign_field(hessian_maps(*q, Stencil::Central));
        for_interior(17, 17, 2, [&](int x, int y) { EXPECT_EQ(a(x, y), b(x, y)); });
    }
}

TEST(Rotation, DeterminantInvariantUnder90DegreesExactOnIntegerImages) {
    for (unsigned seed = 1; seed <= 4; ++seed) {
        const Image f = integer_image(19, 13, seed);
        const Image r = testing::rotate90(f);
        for (const Stencil s : {Stencil::Sobel, Stencil::Central}) {
            const DifferentialMaps mf = hessian_maps(f, s);
            const DifferentialMaps mr = hessian_maps(r, s);
            const Field rotated_det = testing::rotate90(mf.det);
            const Field rotated_fxx = testing::rotate90(mf.fxx);
            const Field rotated_fyy = testing::rotate90(mf.fyy);
            const Field rotated_fxy = testing::rotate90(mf.fxy);
            for_interior(r.width(), r.height(), 2, [&](int x, int y) {
                EXPECT_EQ(mr.det(x, y), rotated_det(x, y));
                EXPECT_EQ(mr.fxx(x, y), rotated_fyy(x, y));
                EXPECT_EQ(mr.fyy(x, y), rotated_fxx(x, y));
                EXPECT_EQ(mr.fxy(x, y), -rotated_fxy(x, y));
            });
        }
    }
}

TEST(Rotation, DeterminantInvariantUnder90DegreesOnRealImages) {
    for (unsigned seed = 1; seed <= 4; ++seed) {
        const Image f = synthetic::random_image(24, 31, seed);
        for (const Stencil s : {Stencil::Sobel, Stencil::Central}) {
            const Field rotated = testing::rotate90(hessian_maps(f, s).det);
            const DifferentialMaps mr = hessian_maps(testing::rotate90(f), s);
            for_interior(mr.width(), mr.height(), 2, [&](int x, int y) {
                EXPECT_NEAR(mr.det(x, y), rotated(x, y), 1e-9);
            });
        }
    }
}

}  // namespace
}  // namespace convexseg
