#include "logspiral/errors.hpp"
#include "logspiral/liouville.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace ls = logspiral;
using std::numbers::pi;

TEST(Liouville, SphereLoxodrome)
{
    const auto c = ls::sphere_loxodrome(1.0, 1.0);
    for (double t : {0.2, 0.7, 1.3}) {
        const auto b = ls::liouville_breakdown(c, t);
        EXPECT_NEAR(b.dtheta_ds, 0.0, 1e-7);
        EXPECT_NEAR(b.k2, 0.0, 1e-8);
        EXPECT_LT(b.residual, 1e-6);
        const double v = 2 * t;
        EXPECT_NEAR(b.k_direct, std::cos(v) / std::sin(v) * std::cos(pi / 4), 1e-8);
    }
}

TEST(Liouville, PlaneCircleIsItsOwnParallel)
{
    const auto c = ls::coordinate_curve(ls::make_plane(), ls::CoordinateCurve::parallel, 1.5);
    const auto b = ls::liouville_breakdown(c, 0.4);
    EXPECT_EQ(b.theta, 0.0);
    EXPECT_NEAR(b.k_direct, b.k1, 1e-12);
    EXPECT_NEAR(b.k1, 1 / 1.5, 1e-10);
}

TEST(Liouville, PseudosphereLoxodrome)
{
    const double R = 2.0, theta = pi / 3;
    const auto c = ls::pseudosphere_loxodrome(R, theta, 0.0);
    for (double v : {0.3, 0.9, 1.4}) {
        const auto b = ls::liouville_breakdown(c, v);
        EXPECT_NEAR(b.k1, -1 / R, 1e-9);
        EXPECT_NEAR(b.k2, 0.0, 1e-8);
        EXPECT_NEAR(b.theta, theta, 1e-8);
        EXPECT_NEAR(b.k_liouville, -std::cos(theta) / R, 1e-8);
        EXPECT_LT(b.residual, 1e-8);
    }
}

TEST(Liouville, ReversedDirectionAndFlippedPatch)
{
    const auto c = ls::plane_log_spiral(0.7);
    for (const auto& curve :
         {c.with_direction(-1), c.with_patch(c.patch().with_orientation(1)), c}) {
        const auto b = ls::liouville_breakdown(curve, 0.3);
        EXPECT_LT(b.residual, 1e-9);
    }
    const auto fwd = ls::liouville_breakdown(c, 0.3);
    const auto rev = ls::liouville_breakdown(c.with_direction(-1), 0.3);
    EXPECT_NEAR(fwd.k_direct, -rev.k_direct, 1e-12);
}

TEST(Liouville, NonOrthogonalChartRejected)
{
    // Sheared plane (u + v, v, 0): F = 1.
    const ls::SurfacePatch sheared(
        ls::SurfaceKind::revolution, [](double u, double v) { return ls::Vec3{u + v, v, 0.0}; },
        [](double u, double v) {
            return ls::Jet2{{u + v, v, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
        },
        {ls::Interval::whole(), ls::Interval::whole()}, 1, 0.0);
    const ls::ChartCurve line(
        sheared, [](double t) { return ls::ChartPoint{t, 0.5 * t}; }, ls::Interval::whole());
    try {
        (void)ls::liouville_breakdown(line, 0.2);
        FAIL() << "expected NotOrthogonal";
    } catch (const ls::GeometryError& e) {
        EXPECT_EQ(e.kind(), ls::ErrorKind::NotOrthogonal);
    }
}
