#include "logspiral/closed_form.hpp"
#include "logspiral/errors.hpp"
#include "logspiral/geodesic_polar.hpp"
#include "logspiral/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace ls = logspiral;
using std::numbers::pi;

namespace {

ls::ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const ls::GeometryError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no GeometryError thrown";
    return ls::ErrorKind::Unsupported;
}

} // namespace

TEST(PolarMetric, Examples)
{
    EXPECT_NEAR(ls::polar_metric(-1.0).g(1.0), 1.3810978455418157, 4e-16);
    EXPECT_EQ(ls::polar_metric(0.0).sqrt_g(2.0), 2.0);
    EXPECT_NEAR(ls::polar_metric(1.0).sqrt_g(pi / 2), 1.0, 1e-16);
    EXPECT_EQ(ls::polar_metric(3.0).sqrt_g(0.0), 0.0);
    EXPECT_EQ(ls::polar_metric(3.0).sqrt_g_r(0.0), 1.0);
    EXPECT_EQ(kind_of([] { (void)ls::polar_metric(1.0).sqrt_g(4.0); }), ls::ErrorKind::DomainError);
    EXPECT_EQ(kind_of([] { (void)ls::polar_metric(INFINITY); }), ls::ErrorKind::DomainError);
}

TEST(PolarMetric, SeriesMatchesDirectAtThreshold)
{
    for (double K : {-1.0, 1.0}) {
        const auto m = ls::polar_metric(K);
        const double r_in = std::sqrt(0.99e-4);
        const double r_out = std::sqrt(1.01e-4);
        const double s = std::sqrt(std::abs(K));
        const auto direct = [&](double r) { return K > 0 ? std::sin(r * s) / s : std::sinh(r * s) / s; };
        EXPECT_NEAR(m.sqrt_g(r_in) / direct(r_in), 1.0, 1e-15);
        EXPECT_NEAR(m.sqrt_g(r_out) / direct(r_out), 1.0, 1e-15);
    }
}

TEST(CircleCurvature, Examples)
{
    EXPECT_NEAR(ls::circle_curvature(0.0, 0.8), 1 / 0.8, 1e-15);
    const double R = 2.0;
    for (double r : {0.3, 1.7}) {
        EXPECT_NEAR(ls::circle_curvature(-1 / (R * R), r), 1 / (R * std::tanh(r / R)), 1e-14);
        EXPECT_NEAR(ls::circle_curvature(1 / (R * R), r), 1 / (R * std::tan(r / R)), 1e-14);
    }
}

TEST(SpiralTrace, Examples)
{
    for (double K : {-2.0, 0.0, 1.0})
        EXPECT_EQ(ls::spiral_chart_trace(K, pi / 2, 0.5, 0.3, 1.2).u, 0.3);
    EXPECT_NEAR(ls::spiral_chart_trace(0.0, pi / 4, 1.0, 0.0, std::exp(1.0)).u, 1.0, 1e-15);
    EXPECT_NEAR(ls::spiral_chart_trace(1.0, 1.0, 0.3, 0.0, 1.2).u, 0.96954892798838269, 1e-14);
    EXPECT_NEAR(ls::spiral_chart_trace(-1.0, 1.0, 0.3, 0.0, 1.2).u, 0.82375087253993380, 1e-14);
}

TEST(SpiralTrace, SphereLoxodromeForm)
{
    const double R = 1.5, theta = 0.9, r0 = 0.4;
    const double cot = 1 / std::tan(theta);
    for (double r : {0.2, 1.0, 3.0, 4.5}) {
        const double expected = cot * (std::log(std::tan(r / (2 * R))) - std::log(std::tan(r0 / (2 * R))));
        EXPECT_NEAR(ls::spiral_chart_trace(1 / (R * R), theta, r0, 0.0, r).u, expected, 1e-13);
    }
}

TEST(SpiralTrace, MatchesQuadrature)
{
    for (double K : {-4.0, -1e-3, 0.0, 1e-3, 1.0}) {
        const auto m = ls::polar_metric(K);
        for (double theta : {0.4, 1.2, 2.7}) {
            const double r0 = 0.25, r = K > 0 ? 2.5 : 3.0;
            const double cot = 1 / std::tan(theta);
            const double quad =
                ls::numerics::integrate([&](double s) { return cot / m.sqrt_g(s); }, r0, r, 1e-13);
            EXPECT_NEAR(ls::spiral_chart_trace(K, theta, r0, 0.0, r).u, quad, 1e-10 * (1 + std::abs(quad)));
        }
    }
}

TEST(SpiralTrace, Domain)
{
    EXPECT_EQ(kind_of([] { (void)ls::spiral_chart_trace(0.0, 5e-4, 1.0, 0.0, 2.0); }),
              ls::ErrorKind::DomainError);
    EXPECT_EQ(kind_of([] { (void)ls::spiral_chart_trace(0.0, pi - 5e-4, 1.0, 0.0, 2.0); }),
              ls::ErrorKind::DomainError);
    EXPECT_EQ(kind_of([] { (void)ls::spiral_chart_trace(1.0, 1.0, 1.0, 0.0, 3.5); }),
              ls::ErrorKind::DomainError);
    EXPECT_EQ(kind_of([] { (void)ls::spiral_chart_trace(0.0, 1.0, 0.0, 0.0, 1.0); }),
              ls::ErrorKind::DomainError);
    const ls::PolarSpiral capped{-1.0, 1.0, 1.0, 0.0, 2.0};
    EXPECT_EQ(kind_of([&] { (void)ls::spiral_chart_trace(capped, 2.5); }), ls::ErrorKind::DomainError);
    EXPECT_NO_THROW((void)ls::spiral_chart_trace(capped, 2.0));
}

TEST(EmbedPolarTrace, ChartMapsAndUnsupported)
{
    const std::vector<ls::PolarTracePoint> pts = {{0.5, 0.1}, {1.0, 0.2}};
    const auto sphere = ls::embed_polar_trace(ls::make_sphere(2.0), pts);
    EXPECT_EQ(sphere[1].u, 0.2);
    EXPECT_EQ(sphere[1].v, 0.5);
    const auto plane = ls::embed_polar_trace(ls::make_plane(), pts);
    EXPECT_EQ(plane[0].v, 0.5);
    EXPECT_EQ(kind_of([&] { (void)ls::embed_polar_trace(ls::make_pseudosphere(1.0), pts); }),
              ls::ErrorKind::Unsupported);
    EXPECT_EQ(kind_of([] {
                  (void)ls::embed_polar_spiral(ls::make_pseudosphere(1.0), {-1.0, 1.0, 0.5, 0.0}, 0.5, 1.0);
              }),
              ls::ErrorKind::Unsupported);
    EXPECT_EQ(kind_of([] { (void)ls::embed_polar_spiral(ls::make_sphere(1.0), {4.0, 1.0, 0.5, 0.0}, 0.5, 1.0); }),
              ls::ErrorKind::BadParameter);
}

TEST(EmbedPolarTrace, RadialTraceIsMeridian)
{
    const auto c = ls::embed_polar_spiral(ls::make_sphere(1.0), {1.0, pi / 2, 0.5, 0.8}, 0.2, 2.5);
    for (double r : {0.3, 1.4, 2.4}) {
        EXPECT_EQ(c.at(r).u, 0.8);
        EXPECT_NEAR(ls::geodesic_curvature_numeric(c, r), 0.0, 1e-10);
    }
}

TEST(EmbedPolarTrace, CurvatureMatchesClosedForm)
{
    // Outward traversal measures angle -theta; the numeric k is cos(theta) f(K, r) either way.
    const double R = 2.0, theta = 1.1;
    const auto c = ls::embed_polar_spiral(ls::make_sphere(R), {1 / (R * R), theta, 1.0, 0.0}, 0.3, 5.5);
    for (double r : {0.5, 2.0, 4.0, 5.2}) {
        const double k = ls::geodesic_curvature_numeric(c, r);
        EXPECT_NEAR(k, ls::k_theta(1 / (R * R), r, theta), 1e-8 * (1 + std::abs(k)));
        EXPECT_NEAR(ls::angle_to_parallel(c, r), -theta, 1e-12);
    }
    const auto p = ls::embed_polar_spiral(ls::make_plane(), {0.0, theta, 1.0, 0.0}, 0.3, 5.0);
    for (double r : {0.5, 2.0, 4.0})
        EXPECT_NEAR(ls::geodesic_curvature_numeric(p, r), std::cos(theta) / r, 1e-9);
}
